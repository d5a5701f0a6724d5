#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tswap/core.hpp"

namespace tswap {

inline constexpr int kFileFormat = 1;

/// Instance JSON:
///   {"format": 1, "n": N, "edges": [[u,v],...], "tokens": [...],
///    "vertex_colours": [...], "token_colours": [...], "weights": {"c": w}}
/// The last three are optional; token_colours is indexed by start vertex.
/// Errors are ParseError with "line:col: message" when the text itself is
/// malformed and a JSON-pointer-like path otherwise.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

struct SolutionMeta {
  std::string algorithm;
  std::optional<std::uint64_t> states_expanded;
  /// Free-form algorithm trace, stored verbatim as JSON text.
  std::optional<std::string> trace_json;
};

struct Solution {
  Cost cost = 0;
  std::int64_t length = 0;
  SwapSequence swaps;
  SolutionMeta meta;
};

/// Solution JSON: {"format": 1, "cost", "length", "swaps": [[u,v],...],
/// "meta": {"algorithm", "states_expanded"?, "trace"?}}
Solution parse_solution(std::string_view text);
std::string serialize_solution(const Solution& sol);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace tswap
