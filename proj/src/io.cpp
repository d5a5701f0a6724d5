#include "tswap/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tswap {

using nlohmann::json;

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

// Line of the first occurrence of a key, for diagnostics on well-formed
// JSON with bad content.
std::string key_location(std::string_view text, const std::string& key) {
  const auto at = text.find("\"" + key + "\"");
  if (at == std::string_view::npos) return "1:1";
  return line_col(text, at + 1);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    // drop the library prefix "[json.exception.parse_error.101] "
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw Error(ErrorCode::ParseError, line_col(text, e.byte) + ": " + msg);
  }
}

[[noreturn]] void fail(std::string_view text, const std::string& key,
                       const std::string& msg) {
  throw Error(ErrorCode::ParseError,
              key_location(text, key) + ": /" + key + ": " + msg);
}

void check_format(std::string_view text, const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::ParseError, "1:1: top level must be an object");
  }
  if (doc.contains("format") &&
      (!doc["format"].is_number_integer() || doc["format"].get<int>() != kFileFormat)) {
    fail(text, "format", "unsupported format, expected " + std::to_string(kFileFormat));
  }
}

std::int64_t get_int(std::string_view text, const json& v, const std::string& key) {
  if (!v.is_number_integer()) fail(text, key, "expected an integer");
  return v.get<std::int64_t>();
}

std::vector<int> int_array(std::string_view text, const json& doc,
                           const std::string& key) {
  const json& a = doc.at(key);
  if (!a.is_array()) fail(text, key, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : a) out.push_back(static_cast<int>(get_int(text, x, key)));
  return out;
}

std::vector<Edge> edge_array(std::string_view text, const json& doc,
                             const std::string& key) {
  const json& a = doc.at(key);
  if (!a.is_array()) fail(text, key, "expected an array of [u, v] pairs");
  std::vector<Edge> out;
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2) fail(text, key, "expected [u, v] pairs");
    out.push_back({static_cast<int>(get_int(text, e[0], key)),
                   static_cast<int>(get_int(text, e[1], key))});
  }
  return out;
}

json edges_json(std::span<const Edge> edges) {
  json a = json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  check_format(text, doc);
  for (const char* key : {"n", "edges", "tokens"}) {
    if (!doc.contains(key)) {
      throw Error(ErrorCode::ParseError,
                  std::string("1:1: missing required field /") + key);
    }
  }
  const auto n = get_int(text, doc["n"], "n");
  if (n < 0 || n > (1 << 24)) fail(text, "n", "vertex count out of range");
  auto edges = edge_array(text, doc, "edges");
  auto tokens = int_array(text, doc, "tokens");

  std::optional<Colouring> colouring;
  const bool vc = doc.contains("vertex_colours");
  const bool tc = doc.contains("token_colours");
  if (vc != tc) {
    fail(text, vc ? "vertex_colours" : "token_colours",
         "vertex_colours and token_colours must appear together");
  }
  if (vc) {
    colouring = Colouring{int_array(text, doc, "vertex_colours"),
                          int_array(text, doc, "token_colours")};
  }
  std::optional<WeightTable> weights;
  if (doc.contains("weights")) {
    const json& w = doc["weights"];
    if (!w.is_object()) fail(text, "weights", "expected an object {colour: weight}");
    WeightTable table;
    for (const auto& [key, value] : w.items()) {
      Colour c;
      try {
        std::size_t used = 0;
        c = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(text, "weights", "colour key '" + key + "' is not an integer");
      }
      table.weight[c] = get_int(text, value, "weights");
    }
    weights = std::move(table);
  }

  try {
    Tree tree(static_cast<int>(n), std::move(edges));
    return make_instance(std::move(tree), std::move(tokens), std::move(colouring),
                         std::move(weights));
  } catch (const Error& e) {
    std::string key = "tokens";
    if (e.code() == ErrorCode::NotATree) key = "edges";
    if (e.code() == ErrorCode::ColourCountMismatch) key = "vertex_colours";
    if (std::string(e.what()).find("weight") != std::string::npos) key = "weights";
    throw Error(ErrorCode::ParseError, key_location(text, key) + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["format"] = kFileFormat;
  doc["n"] = inst.tree.size();
  doc["edges"] = edges_json(inst.tree.edges());
  doc["tokens"] = inst.start;
  if (inst.colouring) {
    doc["vertex_colours"] = inst.colouring->vertex_colour;
    doc["token_colours"] = inst.colouring->token_colour;
  }
  if (inst.weights) {
    json w = json::object();
    for (const auto& [c, value] : inst.weights->weight) w[std::to_string(c)] = value;
    doc["weights"] = w;
  }
  return doc.dump() + "\n";
}

Solution parse_solution(std::string_view text) {
  const json doc = parse_json(text);
  check_format(text, doc);
  if (!doc.contains("swaps")) {
    throw Error(ErrorCode::ParseError, "1:1: missing required field /swaps");
  }
  Solution sol;
  sol.swaps = edge_array(text, doc, "swaps");
  sol.length = doc.contains("length") ? get_int(text, doc["length"], "length")
                                      : static_cast<std::int64_t>(sol.swaps.size());
  if (doc.contains("cost")) sol.cost = get_int(text, doc["cost"], "cost");
  if (doc.contains("meta")) {
    const json& meta = doc["meta"];
    if (!meta.is_object()) fail(text, "meta", "expected an object");
    if (meta.contains("algorithm") && meta["algorithm"].is_string()) {
      sol.meta.algorithm = meta["algorithm"].get<std::string>();
    }
    if (meta.contains("states_expanded")) {
      sol.meta.states_expanded =
          static_cast<std::uint64_t>(get_int(text, meta["states_expanded"], "states_expanded"));
    }
    if (meta.contains("trace")) sol.meta.trace_json = meta["trace"].dump();
  }
  return sol;
}

std::string serialize_solution(const Solution& sol) {
  json doc;
  doc["format"] = kFileFormat;
  doc["cost"] = sol.cost;
  doc["length"] = sol.length;
  doc["swaps"] = edges_json(sol.swaps);
  json meta;
  meta["algorithm"] = sol.meta.algorithm;
  if (sol.meta.states_expanded) meta["states_expanded"] = *sol.meta.states_expanded;
  if (sol.meta.trace_json) meta["trace"] = json::parse(*sol.meta.trace_json);
  doc["meta"] = meta;
  return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tswap
