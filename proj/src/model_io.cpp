#include "znp/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "znp/errors.hpp"

namespace znp {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw InvalidModel("unknown key '" + key + "' in " + where);
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidModel("missing key '" + key + "' in " + where);
  return *it;
}

Rational parse_length(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<std::int64_t>())));
  throw InvalidModel("length in " + where + " must be an integer or a \"p/q\" string");
}

}  // namespace

QuotientGraph parse_model(const json& doc) {
  if (!doc.is_object()) throw InvalidModel("model must be a JSON object");
  reject_unknown_keys(doc, {"rank", "base", "vertices", "edges"}, "model");
  const json& rank_j = require(doc, "rank", "model");
  if (!rank_j.is_number_integer() || rank_j.get<std::int64_t>() < 1) {
    throw InvalidModel("rank must be a positive integer");
  }
  const auto rank = static_cast<std::size_t>(rank_j.get<std::int64_t>());
  const json& verts = require(doc, "vertices", "model");
  if (!verts.is_array()) throw InvalidModel("vertices must be an array");
  std::vector<std::string> names;
  for (const auto& v : verts) {
    if (!v.is_string()) throw InvalidModel("vertex ids must be strings");
    names.push_back(v.get<std::string>());
  }
  auto index_of = [&](const json& v, const std::string& where) -> std::size_t {
    if (!v.is_string()) throw InvalidModel(where + " must be a vertex id string");
    auto it = std::find(names.begin(), names.end(), v.get<std::string>());
    if (it == names.end()) throw InvalidModel("unknown vertex id '" + v.get<std::string>() + "' in " + where);
    return static_cast<std::size_t>(it - names.begin());
  };
  const std::size_t base = index_of(require(doc, "base", "model"), "base");
  const json& edges_j = require(doc, "edges", "model");
  if (!edges_j.is_array()) throw InvalidModel("edges must be an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edges_j.size(); ++i) {
    const json& e = edges_j[i];
    const std::string where = "edge " + std::to_string(i);
    if (!e.is_object()) throw InvalidModel(where + " must be an object");
    reject_unknown_keys(e, {"from", "to", "length", "voltage"}, where);
    Edge edge;
    edge.tail = index_of(require(e, "from", where), where + ".from");
    edge.head = index_of(require(e, "to", where), where + ".to");
    edge.length = parse_length(require(e, "length", where), where);
    const json& volt = require(e, "voltage", where);
    if (!volt.is_array()) throw InvalidModel(where + ".voltage must be an array");
    LatticeVector::Storage coords;
    for (const auto& c : volt) {
      if (!c.is_number_integer()) throw InvalidModel(where + ".voltage entries must be integers");
      coords.push_back(c.get<std::int64_t>());
    }
    edge.voltage = LatticeVector(std::move(coords));
    edges.push_back(std::move(edge));
  }
  return QuotientGraph(rank, std::move(names), std::move(edges), base);
}

QuotientGraph load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModel("cannot open model file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw InvalidModel(std::string("model is not valid JSON: ") + e.what());
  }
  return parse_model(doc);
}

json model_to_json(const QuotientGraph& g) {
  json doc;
  doc["rank"] = g.rank();
  doc["base"] = g.vertex_names()[g.base()];
  doc["vertices"] = g.vertex_names();
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json volt = json::array();
    for (std::size_t i = 0; i < e.voltage.rank(); ++i) volt.push_back(e.voltage[i]);
    edges.push_back({{"from", g.vertex_names()[e.tail]},
                     {"to", g.vertex_names()[e.head]},
                     {"length", to_string(e.length)},
                     {"voltage", volt}});
  }
  doc["edges"] = edges;
  return doc;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace znp
