#include "qtl/json_io.hpp"

#include <fstream>

#include "qtl/generators.hpp"

namespace qtl {
namespace {

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\" field");
  }
  return doc.at(key);
}

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open \"" + path + "\"");
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "invalid JSON in \"" + path + "\": " + e.what());
  }
}

}  // namespace

Quantale quantale_from_json(const nlohmann::json& doc, int size_cap) {
  const nlohmann::json& elements = require(doc, "elements");
  if (!elements.is_array() || elements.empty()) {
    throw Error(ErrorCode::ParseError, "\"elements\" must be a nonempty array of labels");
  }
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (const auto& e : elements) {
    if (!e.is_string()) {
      throw Error(ErrorCode::ParseError, "\"elements\" must contain only strings");
    }
    labels.push_back(e.get<std::string>());
  }
  const int n = static_cast<int>(labels.size());

  const nlohmann::json& leq = require(doc, "leq");
  if (!leq.is_array()) {
    throw Error(ErrorCode::ParseError, "\"leq\" must be an array of [i, j] pairs");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(leq.size());
  for (const auto& p : leq) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw Error(ErrorCode::ParseError, "each \"leq\" entry must be a pair of indices");
    }
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }

  const nlohmann::json& mul = require(doc, "mul");
  if (!mul.is_array() || static_cast<int>(mul.size()) != n) {
    throw Error(ErrorCode::ParseError, "\"mul\" must be a " + std::to_string(n) + "x" +
                                           std::to_string(n) + " table");
  }
  std::vector<int> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : mul) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::ParseError, "\"mul\" rows must each hold " + std::to_string(n) +
                                             " indices");
    }
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        throw Error(ErrorCode::ParseError, "\"mul\" entries must be element indices");
      }
      table.push_back(v.get<int>());
    }
  }

  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) {
      throw Error(ErrorCode::ParseError, "\"name\" must be a string");
    }
    name = doc.at("name").get<std::string>();
  }

  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(ErrorCode::InvalidInput,
                  "\"leq\" pair [" + std::to_string(a) + ", " + std::to_string(b) +
                      "] indexes outside \"elements\"");
    }
  }
  for (int v : table) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::InvalidInput,
                  "\"mul\" entry " + std::to_string(v) + " indexes outside \"elements\"");
    }
  }

  auto built = Lattice::build_with_perm(std::move(labels), pairs, size_cap);
  return Quantale::build(std::move(built.lattice), permuted_table(table, built.perm),
                         std::move(name));
}

nlohmann::ordered_json quantale_to_json(const Quantale& q) {
  nlohmann::ordered_json doc;
  doc["name"] = q.name();
  doc["elements"] = q.lattice().labels();
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (int x = 0; x < q.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) {
      if (q.lattice().covers(x, y)) pairs.push_back({x, y});
    }
  }
  doc["leq"] = std::move(pairs);
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (int x = 0; x < q.size(); ++x) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int y = 0; y < q.size(); ++y) row.push_back(q.mul(x, y));
    table.push_back(std::move(row));
  }
  doc["mul"] = std::move(table);
  return doc;
}

Quantale load_quantale(const std::string& path, int size_cap) {
  return quantale_from_json(parse_file(path), size_cap);
}

QuantaleHom hom_from_json(const nlohmann::json& doc,
                          const std::function<Quantale(const std::string&)>& resolve) {
  const nlohmann::json& source = require(doc, "source");
  const nlohmann::json& target = require(doc, "target");
  if (!source.is_string() || !target.is_string()) {
    throw Error(ErrorCode::ParseError, "\"source\" and \"target\" must be quantale specs");
  }
  const nlohmann::json& map_field = require(doc, "map");
  if (!map_field.is_array()) {
    throw Error(ErrorCode::ParseError, "\"map\" must be an array of target indices");
  }
  std::vector<int> map;
  map.reserve(map_field.size());
  for (const auto& v : map_field) {
    if (!v.is_number_integer()) {
      throw Error(ErrorCode::ParseError, "\"map\" entries must be element indices");
    }
    map.push_back(v.get<int>());
  }
  return QuantaleHom::build(resolve(source.get<std::string>()),
                            resolve(target.get<std::string>()), std::move(map));
}

QuantaleHom load_hom(const std::string& path,
                     const std::function<Quantale(const std::string&)>& resolve) {
  return hom_from_json(parse_file(path), resolve);
}

nlohmann::ordered_json hom_to_json(const QuantaleHom& hom) {
  nlohmann::ordered_json doc;
  doc["source"] = hom.source().name();
  doc["target"] = hom.target().name();
  doc["map"] = hom.map();
  return doc;
}

Quantale resolve_quantale(const std::string& spec, int size_cap) {
  if (spec.rfind("gen:", 0) != 0) return load_quantale(spec, size_cap);

  const size_t second = spec.find(':', 4);
  if (second == std::string::npos) {
    throw Error(ErrorCode::InvalidInput,
                "generator spec \"" + spec + "\" needs the form gen:<family>:<n>");
  }
  const std::string family = spec.substr(4, second - 4);
  const std::string arg = spec.substr(second + 1);
  long long n = 0;
  try {
    size_t consumed = 0;
    n = std::stoll(arg, &consumed);
    if (consumed != arg.size()) throw std::invalid_argument(arg);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput,
                "generator spec \"" + spec + "\" has a non-numeric parameter");
  }
  if (n < 0 || n > 1'000'000) {
    throw Error(ErrorCode::InvalidInput, "generator parameter out of range in \"" + spec + "\"");
  }
  if (family == "chain") return gen_chain(static_cast<int>(n), size_cap);
  if (family == "powerset") return gen_powerset(static_cast<int>(n), size_cap);
  if (family == "zn") return gen_zn(static_cast<int>(n), size_cap);
  throw Error(ErrorCode::InvalidInput, "unknown generator family in \"" + spec + "\"");
}

}  // namespace qtl
