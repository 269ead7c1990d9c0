#include "topochrom/certificate_io.hpp"

#include <fstream>
#include <iostream>

#include "topochrom/error.hpp"

namespace topochrom {

using nlohmann::json;

namespace {

json code_to_json(const VertexCode& v, bool implicit) {
  if (!implicit && v.size() == 1) return v[0];
  return json(v);
}

VertexCode code_from_json(const json& j) {
  if (j.is_number_integer()) return {j.get<int>()};
  if (j.is_array()) {
    VertexCode out;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw FormatError("vertex arrays must hold integers");
      out.push_back(x.get<int>());
    }
    return out;
  }
  throw FormatError("vertex must be an integer or an integer array, got " + j.dump());
}

std::string pair_key(const TreePair& p) { return std::to_string(p.first) + "," + std::to_string(p.second); }

TreePair pair_from_key(const std::string& key) {
  auto comma = key.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(key);
    std::size_t used = 0;
    auto i = std::stoul(key.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(key);
    auto tail = key.substr(comma + 1);
    auto j = std::stoul(tail, &used);
    if (used != tail.size()) throw std::invalid_argument(key);
    return {i, j};
  } catch (const std::logic_error&) {
    throw FormatError("pair key '" + key + "' must look like \"i,j\"");
  }
}

const json& member(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

json host_to_json(const HostSpec& host) {
  json j{{"family", host.family}, {"params", host.params}};
  if (!host.base.empty()) j["base"] = host_to_json(host.base.front());
  if (host.family == "graph") {
    json edges = json::array();
    for (auto [u, v] : host.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
  }
  return j;
}

HostSpec host_from_json(const json& j) {
  HostSpec host;
  const auto& family = member(j, "family");
  if (!family.is_string()) throw FormatError("host family must be a string");
  host.family = family.get<std::string>();
  if (j.contains("params")) {
    if (!j.at("params").is_array()) throw FormatError("host params must be an array");
    for (const auto& p : j.at("params")) {
      if (!p.is_number_integer()) throw FormatError("host params must be integers");
      host.params.push_back(p.get<int>());
    }
  }
  if (j.contains("base")) host.base.push_back(host_from_json(j.at("base")));
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
        throw FormatError("host edges must be [u, v] pairs of non-negative integers");
      host.edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
  }
  return host;
}

json certificate_to_json(const OddMinorCertificate& cert) {
  const bool implicit = cert.host.implicit();
  json trees = json::array();
  for (const auto& tree : cert.trees) {
    json vertices = json::array();
    for (const auto& v : tree.vertices) vertices.push_back(code_to_json(v, implicit));
    json edges = json::array();
    for (const auto& [u, v] : tree.edges) edges.push_back({code_to_json(u, implicit), code_to_json(v, implicit)});
    trees.push_back({{"vertices", std::move(vertices)}, {"edges", std::move(edges)}});
  }
  json coloring = json::object();
  for (const auto& [v, c] : cert.coloring) coloring[code_to_json(v, implicit).dump()] = c;
  json connectors = json::object();
  for (const auto& [pair, edge] : cert.connectors)
    connectors[pair_key(pair)] = {code_to_json(edge.first, implicit), code_to_json(edge.second, implicit)};
  return {{"host", host_to_json(cert.host)},
          {"kind", "odd_minor"},
          {"trees", std::move(trees)},
          {"coloring", std::move(coloring)},
          {"connectors", std::move(connectors)}};
}

json certificate_to_json(const OddTopologicalCertificate& cert) {
  const bool implicit = cert.host.implicit();
  json branching = json::array();
  for (const auto& v : cert.branching) branching.push_back(code_to_json(v, implicit));
  json paths = json::object();
  for (const auto& [pair, path] : cert.paths) {
    json seq = json::array();
    for (const auto& v : path) seq.push_back(code_to_json(v, implicit));
    paths[pair_key(pair)] = std::move(seq);
  }
  return {{"host", host_to_json(cert.host)},
          {"kind", "odd_topological"},
          {"branching", std::move(branching)},
          {"paths", std::move(paths)}};
}

Certificate certificate_from_json(const json& j) {
  const auto& kind = member(j, "kind");
  if (!kind.is_string()) throw FormatError("\"kind\" must be a string");
  HostSpec host = host_from_json(member(j, "host"));

  if (kind == "odd_topological") {
    OddTopologicalCertificate cert;
    cert.host = std::move(host);
    for (const auto& v : member(j, "branching")) cert.branching.push_back(code_from_json(v));
    const auto& paths = member(j, "paths");
    if (!paths.is_object()) throw FormatError("\"paths\" must be an object");
    for (const auto& [key, seq] : paths.items()) {
      if (!seq.is_array()) throw FormatError("path " + key + " must be an array");
      std::vector<VertexCode> path;
      for (const auto& v : seq) path.push_back(code_from_json(v));
      cert.paths[pair_from_key(key)] = std::move(path);
    }
    return cert;
  }

  if (kind == "odd_minor") {
    OddMinorCertificate cert;
    cert.host = std::move(host);
    for (const auto& t : member(j, "trees")) {
      Tree tree;
      for (const auto& v : member(t, "vertices")) tree.vertices.push_back(code_from_json(v));
      if (t.contains("edges"))
        for (const auto& e : t.at("edges")) {
          if (!e.is_array() || e.size() != 2) throw FormatError("tree edges must be [u, v] pairs");
          tree.edges.emplace_back(code_from_json(e[0]), code_from_json(e[1]));
        }
      cert.trees.push_back(std::move(tree));
    }
    const auto& coloring = member(j, "coloring");
    if (!coloring.is_object()) throw FormatError("\"coloring\" must be an object");
    for (const auto& [key, c] : coloring.items()) {
      json parsed = json::parse(key, nullptr, false);
      if (parsed.is_discarded()) throw FormatError("coloring key '" + key + "' is not a vertex");
      if (!c.is_number_integer()) throw FormatError("color of " + key + " must be an integer");
      cert.coloring[code_from_json(parsed)] = c.get<int>();
    }
    if (j.contains("connectors")) {
      if (!j.at("connectors").is_object()) throw FormatError("\"connectors\" must be an object");
      for (const auto& [key, e] : j.at("connectors").items()) {
        if (!e.is_array() || e.size() != 2) throw FormatError("connector " + key + " must be [u, v]");
        cert.connectors[pair_from_key(key)] = {code_from_json(e[0]), code_from_json(e[1])};
      }
    }
    return cert;
  }
  throw FormatError("unknown certificate kind " + kind.dump());
}

std::string dump_certificate(const Certificate& cert) {
  return std::visit([](const auto& c) { return certificate_to_json(c).dump(); }, cert);
}

Certificate read_certificate(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    return certificate_from_json(j);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed certificate: ") + e.what());
  }
}

Certificate read_certificate_file(const std::string& path) {
  if (path == "-") return read_certificate(std::cin);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open certificate '" + path + "'");
  return read_certificate(in);
}

}  // namespace topochrom
