#include "fkglab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fkglab {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

int get_dim(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw std::invalid_argument(std::string("missing integer field ") + field);
  int n = j[field].get<int>();
  if (n < 0 || n > kMaxDim)
    throw std::invalid_argument(std::string(field) + " out of range");
  return n;
}

std::uint32_t parse_key(const std::string& key, int n) {
  if (static_cast<int>(key.size()) != n)
    throw std::invalid_argument("point string " + key + " has length " +
                                std::to_string(key.size()) + ", expected " +
                                std::to_string(n));
  return parse_point(key).bits;
}

}  // namespace

std::string measure_to_json(const Measure& mu) {
  json weights = json::object();
  for (std::uint32_t v = 0; v < mu.size(); ++v)
    if (mu.at(v) != 0)
      weights[point_str(Point{v, mu.dim()})] = rat_str(mu.at(v));
  json j;
  j["n"] = mu.dim();
  j["weights"] = weights;
  return j.dump(2) + "\n";
}

Measure measure_from_json(const std::string& text) {
  json j = parse_json(text);
  int n = get_dim(j, "n");
  if (!j.contains("weights") || !j["weights"].is_object())
    throw std::invalid_argument("missing weights object");
  std::vector<Rat> w(std::size_t{1} << n, Rat(0));
  for (const auto& [key, value] : j["weights"].items()) {
    if (!value.is_string())
      throw std::invalid_argument("weight of " + key + " must be a string");
    w[parse_key(key, n)] = parse_rat(value.get<std::string>());
  }
  return Measure(n, std::move(w));
}

std::string partition_to_json(const Partition& p) {
  auto block = [&](const PointSet& s) {
    json arr = json::array();
    for (auto v : s.members()) arr.push_back(point_str(Point{v, p.dim}));
    return arr;
  };
  json j;
  j["n"] = p.dim;
  j["k"] = p.k;
  j["A"] = block(p.a_set());
  j["B"] = block(p.b_set());
  json cs = json::array();
  for (int i = 1; i <= p.k; ++i) cs.push_back(block(p.c_set(i)));
  j["C"] = cs;
  return j.dump(2) + "\n";
}

Partition partition_from_json(const std::string& text) {
  json j = parse_json(text);
  int n = get_dim(j, "n");
  if (!j.contains("k") || !j["k"].is_number_integer())
    throw std::invalid_argument("missing integer field k");
  int k = j["k"].get<int>();
  if (!j.contains("C") || !j["C"].is_array() ||
      static_cast<int>(j["C"].size()) != k)
    throw std::invalid_argument("C must be an array of k blocks");
  if (!j.contains("A") || !j["A"].is_array() || !j.contains("B") ||
      !j["B"].is_array())
    throw std::invalid_argument("A and B blocks are required");

  std::vector<int> labels(std::size_t{1} << n, -1);
  auto assign = [&](const json& arr, int label, const char* name) {
    for (const auto& item : arr) {
      if (!item.is_string())
        throw std::invalid_argument(std::string("block ") + name +
                                    " must hold point strings");
      std::uint32_t v = parse_key(item.get<std::string>(), n);
      if (labels[v] != -1)
        throw std::invalid_argument("point " + item.get<std::string>() +
                                    " appears twice");
      labels[v] = label;
    }
  };
  assign(j["A"], 0, "A");
  assign(j["B"], k + 1, "B");
  for (int i = 1; i <= k; ++i) assign(j["C"][i - 1], i, "C");
  for (std::uint32_t v = 0; v < labels.size(); ++v)
    if (labels[v] == -1)
      throw std::invalid_argument("point " + point_str(Point{v, n}) +
                                  " is missing from the blocks");
  return validate_partition(n, k, std::move(labels));
}

std::string realization_to_json(const Realization& r) {
  json j;
  j["m"] = r.source_count();
  json sources = json::array();
  for (const auto& p : r.sources) sources.push_back(rat_str(p));
  j["sources"] = sources;
  json outputs = json::array();
  for (const auto& tab : r.outputs) {
    std::string s(std::size_t{1} << tab.m, '0');
    for (std::uint32_t a = 0; a < (1u << tab.m); ++a)
      if (tab.test(a)) s[a] = '1';
    outputs.push_back(json{{"table", s}});
  }
  j["outputs"] = outputs;
  j["names"] = r.names;
  return j.dump(2) + "\n";
}

Realization realization_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("m") || !j["m"].is_number_integer())
    throw std::invalid_argument("missing integer field m");
  int m = j["m"].get<int>();
  if (m < 0 || m > kMaxSources)
    throw std::invalid_argument("m out of range");
  if (!j.contains("sources") || !j["sources"].is_array() ||
      static_cast<int>(j["sources"].size()) != m)
    throw std::invalid_argument("sources must be an array of m rationals");
  Realization r;
  for (const auto& item : j["sources"]) {
    if (!item.is_string())
      throw std::invalid_argument("sources must be rational strings");
    Rat p = parse_rat(item.get<std::string>());
    if (p < 0 || p > 1)
      throw std::invalid_argument("source probability " + rat_str(p) +
                                  " outside [0, 1]");
    r.sources.push_back(p);
  }
  if (!j.contains("outputs") || !j["outputs"].is_array())
    throw std::invalid_argument("missing outputs array");
  for (const auto& out : j["outputs"]) {
    if (!out.is_object() || !out.contains("table") ||
        !out["table"].is_string())
      throw std::invalid_argument("each output needs a table string");
    std::string s = out["table"].get<std::string>();
    if (s.size() != (std::size_t{1} << m))
      throw std::invalid_argument("table length must be 2^m");
    TruthTable tab(m);
    for (std::uint32_t a = 0; a < s.size(); ++a) {
      if (s[a] == '1')
        tab.set(a, true);
      else if (s[a] != '0')
        throw std::invalid_argument("table characters must be 0 or 1");
    }
    r.outputs.push_back(std::move(tab));
  }
  if (j.contains("names")) {
    if (!j["names"].is_array())
      throw std::invalid_argument("names must be an array");
    for (const auto& item : j["names"]) {
      if (!item.is_string())
        throw std::invalid_argument("names must be strings");
      r.names.push_back(item.get<std::string>());
    }
  }
  return r;
}

std::string graph_to_text(const EdgeGraph& g) {
  std::ostringstream os;
  os << g.vertex_count << " " << g.edges.size() << "\n";
  for (const auto& e : g.edges)
    os << e.u << " " << e.v << " " << rat_str(e.p) << "\n";
  return os.str();
}

EdgeGraph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  int vertices = 0;
  std::size_t count = 0;
  if (!(is >> vertices >> count))
    throw std::invalid_argument("graph header must be: vertices edges");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i) {
    int u = 0, v = 0;
    std::string p;
    if (!(is >> u >> v >> p))
      throw std::invalid_argument("truncated edge list");
    edges.push_back(Edge{u, v, parse_rat(p)});
  }
  std::string rest;
  if (is >> rest)
    throw std::invalid_argument("trailing content after edge list");
  return make_graph(vertices, std::move(edges));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

Measure load_measure(const std::string& path) {
  return measure_from_json(read_file(path));
}
void save_measure(const Measure& mu, const std::string& path) {
  write_file(path, measure_to_json(mu));
}
Partition load_partition(const std::string& path) {
  return partition_from_json(read_file(path));
}
void save_partition(const Partition& p, const std::string& path) {
  write_file(path, partition_to_json(p));
}
Realization load_realization(const std::string& path) {
  return realization_from_json(read_file(path));
}
void save_realization(const Realization& r, const std::string& path) {
  write_file(path, realization_to_json(r));
}
EdgeGraph load_graph(const std::string& path) {
  return graph_from_text(read_file(path));
}

}  // namespace fkglab
