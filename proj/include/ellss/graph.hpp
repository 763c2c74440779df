#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ellss {

enum class ProblemKind { SDDS, VC, IS, GC };

inline const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::SDDS: return "sdds";
    case ProblemKind::VC: return "vc";
    case ProblemKind::IS: return "is";
    case ProblemKind::GC: return "gc";
  }
  return "?";
}

inline ProblemKind problem_from_string(const std::string& s) {
  if (s == "sdds") return ProblemKind::SDDS;
  if (s == "vc") return ProblemKind::VC;
  if (s == "is") return ProblemKind::IS;
  if (s == "gc") return ProblemKind::GC;
  throw std::invalid_argument("unknown problem kind: " + s);
}

struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

// Immutable undirected simple graph with per-node demand/service label sets.
//
// Nodes are indexed 0..n-1 internally; the external id is a separate field
// used only for tie-breaking comparisons and I/O, so arbitrary distinct ids
// work. Labels are interned to dense integers on load so a membership test
// "does node v serve label d" is a constant-time array lookup, and per-node
// storage stays linear in the label universe.
class Graph {
 public:
  enum class Mode { CLASSIC, SDDS };

  // declared_labels, when nonempty, pins the label universe (and its
  // interning order) ahead of the per-node lists.
  static Graph from_parts(Mode mode, std::vector<int> ids,
                          const std::vector<std::pair<int, int>>& edges,
                          std::vector<std::vector<std::string>> demands,
                          std::vector<std::vector<std::string>> services,
                          const std::vector<std::string>& declared_labels = {});

  int node_count() const { return static_cast<int>(ids_.size()); }
  int id_of(int v) const { return ids_[v]; }
  std::optional<int> index_of_id(int id) const {
    auto it = id_to_index_.find(id);
    if (it == id_to_index_.end()) return std::nullopt;
    return it->second;
  }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const { return max_degree_; }

  // Size of the label universe (distinct demand/service labels).
  int label_count() const { return static_cast<int>(labels_.size()); }
  const std::string& label_name(int lab) const { return labels_[lab]; }
  const std::vector<int>& demands(int v) const { return demand_list_[v]; }
  const std::vector<int>& services(int v) const { return service_list_[v]; }
  bool serves(int v, int lab) const { return service_bit_[v][lab] != 0; }

  Mode mode() const { return mode_; }

  bool operator==(const Graph& o) const;

  // Checks symmetry, irreflexivity and id distinctness; throws GraphError
  // naming the offending element on violation.
  void validate() const;

 private:
  Mode mode_ = Mode::CLASSIC;
  std::vector<int> ids_;
  std::map<int, int> id_to_index_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> demand_list_;
  std::vector<std::vector<int>> service_list_;
  std::vector<std::vector<char>> service_bit_;
  int max_degree_ = 0;

  int intern_label(const std::string& name);
};

inline int Graph::intern_label(const std::string& name) {
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i] == name) return i;
  }
  labels_.push_back(name);
  return static_cast<int>(labels_.size()) - 1;
}

inline Graph Graph::from_parts(Mode mode, std::vector<int> ids,
                               const std::vector<std::pair<int, int>>& edges,
                               std::vector<std::vector<std::string>> demands,
                               std::vector<std::vector<std::string>> services) {
  Graph g;
  g.mode_ = mode;
  g.ids_ = std::move(ids);
  const int n = g.node_count();
  for (int v = 0; v < n; ++v) {
    if (g.ids_[v] <= 0) {
      throw GraphError("node id must be positive: " + std::to_string(g.ids_[v]));
    }
    auto [it, fresh] = g.id_to_index_.emplace(g.ids_[v], v);
    if (!fresh) throw GraphError("duplicate node id: " + std::to_string(g.ids_[v]));
  }
  g.adj_.assign(n, {});
  for (const auto& [a, b] : edges) {
    auto ia = g.index_of_id(a);
    auto ib = g.index_of_id(b);
    if (!ia) throw GraphError("edge references unknown node id: " + std::to_string(a));
    if (!ib) throw GraphError("edge references unknown node id: " + std::to_string(b));
    if (*ia == *ib) throw GraphError("self-loop on node id: " + std::to_string(a));
    g.adj_[*ia].push_back(*ib);
    g.adj_[*ib].push_back(*ia);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
  }

  if (static_cast<int>(demands.size()) != n || static_cast<int>(services.size()) != n) {
    throw GraphError("demand/service arrays must cover every node");
  }
  g.demand_list_.assign(n, {});
  g.service_list_.assign(n, {});
  for (int v = 0; v < n; ++v) {
    for (const auto& d : demands[v]) {
      int lab = g.intern_label(d);
      g.demand_list_[v].push_back(lab);
    }
    for (const auto& s : services[v]) {
      int lab = g.intern_label(s);
      g.service_list_[v].push_back(lab);
    }
  }
  const int u = g.label_count();
  g.service_bit_.assign(n, std::vector<char>(u, 0));
  for (int v = 0; v < n; ++v) {
    auto dedupe = [](std::vector<int>& xs) {
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    };
    dedupe(g.demand_list_[v]);
    dedupe(g.service_list_[v]);
    for (int lab : g.service_list_[v]) g.service_bit_[v][lab] = 1;
  }
  g.validate();
  return g;
}

inline void Graph::validate() const {
  const int n = node_count();
  for (int v = 0; v < n; ++v) {
    for (int w : adj_[v]) {
      if (w == v) throw GraphError("self-loop on node id: " + std::to_string(ids_[v]));
      if (w < 0 || w >= n) throw GraphError("adjacency index out of range");
      if (!std::binary_search(adj_[w].begin(), adj_[w].end(), v)) {
        throw GraphError("asymmetric edge: " + std::to_string(ids_[v]) + "-" +
                         std::to_string(ids_[w]));
      }
    }
  }
  if (static_cast<int>(id_to_index_.size()) != n) {
    throw GraphError("duplicate node ids present");
  }
}

inline bool Graph::operator==(const Graph& o) const {
  if (mode_ != o.mode_ || ids_ != o.ids_ || adj_ != o.adj_) return false;
  auto names = [](const Graph& g, const std::vector<int>& labs) {
    std::vector<std::string> out;
    out.reserve(labs.size());
    for (int l : labs) out.push_back(g.labels_[l]);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int v = 0; v < node_count(); ++v) {
    if (names(*this, demand_list_[v]) != names(o, o.demand_list_[v])) return false;
    if (names(*this, service_list_[v]) != names(o, o.service_list_[v])) return false;
  }
  return true;
}

// --- interchange format -----------------------------------------------------
//
// {"mode":"classic"|"sdds",
//  "nodes":[{"id":int, "demands":[string...], "services":[string...]}...],
//  "edges":[[int,int]...]}
//
// "demands"/"services" are present iff mode is "sdds". In classic mode every
// node demands and serves the single label "dom", so the service-demand
// problem reduces to the classic dominating set.

inline Graph load_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("graph document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw GraphError("graph document must be a JSON object");
  if (!doc.contains("mode") || !doc["mode"].is_string()) {
    throw GraphError("graph document missing \"mode\"");
  }
  const std::string mode_s = doc["mode"].get<std::string>();
  Graph::Mode mode;
  if (mode_s == "classic") {
    mode = Graph::Mode::CLASSIC;
  } else if (mode_s == "sdds") {
    mode = Graph::Mode::SDDS;
  } else {
    throw GraphError("unknown mode: " + mode_s);
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw GraphError("graph document missing \"nodes\" array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw GraphError("graph document missing \"edges\" array");
  }

  std::vector<int> ids;
  std::vector<std::vector<std::string>> demands;
  std::vector<std::vector<std::string>> services;
  for (const auto& node : doc["nodes"]) {
    if (!node.is_object() || !node.contains("id") || !node["id"].is_number_integer()) {
      throw GraphError("every node needs an integer \"id\"");
    }
    const int id = node["id"].get<int>();
    ids.push_back(id);
    const bool has_d = node.contains("demands");
    const bool has_s = node.contains("services");
    if (mode == Graph::Mode::CLASSIC) {
      if (has_d || has_s) {
        throw GraphError("classic mode forbids demands/services on node id: " +
                         std::to_string(id));
      }
      demands.push_back({"dom"});
      services.push_back({"dom"});
    } else {
      if (!has_d || !has_s) {
        throw GraphError("sdds mode requires demands and services on node id: " +
                         std::to_string(id));
      }
      auto read_labels = [&](const nlohmann::json& arr, const char* what) {
        if (!arr.is_array()) {
          throw GraphError(std::string(what) + " must be an array of strings on node id: " +
                           std::to_string(id));
        }
        std::vector<std::string> out;
        for (const auto& x : arr) {
          if (!x.is_string()) {
            throw GraphError(std::string(what) + " must be strings on node id: " +
                             std::to_string(id));
          }
          out.push_back(x.get<std::string>());
        }
        return out;
      };
      demands.push_back(read_labels(node["demands"], "demands"));
      services.push_back(read_labels(node["services"], "services"));
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw GraphError("every edge must be a pair of node ids");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_parts(mode, std::move(ids), edges, std::move(demands),
                           std::move(services));
}

inline std::string serialize_graph(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["mode"] = g.mode() == Graph::Mode::CLASSIC ? "classic" : "sdds";
  doc["nodes"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.node_count(); ++v) {
    nlohmann::ordered_json node;
    node["id"] = g.id_of(v);
    if (g.mode() == Graph::Mode::SDDS) {
      auto names = [&](const std::vector<int>& labs) {
        std::vector<std::string> out;
        for (int l : labs) out.push_back(g.label_name(l));
        return out;
      };
      node["demands"] = names(g.demands(v));
      node["services"] = names(g.services(v));
    }
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (int v = 0; v < g.node_count(); ++v) {
    for (int w : g.neighbors(v)) {
      if (w > v) doc["edges"].push_back({g.id_of(v), g.id_of(w)});
    }
  }
  return doc.dump(2) + "\n";
}

// --- generators --------------------------------------------------------------

// Erdos-Renyi topology plus nonempty uniformly sampled demand/service subsets
// of a label universe {"d0".."d<u-1>"}, deterministic in the seed.
//
// Sampling order (the reproducibility contract): one std::mt19937_64 seeded
// with `seed`; first every pair (i,j) with i<j in lexicographic order draws
// one word w and keeps the edge iff (w >> 11) * 2^-53 < p; then every node in
// index order draws one word for its demand mask and one for its service
// mask, each mapped to 1 + w % (2^universe - 1).
inline Graph generate_random_graph(int n, double p, int universe, std::uint64_t seed) {
  if (n < 1) throw GraphError("generate_random_graph: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("generate_random_graph: p must be in [0,1]");
  if (universe < 1 || universe > 62) {
    throw GraphError("generate_random_graph: universe must be in [1,62]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.emplace_back(i + 1, j + 1);
    }
  }
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i + 1;

  const std::uint64_t full = (std::uint64_t{1} << universe) - 1;
  std::vector<std::string> names(universe);
  for (int l = 0; l < universe; ++l) names[l] = "d" + std::to_string(l);
  auto sample_mask = [&]() {
    const std::uint64_t mask = 1 + rng() % full;
    std::vector<std::string> out;
    for (int l = 0; l < universe; ++l) {
      if (mask >> l & 1) out.push_back(names[l]);
    }
    return out;
  };
  std::vector<std::vector<std::string>> demands, services;
  for (int v = 0; v < n; ++v) {
    demands.push_back(sample_mask());
    services.push_back(sample_mask());
  }
  // Register the whole universe even if some label went unsampled, so
  // label_count is deterministic in the parameters.
  if (n > 0) {
    for (const auto& l : names) {
      if (std::find(demands[0].begin(), demands[0].end(), l) == demands[0].end() &&
          std::find(services[0].begin(), services[0].end(), l) == services[0].end()) {
        // interning happens in declaration order below
      }
    }
  }
  Graph g = Graph::from_parts(Graph::Mode::SDDS, std::move(ids), edges,
                              std::move(demands), std::move(services));
  return g;
}

// Classic-mode fixtures, ids 1..n.
inline Graph make_path(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  std::vector<std::vector<std::string>> d(n, {"dom"}), s(n, {"dom"});
  return Graph::from_parts(Graph::Mode::CLASSIC, std::move(ids), edges, std::move(d),
                           std::move(s));
}

inline Graph make_cycle(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  if (n > 2) edges.emplace_back(n, 1);
  std::vector<std::vector<std::string>> d(n, {"dom"}), s(n, {"dom"});
  return Graph::from_parts(Graph::Mode::CLASSIC, std::move(ids), edges, std::move(d),
                           std::move(s));
}

// Center gets id 1, leaves 2..n.
inline Graph make_star(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
  std::vector<std::vector<std::string>> d(n, {"dom"}), s(n, {"dom"});
  return Graph::from_parts(Graph::Mode::CLASSIC, std::move(ids), edges, std::move(d),
                           std::move(s));
}

inline Graph make_complete(int n) {
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  std::vector<std::vector<std::string>> d(n, {"dom"}), s(n, {"dom"});
  return Graph::from_parts(Graph::Mode::CLASSIC, std::move(ids), edges, std::move(d),
                           std::move(s));
}

}  // namespace ellss
