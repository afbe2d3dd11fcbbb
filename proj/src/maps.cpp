#include "sqfmaps/maps.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "sqfmaps/errors.hpp"

namespace sqf {

std::vector<std::size_t> MultiGraph::degrees() const {
  std::vector<std::size_t> d(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::string MultiGraph::to_dot(const std::string& name) const {
  std::string out = "graph " + name + " {\n";
  for (std::size_t v = 0; v < vertex_count; ++v) out += "  v" + std::to_string(v) + ";\n";
  for (const auto& [u, v] : edges) out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

namespace {

std::size_t count_labels(const std::vector<std::uint32_t>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

// For each coset of the first labelling, the sorted distinct labels of the
// second labelling that meet it.
std::vector<std::vector<std::uint32_t>> meeting(const std::vector<std::uint32_t>& a, std::size_t na,
                                                const std::vector<std::uint32_t>& b) {
  std::vector<std::set<std::uint32_t>> acc(na);
  for (std::size_t g = 0; g < a.size(); ++g) acc[a[g]].insert(b[g]);
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(na);
  for (const auto& s : acc) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

RegularMapModel build_map(const PermGroup& G, const GeneratingTriple& triple) {
  if (triple.kind != TripleKind::Regular || !check_triple(G, triple.elements, TripleKind::Regular))
    throw InvalidArgument("not a regular triple of the group");
  const auto& x = triple.elements[0];
  const auto& y = triple.elements[1];
  const auto& z = triple.elements[2];
  RegularMapModel m{G, triple, subgroup(G, {x, y}), subgroup(G, {x, z}), subgroup(G, {y, z}), {}, {}, {},
                    0, 0, 0, {}, {}};
  m.vertex_of = coset_labels(G, m.vertex_stabilizer);
  m.edge_of = coset_labels(G, m.edge_stabilizer);
  m.face_of = coset_labels(G, m.face_stabilizer);
  m.vertices = count_labels(m.vertex_of);
  m.edges = count_labels(m.edge_of);
  m.faces = count_labels(m.face_of);
  m.edge_vertices = meeting(m.edge_of, m.edges, m.vertex_of);
  m.edge_faces = meeting(m.edge_of, m.edges, m.face_of);
  for (std::size_t e = 0; e < m.edges; ++e)
    if (m.edge_vertices[e].size() > 2 || m.edge_faces[e].size() > 2)
      throw VerificationFailure("edge meets more than two vertices or faces");
  if (m.valency() * m.vertices != 2 * m.edges) throw VerificationFailure("handshake law fails");
  return m;
}

FactoredInteger euler_characteristic_closed(const PermGroup& G, const GeneratingTriple& triple) {
  if (triple.kind != TripleKind::Regular || !check_triple(G, triple.elements, TripleKind::Regular))
    throw InvalidArgument("not a regular triple of the group");
  const auto n = static_cast<std::int64_t>(G.order());
  const auto h = static_cast<std::int64_t>(subgroup(G, {triple.elements[0], triple.elements[1]}).order());
  const auto f = static_cast<std::int64_t>(subgroup(G, {triple.elements[1], triple.elements[2]}).order());
  if (n % h || n % 4 || n % f) throw VerificationFailure("Euler characteristic is not an integer");
  return factor(n / h - n / 4 + n / f);
}

std::int64_t euler_characteristic_counted(const RegularMapModel& map) {
  return static_cast<std::int64_t>(map.vertices) - static_cast<std::int64_t>(map.edges) +
         static_cast<std::int64_t>(map.faces);
}

MultiGraph underlying_graph(const RegularMapModel& map) {
  MultiGraph g;
  g.vertex_count = map.vertices;
  for (const auto& ends : map.edge_vertices) {
    if (ends.size() != 2) throw VerificationFailure("edge is a loop");
    g.edges.emplace_back(ends[0], ends[1]);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::optional<std::pair<std::size_t, std::size_t>> is_multicycle(const MultiGraph& g) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> mult;
  for (const auto& e : g.edges) ++mult[e];
  if (mult.empty()) return std::nullopt;
  const std::size_t lambda = mult.begin()->second;
  for (const auto& [e, k] : mult)
    if (k != lambda) return std::nullopt;
  const std::size_t n = g.vertex_count;
  if (n == 2) {
    if (lambda % 2) return std::nullopt;
    return std::make_pair(n, lambda / 2);
  }
  if (n < 3 || mult.size() != n) return std::nullopt;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [e, k] : mult) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (const auto& a : adj)
    if (a.size() != 2) return std::nullopt;
  // 2-regular with n edges: a single cycle iff connected.
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) return std::nullopt;
  return std::make_pair(n, lambda);
}

MultiGraph multicycle(std::size_t n, std::size_t lambda) {
  MultiGraph g;
  g.vertex_count = n;
  for (std::size_t i = 0; i < n && n >= 2; ++i) {
    auto u = static_cast<std::uint32_t>(i), v = static_cast<std::uint32_t>((i + 1) % n);
    for (std::size_t k = 0; k < lambda; ++k) g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

MultiGraph cartesian_square_of_cycle(std::size_t n) {
  MultiGraph g;
  g.vertex_count = n * n;
  auto id = [n](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>((i % n) * n + (j % n)); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (auto w : {id(i + 1, j), id(i, j + 1)}) {
        auto u = id(i, j);
        g.edges.emplace_back(std::min(u, w), std::max(u, w));
      }
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

struct Adjacency {
  std::vector<std::vector<std::uint32_t>> nbr;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edge;

  explicit Adjacency(const MultiGraph& g) : nbr(g.vertex_count) {
    for (const auto& [u, v] : g.edges) {
      nbr[u].push_back(v);
      nbr[v].push_back(u);
      edge.insert({u, v});
    }
  }
  bool adjacent(std::uint32_t u, std::uint32_t v) const { return edge.count({std::min(u, v), std::max(u, v)}) > 0; }
};

// Backtracking isomorphism from a connected graph onto a vertex-transitive
// model: vertex 0 goes to model vertex 0, the rest in BFS order, each to an
// unused model neighbour of its BFS parent's image.
class IsoSearch {
 public:
  IsoSearch(const Adjacency& g, const Adjacency& m, std::vector<std::uint32_t> order,
            std::vector<std::uint32_t> parent)
      : g_(g), m_(m), order_(std::move(order)), parent_(std::move(parent)),
        img_(g.nbr.size(), kUnset), used_(g.nbr.size(), 0) {}

  bool run() {
    img_[order_[0]] = 0;
    used_[0] = 1;
    return extend(1);
  }

 private:
  static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const auto v = order_[k];
    for (auto c : m_.nbr[img_[parent_[v]]]) {
      if (used_[c]) continue;
      bool ok = true;
      for (auto u : g_.nbr[v])
        if (img_[u] != kUnset && !m_.adjacent(img_[u], c)) {
          ok = false;
          break;
        }
      if (ok)
        for (auto w : m_.nbr[c]) {
          // Mapped model neighbours must come from graph neighbours.
          if (!used_[w]) continue;
          bool found = false;
          for (auto u : g_.nbr[v]) found = found || img_[u] == w;
          if (!found) {
            ok = false;
            break;
          }
        }
      if (!ok) continue;
      img_[v] = c;
      used_[c] = 1;
      if (extend(k + 1)) return true;
      img_[v] = kUnset;
      used_[c] = 0;
    }
    return false;
  }

  const Adjacency& g_;
  const Adjacency& m_;
  std::vector<std::uint32_t> order_, parent_, img_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::size_t> is_cartesian_square_of_cycle(const MultiGraph& g) {
  std::size_t n = 3;
  while (n * n < g.vertex_count) ++n;
  if (n * n != g.vertex_count) return std::nullopt;
  if (g.edges.size() != 2 * g.vertex_count) return std::nullopt;
  for (std::size_t i = 1; i < g.edges.size(); ++i)
    if (g.edges[i] == g.edges[i - 1]) return std::nullopt;
  for (auto d : g.degrees())
    if (d != 4) return std::nullopt;
  Adjacency ga(g);
  std::vector<std::uint32_t> order{0}, parent(g.vertex_count, 0);
  std::vector<char> seen(g.vertex_count, 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (auto w : ga.nbr[order[h]])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[h];
        order.push_back(w);
      }
  if (order.size() != g.vertex_count) return std::nullopt;
  Adjacency model(cartesian_square_of_cycle(n));
  IsoSearch search(ga, model, std::move(order), std::move(parent));
  if (!search.run()) return std::nullopt;
  return n;
}

std::string graph_tag(const MultiGraph& g) {
  if (auto mc = is_multicycle(g)) {
    if (mc->second == 1) return "C" + std::to_string(mc->first);
    return "C" + std::to_string(mc->first) + "^(" + std::to_string(mc->second) + ")";
  }
  if (auto n = is_cartesian_square_of_cycle(g)) return "C" + std::to_string(*n) + "[]C" + std::to_string(*n);
  return "other";
}

MapSummary summarize_map(const PermGroup& G, const GeneratingTriple& triple) {
  auto m = build_map(G, triple);
  auto closed = euler_characteristic_closed(G, triple);
  auto counted = euler_characteristic_counted(m);
  if (closed.value != counted)
    throw VerificationFailure("Euler characteristic mismatch: " + std::to_string(closed.value) + " vs " +
                              std::to_string(counted));
  MapSummary s;
  s.order = G.order();
  s.vertices = m.vertices;
  s.edges = m.edges;
  s.faces = m.faces;
  s.valency = m.valency();
  s.face_length = m.face_length();
  s.chi = counted;
  s.chi_factored = closed.dot();
  s.squarefree = closed.squarefree;
  bool has_loop = std::any_of(m.edge_vertices.begin(), m.edge_vertices.end(),
                              [](const auto& e) { return e.size() != 2; });
  s.graph = has_loop ? "other" : graph_tag(underlying_graph(m));
  return s;
}

std::string to_json(const MapSummary& s) {
  nlohmann::ordered_json j;
  j["order"] = s.order;
  j["vertices"] = s.vertices;
  j["edges"] = s.edges;
  j["faces"] = s.faces;
  j["valency"] = s.valency;
  j["face_length"] = s.face_length;
  j["chi"] = s.chi;
  j["chi_factored"] = s.chi_factored;
  j["squarefree"] = s.squarefree;
  j["graph"] = s.graph;
  return j.dump();
}

}  // namespace sqf
