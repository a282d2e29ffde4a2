#include "gausswords/interlacement.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace gauss::interlace {

namespace {

const GaussWord& require_unsigned(const GaussWord& w) {
  if (w.is_signed()) throw InvalidWord("expected an unsigned word");
  return w;
}

// Forward cyclic span from U_c to O_c of one crossing.
struct Span {
  Position from;
  std::size_t length;  // (O - U) mod n
  std::size_t n;

  std::size_t offset(Position p) const noexcept { return (p + n - from) % n; }
  bool strictly_inside(Position p) const noexcept {
    const auto d = offset(p);
    return d > 0 && d < length;
  }
  bool inside_closed(Position p) const noexcept { return offset(p) <= length; }
};

Span span_of(const Pairing& pairing, std::size_t c) {
  const std::size_t n = pairing.size();
  const Position u = pairing.under_position(c);
  const Position o = pairing.over_position(c);
  return {u, (o + n - u) % n, n};
}

bool interlaced_dense(const Pairing& pairing, std::size_t i, std::size_t j) {
  const Span s = span_of(pairing, i);
  const int inside = static_cast<int>(s.strictly_inside(pairing.under_position(j))) +
                     static_cast<int>(s.strictly_inside(pairing.over_position(j)));
  return inside == 1;
}

Beta beta_dense(const Pairing& pairing, std::size_t i, std::size_t j) {
  const Span si = span_of(pairing, i);
  const Span sj = span_of(pairing, j);
  Beta b;
  for (std::size_t d = 0; d <= si.length; ++d) {
    const Position p = (si.from + d) % si.n;
    if (sj.strictly_inside(pairing.partner(p))) ++b.count;
  }
  return b;
}

}  // namespace

int alpha(const GaussWord& w, Label i) {
  const Pairing pairing(require_unsigned(w));
  const Span s = span_of(pairing, pairing.index_of(i));
  return static_cast<int>((s.length - 1) & 1U);
}

SymbolSet s_set(const GaussWord& w, Label i) {
  const Pairing pairing(require_unsigned(w));
  const Span s = span_of(pairing, pairing.index_of(i));
  SymbolSet out;
  for (std::size_t d = 1; d < s.length; ++d) {
    const Symbol& sym = w[(s.from + d) % s.n];
    out.insert({sym.strand, sym.label});
  }
  return out;
}

Beta beta(const GaussWord& w, Label i, Label j) {
  if (i == j) throw std::invalid_argument("beta needs two distinct labels");
  const Pairing pairing(require_unsigned(w));
  return beta_dense(pairing, pairing.index_of(i), pairing.index_of(j));
}

bool interlaced(const GaussWord& w, Label i, Label j) {
  if (i == j) return false;
  const Pairing pairing(require_unsigned(w));
  return interlaced_dense(pairing, pairing.index_of(i), pairing.index_of(j));
}

// ---------------------------------------------------------------------------

InterlacementGraph::InterlacementGraph(std::vector<Label> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("duplicate vertex");
  adjacency_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.u == edge.v) throw std::invalid_argument("self-loop in interlacement graph");
    if (edge.beta != 0 && edge.beta != 1) throw std::invalid_argument("beta must be 0 or 1");
    const std::size_t a = vertex_index(edge.u);
    const std::size_t b = vertex_index(edge.v);
    for (const auto& [other, unused] : adjacency_[a]) {
      if (other == b) throw std::invalid_argument("duplicate edge");
    }
    adjacency_[a].emplace_back(b, e);
    adjacency_[b].emplace_back(a, e);
  }
}

std::size_t InterlacementGraph::vertex_index(Label v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw std::invalid_argument("unknown vertex " + std::to_string(v.value()));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t InterlacementGraph::degree(Label v) const {
  return adjacency_[vertex_index(v)].size();
}

bool InterlacementGraph::adjacent(Label a, Label b) const {
  const std::size_t j = vertex_index(b);
  for (const auto& [other, unused] : adjacency_[vertex_index(a)]) {
    if (other == j) return true;
  }
  return false;
}

InterlacementGraph interlacement_graph(const GaussWord& w) {
  const Pairing pairing(require_unsigned(w));
  const std::size_t n = pairing.crossings();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!interlaced_dense(pairing, i, j)) continue;
      const Beta b = beta_dense(pairing, i, j);
      edges.push_back({pairing.labels()[i], pairing.labels()[j], b.parity(), b.count});
    }
  }
  const auto labels = pairing.labels();
  return InterlacementGraph({labels.begin(), labels.end()}, std::move(edges));
}

// ---------------------------------------------------------------------------

std::optional<Label> stage1_odd_neighborhood(const InterlacementGraph& g) {
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    if (g.neighbours(i).size() % 2 == 1) return g.vertices()[i];
  }
  return std::nullopt;
}

std::optional<std::pair<Label, Label>> stage2_nonadjacent_beta(const GaussWord& w,
                                                               const InterlacementGraph& g) {
  const Pairing pairing(require_unsigned(w));
  const auto vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (g.adjacent(vs[a], vs[b])) continue;
      const std::size_t i = pairing.index_of(vs[a]);
      const std::size_t j = pairing.index_of(vs[b]);
      if (beta_dense(pairing, i, j).parity() == 1 || beta_dense(pairing, j, i).parity() == 1)
        return std::pair{vs[a], vs[b]};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Label>> stage3_cochain_closed(const InterlacementGraph& g) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t nv = g.vertices().size();
  std::vector<std::size_t> parent(nv, none);
  std::vector<std::size_t> depth(nv, 0);
  std::vector<int> potential(nv, 0);
  std::vector<bool> visited(nv, false);
  std::vector<bool> tree_edge(g.edges().size(), false);

  for (std::size_t root = 0; root < nv; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const auto& [v, e] : g.neighbours(u)) {
        if (visited[v]) continue;
        visited[v] = true;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        potential[v] = potential[u] ^ g.edges()[e].beta;
        tree_edge[e] = true;
        queue.push_back(v);
      }
    }
  }

  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (tree_edge[e]) continue;
    const Edge& edge = g.edges()[e];
    std::size_t u = g.vertex_index(edge.u);
    std::size_t v = g.vertex_index(edge.v);
    if ((potential[u] ^ potential[v] ^ edge.beta) == 0) continue;

    // Fundamental cycle: u -> ... -> lca -> ... -> v -> u.
    std::vector<std::size_t> up;    // from u towards the lca
    std::vector<std::size_t> down;  // from v towards the lca
    while (depth[u] > depth[v]) {
      up.push_back(u);
      u = parent[u];
    }
    while (depth[v] > depth[u]) {
      down.push_back(v);
      v = parent[v];
    }
    while (u != v) {
      up.push_back(u);
      down.push_back(v);
      u = parent[u];
      v = parent[v];
    }
    std::vector<Label> cycle;
    for (auto x : up) cycle.push_back(g.vertices()[x]);
    cycle.push_back(g.vertices()[u]);
    for (auto it = down.rbegin(); it != down.rend(); ++it) cycle.push_back(g.vertices()[*it]);
    cycle.push_back(cycle.front());
    return cycle;
  }
  return std::nullopt;
}

PlanarityVerdict is_planar_unsigned(const GaussWord& w) {
  require_unsigned(w);
  require_valid(w);
  PlanarityVerdict verdict;
  if (w.empty()) return verdict;

  const auto g = interlacement_graph(w);
  if (auto v = stage1_odd_neighborhood(g)) {
    verdict.planar = false;
    verdict.failed_stage = 1;
    verdict.witness = *v;
  } else if (auto pair = stage2_nonadjacent_beta(w, g)) {
    verdict.planar = false;
    verdict.failed_stage = 2;
    verdict.witness = *pair;
  } else if (auto cycle = stage3_cochain_closed(g)) {
    verdict.planar = false;
    verdict.failed_stage = 3;
    verdict.witness = std::move(*cycle);
  }
  return verdict;
}

}  // namespace gauss::interlace
