#pragma once

// Planarity of unsigned Gauss words via the interlacement graph and the Z2
// cochain of beta values (three-stage Cairns-Elton test).

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "gausswords/word.hpp"

namespace gauss::interlace {

/// A symbol with its sign dropped.
struct SymbolKey {
  Strand strand;
  Label label;

  auto operator<=>(const SymbolKey&) const = default;
};

using SymbolSet = std::set<SymbolKey>;

/// Parity of the number of symbols strictly between U_i and O_i (cyclically).
int alpha(const GaussWord& w, Label i);

/// Symbols strictly between U_i and O_i walking forward from U_i.
SymbolSet s_set(const GaussWord& w, Label i);

struct Beta {
  std::size_t count = 0;
  int parity() const noexcept { return static_cast<int>(count & 1U); }
};

/// |({U_i, O_i} u S_i) n S_j^-1|, where ^-1 swaps U and O.
Beta beta(const GaussWord& w, Label i, Label j);

struct Edge {
  Label u;
  Label v;
  int beta = 0;  // 0 or 1
  std::size_t beta_count = 0;
};

/// Labels as vertices, interlaced pairs as edges, each edge carrying beta mod 2.
///
/// Edges keep the order they were given in; the spanning forest used by
/// stage 3 follows that order.
class InterlacementGraph {
 public:
  /// Throws std::invalid_argument on self-loops, duplicate edges, unknown
  /// endpoints or beta values outside {0, 1}.
  InterlacementGraph(std::vector<Label> vertices, std::vector<Edge> edges);

  std::span<const Label> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t degree(Label v) const;
  bool adjacent(Label a, Label b) const;
  std::size_t vertex_index(Label v) const;
  /// Neighbours of vertex index i as (neighbour index, edge index) pairs.
  std::span<const std::pair<std::size_t, std::size_t>> neighbours(std::size_t i) const {
    return adjacency_.at(i);
  }

 private:
  std::vector<Label> vertices_;  // ascending
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

bool interlaced(const GaussWord& w, Label i, Label j);

/// Interlacement graph with beta taken as beta(w, u, v) for u < v.
InterlacementGraph interlacement_graph(const GaussWord& w);

std::optional<Label> stage1_odd_neighborhood(const InterlacementGraph& g);

/// Least non-adjacent pair (i < j) with beta_ij or beta_ji odd.
std::optional<std::pair<Label, Label>> stage2_nonadjacent_beta(const GaussWord& w,
                                                               const InterlacementGraph& g);

/// A closed path v0 v1 ... vk = v0 whose beta values sum to 1 mod 2, or
/// nothing if the cochain is closed.
///
/// Builds a breadth-first spanning forest (roots in ascending label order,
/// edges in graph order), assigns potentials f(root) = 0 and
/// f(v) = f(u) + beta(u, v) along tree edges, and returns the fundamental
/// cycle of the first non-tree edge with f(u) + f(v) + beta(u, v) = 1.
std::optional<std::vector<Label>> stage3_cochain_closed(const InterlacementGraph& g);

struct PlanarityVerdict {
  bool planar = true;
  std::optional<int> failed_stage;
  /// Stage 1: the odd-degree label. Stage 2: the pair. Stage 3: the cycle.
  std::variant<std::monostate, Label, std::pair<Label, Label>, std::vector<Label>> witness;
};

PlanarityVerdict is_planar_unsigned(const GaussWord& w);

}  // namespace gauss::interlace
