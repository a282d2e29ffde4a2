#pragma once

// Left-turn face traversal on the combinatorial Carter surface of a signed
// Gauss word, and the resulting Euler characteristic / planarity test.

#include <compare>
#include <cstdint>
#include <vector>

#include "gausswords/word.hpp"

namespace gauss::carter {

/// A symbol together with the direction the traversal arrived from.
/// Right means the symbol was reached moving with the orientation of the word.
/// Ordered by (position, incoming) with Left < Right.
struct TraversalState {
  Position position = 0;
  Direction incoming = Direction::Left;

  auto operator<=>(const TraversalState&) const = default;
};

/// Output direction of the left-turn rule for a symbol reached via `incoming`.
///
/// Over+ and Under- keep the direction; Under+ and Over- reverse it.
constexpr Direction turn(Direction incoming, Strand strand, Sign sign) noexcept {
  const bool reverse = (strand == Strand::Under) != (sign == Sign::Minus);
  return reverse ? opposite(incoming) : incoming;
}

/// The step function over all 4n states of one signed word.
class Surface {
 public:
  /// Throws InvalidWord unless w is valid and signed.
  explicit Surface(const GaussWord& w);

  const GaussWord& word() const noexcept { return word_; }
  std::size_t state_count() const noexcept { return 2 * word_.size(); }
  std::size_t crossings() const noexcept { return pairing_.crossings(); }
  const Pairing& pairing() const noexcept { return pairing_; }

  TraversalState step(TraversalState s) const;
  TraversalState step_back(TraversalState s) const;

  /// Dense index 2*position + (incoming == Right).
  std::size_t index(TraversalState s) const noexcept {
    return 2 * s.position + (s.incoming == Direction::Right ? 1 : 0);
  }
  TraversalState state(std::size_t index) const noexcept {
    return {index / 2, (index & 1U) != 0 ? Direction::Right : Direction::Left};
  }

 private:
  GaussWord word_;
  Pairing pairing_;
};

TraversalState left_turn_step(const GaussWord& w, TraversalState s);

struct FaceDecomposition {
  GaussWord word;
  /// Each face starts at its least state; faces are sorted by that state.
  std::vector<std::vector<TraversalState>> faces;
};

FaceDecomposition enumerate_faces(const GaussWord& w);

struct EulerReport {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::int64_t chi = 0;

  bool operator==(const EulerReport&) const = default;
};

EulerReport euler_characteristic(const GaussWord& w);

/// True iff w is empty or its Carter surface is a sphere (chi == 2).
bool is_planar_signed(const GaussWord& w);

}  // namespace gauss::carter
