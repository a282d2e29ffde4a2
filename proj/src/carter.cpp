#include "gausswords/carter.hpp"

namespace gauss::carter {

namespace {

const GaussWord& require_signed(const GaussWord& w) {
  if (!w.is_signed() && !w.empty())
    throw InvalidWord("face traversal needs a signed word");
  return w;
}

}  // namespace

Surface::Surface(const GaussWord& w) : word_(require_signed(w)), pairing_(word_) {}

TraversalState Surface::step(TraversalState s) const {
  const Symbol& sym = word_[s.position];
  const Direction out = turn(s.incoming, sym.strand, *sym.sign);
  const Position from = pairing_.partner(s.position);
  return {cyclic_step(from, out, word_.size()), out};
}

TraversalState Surface::step_back(TraversalState s) const {
  // The predecessor left the counterpart at `from` in direction s.incoming.
  const Position from = cyclic_step(s.position, opposite(s.incoming), word_.size());
  const Position p = pairing_.partner(from);
  const Symbol& sym = word_[p];
  // turn() is an involution in its direction argument.
  return {p, turn(s.incoming, sym.strand, *sym.sign)};
}

TraversalState left_turn_step(const GaussWord& w, TraversalState s) {
  if (s.position >= w.size()) throw std::out_of_range("state position out of range");
  return Surface(w).step(s);
}

FaceDecomposition enumerate_faces(const GaussWord& w) {
  if (w.empty()) throw InvalidWord("the empty word has no faces");
  const Surface surface(w);
  const std::size_t n = surface.state_count();
  std::vector<bool> seen(n, false);
  FaceDecomposition out{w, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<TraversalState> face;
    TraversalState s = surface.state(i);
    while (!seen[surface.index(s)]) {
      seen[surface.index(s)] = true;
      face.push_back(s);
      s = surface.step(s);
    }
    out.faces.push_back(std::move(face));
  }
  return out;
}

EulerReport euler_characteristic(const GaussWord& w) {
  const auto faces = enumerate_faces(w);
  EulerReport r;
  r.vertices = static_cast<std::int64_t>(w.size() / 2);
  r.edges = static_cast<std::int64_t>(w.size());
  r.faces = static_cast<std::int64_t>(faces.faces.size());
  r.chi = r.vertices - r.edges + r.faces;
  return r;
}

bool is_planar_signed(const GaussWord& w) {
  require_signed(w);
  require_valid(w);
  if (w.empty()) return true;
  return euler_characteristic(w).chi == 2;
}

}  // namespace gauss::carter
