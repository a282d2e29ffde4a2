#include <doctest.h>

#include <numeric>
#include <random>

#include "gausswords/carter.hpp"
#include "gausswords/oracle.hpp"
#include "support/reference.hpp"

using namespace gauss;
using carter::TraversalState;

namespace {

constexpr auto L = Direction::Left;
constexpr auto R = Direction::Right;

const char* kSignedTrefoil = "U1+ O2+ U3+ O1+ U2+ O3+";
const char* kVirtual = "O1- O2- U1- O3+ U2- U3+";

using Faces = std::vector<std::vector<TraversalState>>;

}  // namespace

TEST_CASE("turn matches the rule table") {
  for (auto d : {L, R})
    for (auto s : {Strand::Over, Strand::Under})
      for (auto sign : {Sign::Plus, Sign::Minus})
        CHECK(carter::turn(d, s, sign) == ref::rule_table(d, s, sign));
}

TEST_CASE("left_turn_step") {
  const auto w = parse(kSignedTrefoil);
  // (Right, O1+) -> (U1+, Right): counterpart at 0, right neighbour 1.
  CHECK(carter::left_turn_step(w, {3, R}) == TraversalState{1, R});
  // (Right, U1+) -> (O1+, Left): counterpart at 3, left neighbour 2.
  CHECK(carter::left_turn_step(w, {0, R}) == TraversalState{2, L});
  CHECK_THROWS_AS(carter::left_turn_step(parse("U1 O2 U3 O1 U2 O3"), {0, R}), InvalidWord);
  CHECK_THROWS_AS(carter::left_turn_step(parse("U1+ O2+"), {0, R}), InvalidWord);
  CHECK_THROWS_AS(carter::left_turn_step(w, {6, R}), std::out_of_range);
}

TEST_CASE("left_turn_step is a bijection on every state set") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto w = oracle::random_word(rng, 1 + i % 10, true);
    const carter::Surface surface(w);
    std::vector<int> hits(surface.state_count(), 0);
    for (std::size_t k = 0; k < surface.state_count(); ++k) {
      const auto s = surface.state(k);
      const auto t = surface.step(s);
      CHECK(t == TraversalState{ref::step(w, {s.position, s.incoming}).first,
                                ref::step(w, {s.position, s.incoming}).second});
      CHECK(surface.step_back(t) == s);
      ++hits[surface.index(t)];
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("enumerate_faces golden decompositions") {
  // Frozen from a separate orbit enumeration of the rule table.
  SUBCASE("signed trefoil") {
    const auto fd = carter::enumerate_faces(parse(kSignedTrefoil));
    const Faces expected{{{0, L}, {4, R}},
                         {{0, R}, {2, L}},
                         {{1, L}, {3, L}, {5, L}},
                         {{1, R}, {5, R}, {3, R}},
                         {{2, R}, {4, L}}};
    CHECK(fd.faces == expected);
  }
  SUBCASE("single curl") {
    const auto fd = carter::enumerate_faces(parse("U1+ O1+"));
    const Faces expected{{{0, L}, {0, R}}, {{1, L}}, {{1, R}}};
    CHECK(fd.faces == expected);
  }
  SUBCASE("virtual word: one face through all twelve states") {
    const auto fd = carter::enumerate_faces(parse(kVirtual));
    const Faces expected{{{0, L}, {3, R}, {0, R}, {1, L}, {5, R}, {2, L},
                          {5, L}, {4, R}, {2, R}, {1, R}, {3, L}, {4, L}}};
    CHECK(fd.faces == expected);
  }
  CHECK_THROWS_AS(carter::enumerate_faces(parse("")), InvalidWord);
  CHECK_THROWS_AS(carter::enumerate_faces(parse("U1+ O1-")), InvalidWord);
}

TEST_CASE("euler_characteristic") {
  CHECK(carter::euler_characteristic(parse(kSignedTrefoil)) == carter::EulerReport{3, 6, 5, 2});
  CHECK(carter::euler_characteristic(parse("U1+ O1+")) == carter::EulerReport{1, 2, 3, 2});
  CHECK(carter::euler_characteristic(parse(kVirtual)) == carter::EulerReport{3, 6, 1, -2});
}

TEST_CASE("is_planar_signed") {
  CHECK(carter::is_planar_signed(parse(kSignedTrefoil)));
  CHECK_FALSE(carter::is_planar_signed(parse(kVirtual)));
  CHECK(carter::is_planar_signed(apply_signing(parse(""), {})));
  CHECK(carter::is_planar_signed(parse("")));
  CHECK_THROWS_AS(carter::is_planar_signed(parse("U1+ U2+ O1+")), InvalidWord);
  CHECK_THROWS_AS(carter::is_planar_signed(parse("U1 O1")), InvalidWord);
}

TEST_CASE("face structure invariants on random signed words") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 12;
    const auto w = oracle::random_word(rng, n, true);
    const auto fd = carter::enumerate_faces(w);

    std::size_t total = 0;
    std::vector<std::size_t> corners(n, 0);
    std::set<TraversalState> seen;
    for (const auto& face : fd.faces) {
      total += face.size();
      CHECK(face.front() == *std::min_element(face.begin(), face.end()));
      for (std::size_t k = 0; k < face.size(); ++k) {
        CHECK(carter::left_turn_step(w, face[k]) == face[(k + 1) % face.size()]);
        seen.insert(face[k]);
        ++corners[w[face[k].position].label.value() - 1];
      }
    }
    CHECK(total == 4 * n);
    CHECK(seen.size() == 4 * n);
    CHECK(std::all_of(corners.begin(), corners.end(), [](auto c) { return c == 4; }));
    for (std::size_t f = 1; f < fd.faces.size(); ++f)
      CHECK(fd.faces[f - 1].front() < fd.faces[f].front());

    const auto e = carter::euler_characteristic(w);
    CHECK(static_cast<std::size_t>(e.faces) == ref::faces_per_crossing(w));
    CHECK(e.chi <= 2);
    CHECK(e.chi % 2 == 0);
    CHECK(carter::euler_characteristic(flip_signs(w)).chi == e.chi);
    CHECK(carter::euler_characteristic(rotate(w, i % w.size())).chi == e.chi);
    CHECK(carter::euler_characteristic(relabel(w, [&](Label l) {
            return Label(3 * (n + 1 - l.value()) + 7);
          })).chi == e.chi);
  }
}
