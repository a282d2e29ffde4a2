#pragma once

// Brute-force reference checks and word generators.
//
// The unsigned-planarity oracle rests on one stated assumption: an unsigned
// word is planar iff at least one of its 2^n signings has a spherical Carter
// surface. A planar diagram of the word induces such a signing, and a
// spherical surface yields a planar diagram, but the two directions are not
// re-proved here. Any disagreement between the oracle and
// interlace::is_planar_unsigned is a finding to report, not to hide.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "gausswords/interlacement.hpp"
#include "gausswords/word.hpp"

namespace gauss::oracle {

inline constexpr std::size_t kDefaultMaxCrossings = 12;
inline constexpr std::size_t kDefaultMaxVertices = 12;
inline constexpr std::size_t kMaxExhaustiveCrossings = 6;

/// True iff some signing of w is planar. Throws LimitExceeded above max_crossings.
bool brute_force_unsigned_planarity(const GaussWord& w,
                                    std::size_t max_crossings = kDefaultMaxCrossings);

/// True iff every simple cycle of g has an even beta sum.
bool brute_force_cycle_parity(const interlace::InterlacementGraph& g,
                              std::size_t max_vertices = kDefaultMaxVertices);

struct Exhaustive {
  std::size_t crossings = 0;
};

struct Random {
  std::size_t min_crossings = 1;
  std::size_t max_crossings = 1;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  bool with_signs = false;
};

using CorpusPolicy = std::variant<Exhaustive, Random>;

struct WordCorpus {
  CorpusPolicy policy;
  std::vector<GaussWord> words;
};

/// Exhaustive: every valid unsigned word on n crossings whose first symbol is
/// U1 and whose labels are numbered by first occurrence, in lexicographic
/// construction order. Throws LimitExceeded for n > 6.
/// Random: count words with crossing counts drawn uniformly from the range.
WordCorpus generate(const CorpusPolicy& policy);

/// Uniform integer in [0, bound) from the raw engine output, so results do
/// not depend on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// A random valid word with labels 1..n.
GaussWord random_word(std::mt19937_64& rng, std::size_t crossings, bool with_signs);

/// A random simple graph on labels 1..vertices with random beta values.
interlace::InterlacementGraph random_graph(std::mt19937_64& rng, std::size_t vertices,
                                           double edge_probability);

std::string describe(const CorpusPolicy& policy);

/// One header comment line, then one word per line.
void write_corpus(std::ostream& os, const WordCorpus& corpus);

}  // namespace gauss::oracle
