#include "gausswords/oracle.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "gausswords/carter.hpp"

namespace gauss::oracle {

bool brute_force_unsigned_planarity(const GaussWord& w, std::size_t max_crossings) {
  if (w.is_signed()) throw InvalidWord("the signing oracle expects an unsigned word");
  require_valid(w);
  const auto n = w.labels().size();
  if (n > max_crossings)
    throw LimitExceeded("word has " + std::to_string(n) + " crossings; oracle bound is " +
                        std::to_string(max_crossings));
  if (w.empty()) return true;
  SigningEnumerator signings(w);
  while (auto s = signings.next()) {
    if (carter::is_planar_signed(*s)) return true;
  }
  return false;
}

namespace {

// Depth-first search for simple cycles through `start` that only use vertices
// with a larger index, so each cycle is met from its least vertex.
class CycleSearch {
 public:
  explicit CycleSearch(const interlace::InterlacementGraph& g)
      : g_(g), on_path_(g.vertices().size(), false) {}

  bool has_odd_cycle() {
    for (std::size_t s = 0; s < g_.vertices().size(); ++s) {
      start_ = s;
      on_path_[s] = true;
      const bool odd = extend(s, 0, 0);
      on_path_[s] = false;
      if (odd) return true;
    }
    return false;
  }

 private:
  bool extend(std::size_t u, std::size_t length, int parity) {
    for (const auto& [v, e] : g_.neighbours(u)) {
      const int p = parity ^ g_.edges()[e].beta;
      if (v == start_) {
        if (length >= 2 && p == 1) return true;
        continue;
      }
      if (v < start_ || on_path_[v]) continue;
      on_path_[v] = true;
      const bool odd = extend(v, length + 1, p);
      on_path_[v] = false;
      if (odd) return true;
    }
    return false;
  }

  const interlace::InterlacementGraph& g_;
  std::vector<bool> on_path_;
  std::size_t start_ = 0;
};

}  // namespace

bool brute_force_cycle_parity(const interlace::InterlacementGraph& g, std::size_t max_vertices) {
  if (g.vertices().size() > max_vertices)
    throw LimitExceeded("graph has " + std::to_string(g.vertices().size()) +
                        " vertices; cycle enumeration bound is " + std::to_string(max_vertices));
  return !CycleSearch(g).has_odd_cycle();
}

// ---------------------------------------------------------------------------

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

GaussWord random_word(std::mt19937_64& rng, std::size_t crossings, bool with_signs) {
  std::vector<std::uint64_t> labels;
  labels.reserve(2 * crossings);
  for (std::uint64_t l = 1; l <= crossings; ++l) {
    labels.push_back(l);
    labels.push_back(l);
  }
  for (std::size_t i = labels.size(); i > 1; --i)
    std::swap(labels[i - 1], labels[uniform_below(rng, i)]);

  std::vector<Strand> first(crossings + 1);
  std::vector<Sign> sign(crossings + 1);
  std::vector<bool> seen(crossings + 1, false);
  for (std::size_t l = 1; l <= crossings; ++l) {
    first[l] = uniform_below(rng, 2) == 0 ? Strand::Under : Strand::Over;
    sign[l] = uniform_below(rng, 2) == 0 ? Sign::Plus : Sign::Minus;
  }
  std::vector<Symbol> symbols;
  symbols.reserve(labels.size());
  for (auto l : labels) {
    const Strand s = seen[l] ? opposite(first[l]) : first[l];
    seen[l] = true;
    symbols.push_back({s, Label(l), with_signs ? std::optional(sign[l]) : std::nullopt});
  }
  return GaussWord(std::move(symbols),
                   with_signs ? Signedness::Signed : Signedness::Unsigned);
}

interlace::InterlacementGraph random_graph(std::mt19937_64& rng, std::size_t vertices,
                                           double edge_probability) {
  std::vector<Label> vs;
  for (std::uint64_t v = 1; v <= vertices; ++v) vs.emplace_back(v);
  std::vector<interlace::Edge> edges;
  const auto threshold = static_cast<std::uint64_t>(edge_probability * 1'000'000.0);
  for (std::uint64_t a = 1; a <= vertices; ++a) {
    for (std::uint64_t b = a + 1; b <= vertices; ++b) {
      if (uniform_below(rng, 1'000'000) >= threshold) continue;
      const int beta = static_cast<int>(uniform_below(rng, 2));
      edges.push_back({Label(a), Label(b), beta, static_cast<std::size_t>(beta)});
    }
  }
  return interlace::InterlacementGraph(std::move(vs), std::move(edges));
}

namespace {

void exhaustive(std::size_t n, std::vector<Symbol>& prefix, std::size_t used,
                std::vector<std::pair<std::uint64_t, Strand>>& open, std::vector<GaussWord>& out) {
  if (prefix.size() == 2 * n) {
    out.emplace_back(prefix, Signedness::Unsigned);
    return;
  }
  if (used < n) {
    const std::uint64_t label = used + 1;
    for (Strand s : {Strand::Under, Strand::Over}) {
      if (prefix.empty() && s == Strand::Over) continue;
      prefix.push_back({s, Label(label), std::nullopt});
      open.emplace_back(label, s);
      exhaustive(n, prefix, used + 1, open, out);
      open.pop_back();
      prefix.pop_back();
    }
  }
  for (std::size_t i = 0; i < open.size(); ++i) {
    const auto [label, s] = open[i];
    prefix.push_back({opposite(s), Label(label), std::nullopt});
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(i));
    exhaustive(n, prefix, used, open, out);
    open.insert(open.begin() + static_cast<std::ptrdiff_t>(i), {label, s});
    prefix.pop_back();
  }
}

}  // namespace

WordCorpus generate(const CorpusPolicy& policy) {
  WordCorpus corpus{policy, {}};
  if (const auto* e = std::get_if<Exhaustive>(&policy)) {
    if (e->crossings > kMaxExhaustiveCrossings)
      throw LimitExceeded("exhaustive generation is limited to " +
                          std::to_string(kMaxExhaustiveCrossings) + " crossings");
    std::vector<Symbol> prefix;
    std::vector<std::pair<std::uint64_t, Strand>> open;
    exhaustive(e->crossings, prefix, 0, open, corpus.words);
    return corpus;
  }
  const auto& r = std::get<Random>(policy);
  if (r.min_crossings > r.max_crossings) throw std::invalid_argument("empty crossing range");
  std::mt19937_64 rng(r.seed);
  corpus.words.reserve(r.count);
  for (std::size_t i = 0; i < r.count; ++i) {
    const auto n = r.min_crossings + uniform_below(rng, r.max_crossings - r.min_crossings + 1);
    corpus.words.push_back(random_word(rng, n, r.with_signs));
  }
  return corpus;
}

std::string describe(const CorpusPolicy& policy) {
  std::ostringstream os;
  if (const auto* e = std::get_if<Exhaustive>(&policy)) {
    os << "policy=exhaustive crossings=" << e->crossings;
  } else {
    const auto& r = std::get<Random>(policy);
    os << "policy=random crossings=" << r.min_crossings << ".." << r.max_crossings
       << " count=" << r.count << " seed=" << r.seed << " signed=" << (r.with_signs ? 1 : 0);
  }
  return os.str();
}

void write_corpus(std::ostream& os, const WordCorpus& corpus) {
  os << "# gausswords corpus " << describe(corpus.policy) << " words=" << corpus.words.size()
     << '\n';
  for (const auto& w : corpus.words) os << render(w) << '\n';
}

}  // namespace gauss::oracle
