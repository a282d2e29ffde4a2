#include "gausswords/automaton.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gauss::ra {

std::string to_string(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Begin:
      return "BEGIN";
    case Value::Kind::End:
      return "END";
    case Value::Kind::Datum:
      break;
  }
  return std::to_string(v.datum);
}

DataWord to_data_word(const GaussWord& w) {
  DataWord out;
  out.reserve(w.size());
  for (const auto& s : w.symbols()) {
    std::string tag(1, to_char(s.strand));
    if (s.sign) tag += to_char(*s.sign);
    out.push_back({std::move(tag), s.label.value()});
  }
  return out;
}

// ---------------------------------------------------------------------------

void RegisterAutomatonSpec::check() const {
  if (states.empty()) throw SpecError("automaton has no states");
  if (initial >= states.size()) throw SpecError("initial state out of range");
  for (auto f : finals)
    if (f >= states.size()) throw SpecError("final state out of range");
  if (initial_assignment.size() != k)
    throw SpecError("initial assignment must have exactly k values");
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const auto& rule = rules[r];
    const auto where = "rule " + std::to_string(r + 1) + ": ";
    if (rule.from >= states.size() || rule.to >= states.size())
      throw SpecError(where + "state out of range");
    const bool wants_reg = rule.form != RuleForm::Type4;
    const bool wants_target = rule.form == RuleForm::Type3;
    if (rule.reg.has_value() != wants_reg) throw SpecError(where + "register field mismatch");
    if (rule.target.has_value() != wants_target)
      throw SpecError(where + "target register field mismatch");
    if (rule.reg && *rule.reg >= k) throw SpecError(where + "register out of range");
    if (rule.target && *rule.target >= k) throw SpecError(where + "target register out of range");
    if (rule.guard_tag && tags && !tags->contains(*rule.guard_tag))
      throw SpecError(where + "guard tag '" + *rule.guard_tag + "' is not declared");
  }
}

std::size_t RegisterAutomatonSpec::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return i;
  throw SpecError("unknown state '" + std::string(name) + "'");
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
  std::size_t h = c.state * 0x9e3779b97f4a7c15ULL ^ (c.head + 0x632be59bd9b4e019ULL);
  for (const auto& v : c.registers) {
    const std::size_t x = (static_cast<std::size_t>(v.kind) << 61) ^ v.datum;
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Configuration initial_configuration(const RegisterAutomatonSpec& spec) {
  return {spec.initial, 1, spec.initial_assignment};
}

Value observe(const DataWord& word, std::size_t head) {
  if (head == 0) return Value::begin();
  if (head == word.size() + 1) return Value::end();
  if (head > word.size() + 1) throw std::out_of_range("head outside the tape");
  return Value::of(word[head - 1].datum);
}

namespace {

bool rule_applies(const TransitionRule& rule, const DataWord& word, const Configuration& c,
                  const Value& seen) {
  if (rule.from != c.state) return false;
  if (rule.guard_tag) {
    if (c.head == 0 || c.head > word.size()) return false;
    if (word[c.head - 1].tag != *rule.guard_tag) return false;
  }
  switch (rule.form) {
    case RuleForm::Type1:
    case RuleForm::Type3:
      return c.registers[*rule.reg] == seen;
    case RuleForm::Type2:
    case RuleForm::Type4:
      return std::find(c.registers.begin(), c.registers.end(), seen) == c.registers.end();
  }
  return false;
}

Configuration apply(const DataWord& word, const Configuration& c, const TransitionRule& rule,
                    const Value& seen) {
  Configuration next = c;
  next.state = rule.to;
  if (rule.form == RuleForm::Type2) next.registers[*rule.reg] = seen;
  if (rule.form == RuleForm::Type3) next.registers[*rule.target] = seen;
  switch (rule.move) {
    case Move::Stay:
      break;
    case Move::Left:
      if (c.head == 0) throw TapeBoundary("head cannot move left of the begin marker");
      --next.head;
      break;
    case Move::Right:
      if (c.head == word.size() + 1) throw TapeBoundary("head cannot move right of the end marker");
      ++next.head;
      break;
  }
  return next;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

void check_tags(const RegisterAutomatonSpec& spec, const DataWord& word) {
  if (!spec.tags) return;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!spec.tags->contains(word[i].tag))
      throw UndeclaredTag("letter " + std::to_string(i + 1) + " has undeclared tag '" +
                          word[i].tag + "'");
  }
}

}  // namespace

std::vector<std::size_t> applicable_rule_indices(const RegisterAutomatonSpec& spec,
                                                 const DataWord& word, const Configuration& c) {
  const Value seen = observe(word, c.head);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < spec.rules.size(); ++r)
    if (rule_applies(spec.rules[r], word, c, seen)) out.push_back(r);
  return out;
}

std::vector<TransitionRule> applicable_rules(const RegisterAutomatonSpec& spec,
                                             const DataWord& word, const Configuration& c) {
  std::vector<TransitionRule> out;
  for (auto r : applicable_rule_indices(spec, word, c)) out.push_back(spec.rules[r]);
  return out;
}

Configuration step(const RegisterAutomatonSpec& spec, const DataWord& word,
                   const Configuration& c, const TransitionRule& rule) {
  if (rule.reg && *rule.reg >= spec.k) throw std::invalid_argument("rule register out of range");
  const Value seen = observe(word, c.head);
  if (!rule_applies(rule, word, c, seen)) throw std::invalid_argument("rule is not applicable");
  return apply(word, c, rule, seen);
}

std::uint64_t configuration_ceiling(const RegisterAutomatonSpec& spec, const DataWord& word) {
  std::set<Value> values(spec.initial_assignment.begin(), spec.initial_assignment.end());
  for (const auto& l : word) values.insert(Value::of(l.datum));
  std::uint64_t c = saturating_mul(spec.states.size(), word.size() + 2);
  for (std::size_t r = 0; r < spec.k; ++r) c = saturating_mul(c, values.size());
  return c;
}

RunResult run(const RegisterAutomatonSpec& spec, const DataWord& word, const RunOptions& opts) {
  spec.check();
  check_tags(spec, word);

  RunResult result;
  result.ceiling = configuration_ceiling(spec, word);
  auto count = [&] {
    ++result.explored;
    if (opts.max_configurations && result.explored > *opts.max_configurations)
      throw LimitExceeded("configuration budget exceeded");
    if (result.explored > result.ceiling)
      throw std::logic_error("explored more configurations than the ceiling allows");
  };

  if (opts.mode == Mode::Deterministic) {
    std::unordered_set<Configuration, ConfigurationHash> visited;
    Configuration c = initial_configuration(spec);
    while (true) {
      if (!visited.insert(c).second) return result;  // loop without acceptance
      count();
      if (opts.trace) result.trace.push_back(c);
      if (spec.finals.contains(c.state)) {
        result.verdict = Verdict::Accept;
        return result;
      }
      const auto rules = applicable_rule_indices(spec, word, c);
      if (rules.empty()) return result;
      if (rules.size() > 1)
        throw DeterminismViolation("state '" + spec.states[c.state] + "' at head " +
                                   std::to_string(c.head) + " has " +
                                   std::to_string(rules.size()) + " applicable rules");
      c = apply(word, c, spec.rules[rules.front()], observe(word, c.head));
    }
  }

  constexpr std::size_t no_parent = static_cast<std::size_t>(-1);
  std::vector<Configuration> nodes;
  std::vector<std::size_t> parent;
  std::unordered_map<Configuration, std::size_t, ConfigurationHash> index;
  std::deque<std::size_t> frontier;

  auto visit = [&](Configuration c, std::size_t from) {
    if (index.contains(c)) return;
    count();
    index.emplace(c, nodes.size());
    nodes.push_back(std::move(c));
    parent.push_back(from);
    frontier.push_back(nodes.size() - 1);
  };

  visit(initial_configuration(spec), no_parent);
  while (!frontier.empty()) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    if (spec.finals.contains(nodes[i].state)) {
      result.verdict = Verdict::Accept;
      if (opts.trace) {
        for (std::size_t at = i; at != no_parent; at = parent[at]) result.trace.push_back(nodes[at]);
        std::reverse(result.trace.begin(), result.trace.end());
      }
      return result;
    }
    const Value seen = observe(word, nodes[i].head);
    const auto rules = applicable_rule_indices(spec, word, nodes[i]);
    if (rules.size() > 1) ++result.branching_configurations;
    for (auto r : rules) visit(apply(word, nodes[i], spec.rules[r], seen), i);
  }
  return result;
}

// ---------------------------------------------------------------------------

RegisterAutomatonSpec compile_modified_to_original(const RegisterAutomatonSpec& spec) {
  spec.check();
  const std::size_t k = spec.k;
  const std::size_t slots = k + 1;
  using Alias = std::vector<std::size_t>;  // original register -> physical slot

  // Initial physical contents: distinct original values, then fillers.
  std::vector<Value> physical;
  Alias alias0(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto it = std::find(physical.begin(), physical.end(), spec.initial_assignment[i]);
    if (it == physical.end()) {
      alias0[i] = physical.size();
      physical.push_back(spec.initial_assignment[i]);
    } else {
      alias0[i] = static_cast<std::size_t>(it - physical.begin());
    }
  }
  std::vector<Value> fillers{Value::begin(), Value::end()};
  for (std::uint64_t d = 0; fillers.size() < slots + physical.size(); ++d) fillers.push_back(Value::of(d));
  for (const auto& f : fillers) {
    if (physical.size() == slots) break;
    if (std::find(physical.begin(), physical.end(), f) == physical.end()) physical.push_back(f);
  }

  RegisterAutomatonSpec out;
  out.k = slots;
  out.initial_assignment = physical;
  out.deterministic_claim = spec.deterministic_claim;
  out.tags = spec.tags;

  std::map<std::pair<std::size_t, Alias>, std::size_t> ids;
  std::vector<std::pair<std::size_t, Alias>> pending;
  auto id_of = [&](std::size_t q, const Alias& alias) {
    auto key = std::pair{q, alias};
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    std::string name = spec.states[q] + "|";
    for (std::size_t i = 0; i < alias.size(); ++i) {
      if (i) name += ',';
      name += std::to_string(alias[i] + 1);
    }
    const std::size_t id = out.states.size();
    out.states.push_back(std::move(name));
    if (spec.finals.contains(q)) out.finals.insert(id);
    ids.emplace(key, id);
    pending.push_back(std::move(key));
    return id;
  };

  out.initial = id_of(spec.initial, alias0);
  std::set<TransitionRule> emitted;
  auto emit = [&](TransitionRule r) {
    if (emitted.insert(r).second) out.rules.push_back(std::move(r));
  };

  while (!pending.empty()) {
    const auto [q, alias] = pending.back();
    pending.pop_back();
    const std::size_t from = ids.at({q, alias});

    std::vector<bool> used(slots, false);
    for (auto s : alias) used[s] = true;
    std::vector<std::size_t> free;
    for (std::size_t s = 0; s < slots; ++s)
      if (!used[s]) free.push_back(s);

    for (const auto& rule : spec.rules) {
      if (rule.from != q) continue;
      TransitionRule base;
      base.guard_tag = rule.guard_tag;
      base.from = from;
      base.move = rule.move;

      switch (rule.form) {
        case RuleForm::Type1: {
          TransitionRule r = base;
          r.form = RuleForm::Type1;
          r.reg = alias[*rule.reg];
          r.to = id_of(rule.to, alias);
          emit(r);
          break;
        }
        case RuleForm::Type3: {
          Alias next = alias;
          next[*rule.target] = alias[*rule.reg];
          TransitionRule r = base;
          r.form = RuleForm::Type1;
          r.reg = alias[*rule.reg];
          r.to = id_of(rule.to, next);
          emit(r);
          break;
        }
        case RuleForm::Type2:
        case RuleForm::Type4: {
          const bool stores = rule.form == RuleForm::Type2;
          // The observed value sits in a free slot: no original register has it.
          for (auto s : free) {
            Alias next = alias;
            if (stores) next[*rule.reg] = s;
            TransitionRule r = base;
            r.form = RuleForm::Type1;
            r.reg = s;
            r.to = id_of(rule.to, next);
            emit(r);
          }
          // The observed value is in no slot: write it into the first free one.
          Alias next = alias;
          if (stores) next[*rule.reg] = free.front();
          TransitionRule r = base;
          r.form = RuleForm::Type2;
          r.reg = free.front();
          r.to = id_of(rule.to, next);
          emit(r);
          break;
        }
      }
    }
  }
  out.check();
  return out;
}

// ---------------------------------------------------------------------------

CounterCodec::CounterCodec(std::span<const std::uint64_t> data) {
  if (data.empty()) throw std::invalid_argument("counter codec needs a nonempty word");
  std::unordered_set<std::uint64_t> seen;
  for (auto d : data)
    if (seen.insert(d).second) firsts_.push_back(d);
}

std::size_t CounterCodec::value(std::uint64_t datum) const {
  auto it = std::find(firsts_.begin(), firsts_.end(), datum);
  if (it == firsts_.end())
    throw std::invalid_argument("datum " + std::to_string(datum) + " does not occur in the word");
  return static_cast<std::size_t>(it - firsts_.begin());
}

std::uint64_t CounterCodec::increment(std::uint64_t datum) const {
  const auto v = value(datum);
  if (v + 1 >= firsts_.size()) throw std::out_of_range("counter is at its maximum");
  return firsts_[v + 1];
}

std::uint64_t CounterCodec::decrement(std::uint64_t datum) const {
  const auto v = value(datum);
  if (v == 0) throw std::out_of_range("counter is zero");
  return firsts_[v - 1];
}

std::uint64_t CounterCodec::encode(std::size_t n) const {
  if (n >= firsts_.size()) throw std::out_of_range("counter value exceeds capacity");
  return firsts_[n];
}

// ---------------------------------------------------------------------------
// Builtin recognizers
//
// Registers: 1 = datum under inspection, 2 = end marker, 3 = begin marker.
// For each position p (left to right) the machine walks left looking for an
// earlier occurrence of the datum. If there is one, p was already checked and
// the machine walks back to p. Otherwise it counts the occurrences of the
// datum over the whole word by tag, and walks back to p (the first occurrence)
// before moving on.

namespace {

class SpecBuilder {
 public:
  std::size_t state(const std::string& name) {
    for (std::size_t i = 0; i < spec.states.size(); ++i)
      if (spec.states[i] == name) return i;
    spec.states.push_back(name);
    return spec.states.size() - 1;
  }
  void rule(RuleForm form, const std::string& from, const std::string& to, Move move,
            std::optional<std::size_t> reg = {}, std::optional<std::size_t> target = {},
            std::optional<std::string> guard = {}) {
    TransitionRule r;
    r.form = form;
    r.from = state(from);
    r.to = state(to);
    r.move = move;
    r.reg = reg;
    r.target = target;
    r.guard_tag = std::move(guard);
    spec.rules.push_back(std::move(r));
  }

  RegisterAutomatonSpec spec;
};

constexpr std::size_t kCurrent = 0;
constexpr std::size_t kEnd = 1;
constexpr std::size_t kBegin = 2;

RegisterAutomatonSpec build_recognizer(bool with_signs) {
  SpecBuilder b;
  b.state("next");
  b.spec.initial = 0;
  b.spec.k = 3;
  b.spec.initial_assignment = {Value::begin(), Value::end(), Value::begin()};
  b.spec.deterministic_claim = true;
  b.spec.finals.insert(b.state("accept"));

  const std::vector<std::string> signs =
      with_signs ? std::vector<std::string>{"+", "-"} : std::vector<std::string>{""};
  std::set<std::string> tags;
  for (const auto& s : signs) {
    tags.insert("U" + s);
    tags.insert("O" + s);
  }
  b.spec.tags = tags;

  using enum RuleForm;
  b.rule(Type1, "next", "accept", Move::Stay, kEnd);
  b.rule(Type3, "next", "back", Move::Left, kCurrent, kCurrent);
  b.rule(Type2, "next", "back", Move::Left, kCurrent);

  b.rule(Type1, "back", "count", Move::Right, kBegin);
  b.rule(Type1, "back", "return", Move::Right, kCurrent);
  b.rule(Type4, "back", "back", Move::Left);

  b.rule(Type1, "return", "next", Move::Right, kCurrent);
  b.rule(Type4, "return", "return", Move::Right);

  // count[u][o][sign]: occurrences of U and O seen so far, and their sign.
  auto count_state = [&](int u, int o, const std::string& sign) {
    if (u == 0 && o == 0) return std::string("count");
    return "count_" + std::to_string(u) + std::to_string(o) + sign;
  };
  for (int u = 0; u <= 1; ++u) {
    for (int o = 0; o <= 1; ++o) {
      const std::vector<std::string> held =
          (u == 0 && o == 0) ? std::vector<std::string>{""} : signs;
      for (const auto& have : held) {
        const auto here = count_state(u, o, have);
        for (const auto& s : signs) {
          if (!have.empty() && have != s) continue;
          if (u == 0) b.rule(Type1, here, count_state(1, o, s), Move::Right, kCurrent, {}, "U" + s);
          if (o == 0) b.rule(Type1, here, count_state(u, 1, s), Move::Right, kCurrent, {}, "O" + s);
        }
        b.rule(Type4, here, here, Move::Right);
        if (u == 1 && o == 1) b.rule(Type1, here, "find", Move::Left, kEnd);
      }
    }
  }

  b.rule(Type1, "find", "return", Move::Right, kBegin);
  b.rule(Type1, "find", "find", Move::Left, kCurrent);
  b.rule(Type4, "find", "find", Move::Left);

  b.spec.check();
  return b.spec;
}

}  // namespace

RegisterAutomatonSpec unsigned_gauss_recognizer() { return build_recognizer(false); }
RegisterAutomatonSpec signed_gauss_recognizer() { return build_recognizer(true); }

BuiltinSpecs builtin_specs() { return {unsigned_gauss_recognizer(), signed_gauss_recognizer()}; }

}  // namespace gauss::ra
