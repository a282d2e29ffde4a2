#pragma once

// Two-way register automata over data words.
//
// Rule forms (registers are 1-based in the file format, 0-based here):
//   Type1  (i, q) -> (q', d)       observed value equals register i
//   Type2  q -> (q', i, d)         observed value is in no register; store it in i
//   Type3  (i, q) -> (q', j, d)    observed value equals register i; copy it to j
//   Type4  q -> (q', d)            observed value is in no register
// Any rule may carry a tag guard, which then also requires the head to be on a
// letter with that tag. The tape is the word between a begin marker at head
// position 0 and an end marker at position n + 1; the head starts at 1.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gausswords/word.hpp"

namespace gauss::ra {

/// A register or tape value: a datum or one of the two end markers.
struct Value {
  enum class Kind : std::uint8_t { Datum, Begin, End };

  Kind kind = Kind::Datum;
  std::uint64_t datum = 0;

  static Value of(std::uint64_t d) noexcept { return {Kind::Datum, d}; }
  static Value begin() noexcept { return {Kind::Begin, 0}; }
  static Value end() noexcept { return {Kind::End, 0}; }

  auto operator<=>(const Value&) const = default;
};

std::string to_string(const Value& v);

struct Letter {
  std::string tag;
  std::uint64_t datum = 0;

  bool operator==(const Letter&) const = default;
};

using DataWord = std::vector<Letter>;

/// Tag = strand letter followed by the sign, if any ("U", "O+", ...); datum = label.
DataWord to_data_word(const GaussWord& w);

enum class RuleForm : std::uint8_t { Type1 = 1, Type2 = 2, Type3 = 3, Type4 = 4 };
enum class Move : std::uint8_t { Stay, Left, Right };

struct TransitionRule {
  RuleForm form = RuleForm::Type1;
  std::optional<std::string> guard_tag;
  std::size_t from = 0;
  std::size_t to = 0;
  /// Compared register (Type1, Type3) or store target (Type2).
  std::optional<std::size_t> reg;
  /// Copy target of Type3.
  std::optional<std::size_t> target;
  Move move = Move::Stay;

  auto operator<=>(const TransitionRule&) const = default;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

struct RegisterAutomatonSpec {
  std::vector<std::string> states;
  std::size_t initial = 0;
  std::set<std::size_t> finals;
  std::size_t k = 0;
  std::vector<Value> initial_assignment;  // size k
  std::vector<TransitionRule> rules;
  bool deterministic_claim = false;
  /// Declared tag alphabet; absent means any tag is accepted.
  std::optional<std::set<std::string>> tags;

  /// Throws SpecError if an index is out of range or a rule has the wrong
  /// register fields for its form.
  void check() const;
  std::size_t state_index(std::string_view name) const;
};

struct Configuration {
  std::size_t state = 0;
  std::size_t head = 1;
  std::vector<Value> registers;

  auto operator<=>(const Configuration&) const = default;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& c) const noexcept;
};

Configuration initial_configuration(const RegisterAutomatonSpec& spec);

/// Value under the head (markers at positions 0 and n + 1).
Value observe(const DataWord& word, std::size_t head);

std::vector<std::size_t> applicable_rule_indices(const RegisterAutomatonSpec& spec,
                                                 const DataWord& word, const Configuration& c);
std::vector<TransitionRule> applicable_rules(const RegisterAutomatonSpec& spec,
                                             const DataWord& word, const Configuration& c);

class TapeBoundary : public Error {
 public:
  using Error::Error;
};

/// Applies one rule. Throws std::invalid_argument if the rule is not
/// applicable and TapeBoundary if the head would leave the delimited tape.
Configuration step(const RegisterAutomatonSpec& spec, const DataWord& word,
                   const Configuration& c, const TransitionRule& rule);

enum class Mode : std::uint8_t { Deterministic, Nondeterministic };
enum class Verdict : std::uint8_t { Accept, Reject };

class DeterminismViolation : public Error {
 public:
  using Error::Error;
};

class UndeclaredTag : public Error {
 public:
  using Error::Error;
};

struct RunOptions {
  Mode mode = Mode::Deterministic;
  bool trace = false;
  /// Optional hard cap on explored configurations; LimitExceeded past it.
  std::optional<std::uint64_t> max_configurations;
};

struct RunResult {
  Verdict verdict = Verdict::Reject;
  std::uint64_t explored = 0;
  /// |Q| * (n + 2) * V^k with V the distinct values that can ever reach a
  /// register (word data plus initial assignment); saturates at 2^64 - 1.
  std::uint64_t ceiling = 0;
  /// Configurations with two or more applicable rules (nondeterministic mode).
  std::uint64_t branching_configurations = 0;
  /// Deterministic mode: every visited configuration. Nondeterministic mode:
  /// one accepting path, if any.
  std::vector<Configuration> trace;

  bool accepted() const noexcept { return verdict == Verdict::Accept; }
};

std::uint64_t configuration_ceiling(const RegisterAutomatonSpec& spec, const DataWord& word);

/// Accepts iff a final state is reachable. Deterministic mode throws
/// DeterminismViolation when two rules apply; loops reject.
RunResult run(const RegisterAutomatonSpec& spec, const DataWord& word, const RunOptions& opts = {});

/// Rewrites a spec over rule types 1-4 into an equivalent one that uses only
/// Type1 and Type2 rules and one extra register.
///
/// The k + 1 physical registers always hold pairwise distinct values. The
/// finite control tracks which physical register each original register is
/// aliased to; registers outside that image are free and their stale values
/// stand for "no register". At least one register is always free, so a fresh
/// value can always be stored.
RegisterAutomatonSpec compile_modified_to_original(const RegisterAutomatonSpec& spec);

/// Counters encoded as data (first-appearance rank in the word).
class CounterCodec {
 public:
  /// Throws std::invalid_argument on an empty word.
  explicit CounterCodec(std::span<const std::uint64_t> data);

  /// Number of distinct data before the first appearance of `value`.
  std::size_t value(std::uint64_t datum) const;
  bool is_zero(std::uint64_t datum) const { return value(datum) == 0; }
  /// Datum that encodes value(datum) + 1; std::out_of_range past t - 1.
  std::uint64_t increment(std::uint64_t datum) const;
  /// Datum that encodes value(datum) - 1; std::out_of_range below zero.
  std::uint64_t decrement(std::uint64_t datum) const;
  /// Datum encoding n.
  std::uint64_t encode(std::size_t n) const;
  /// t, the number of distinct data.
  std::size_t capacity() const noexcept { return firsts_.size(); }

 private:
  std::vector<std::uint64_t> firsts_;  // data in order of first appearance
};

/// Deterministic two-way recognizers for valid unsigned and signed Gauss words.
RegisterAutomatonSpec unsigned_gauss_recognizer();
RegisterAutomatonSpec signed_gauss_recognizer();

struct BuiltinSpecs {
  RegisterAutomatonSpec unsigned_words;
  RegisterAutomatonSpec signed_words;
};

BuiltinSpecs builtin_specs();

// JSON forms of specs and data words.
RegisterAutomatonSpec spec_from_json(std::string_view text);
std::string spec_to_json(const RegisterAutomatonSpec& spec);
DataWord data_word_from_json(std::string_view text);
std::string configuration_to_json(const RegisterAutomatonSpec& spec, const Configuration& c);

}  // namespace gauss::ra
