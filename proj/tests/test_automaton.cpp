#include <doctest.h>

#include <fstream>
#include <random>

#include "gausswords/automaton.hpp"
#include "gausswords/oracle.hpp"

using namespace gauss;
using namespace gauss::ra;

namespace {

DataWord data(std::initializer_list<std::pair<const char*, std::uint64_t>> letters) {
  DataWord out;
  for (const auto& [tag, d] : letters) out.push_back({tag, d});
  return out;
}

RegisterAutomatonSpec one_state(std::vector<Value> regs, TransitionRule rule) {
  RegisterAutomatonSpec s;
  s.states = {"q", "f"};
  s.initial = 0;
  s.finals = {1};
  s.k = regs.size();
  s.initial_assignment = std::move(regs);
  rule.from = 0;
  rule.to = 1;
  s.rules = {rule};
  s.check();
  return s;
}

TransitionRule rule(RuleForm form, std::optional<std::size_t> reg = {},
                    std::optional<std::size_t> target = {}, Move move = Move::Right) {
  TransitionRule r;
  r.form = form;
  r.reg = reg;
  r.target = target;
  r.move = move;
  return r;
}

bool accepts(const RegisterAutomatonSpec& spec, const DataWord& w, Mode mode = Mode::Deterministic) {
  return run(spec, w, {mode, false, std::nullopt}).accepted();
}

}  // namespace

TEST_CASE("applicable_rules") {
  const auto w = data({{"a", 5}});
  SUBCASE("type 1 matches its register") {
    const auto s = one_state({Value::of(5)}, rule(RuleForm::Type1, 0));
    CHECK(applicable_rules(s, w, initial_configuration(s)).size() == 1);
  }
  SUBCASE("type 2 needs a fresh value") {
    const auto s = one_state({Value::of(5)}, rule(RuleForm::Type2, 0));
    CHECK(applicable_rules(s, data({{"a", 7}}), initial_configuration(s)).size() == 1);
    CHECK(applicable_rules(s, w, initial_configuration(s)).empty());
  }
  SUBCASE("type 4 is blocked by any equal register") {
    const auto s = one_state({Value::of(5), Value::of(5)}, rule(RuleForm::Type4));
    CHECK(applicable_rules(s, w, initial_configuration(s)).empty());
  }
  SUBCASE("markers are observable") {
    auto s = one_state({Value::end()}, rule(RuleForm::Type1, 0, {}, Move::Stay));
    Configuration c = initial_configuration(s);
    CHECK(applicable_rules(s, w, c).empty());
    c.head = 2;
    CHECK(applicable_rules(s, w, c).size() == 1);
    CHECK(observe(w, 0) == Value::begin());
    CHECK(observe(w, 1) == Value::of(5));
    CHECK(observe(w, 2) == Value::end());
  }
  SUBCASE("tag guard") {
    auto r = rule(RuleForm::Type1, 0);
    r.guard_tag = "b";
    const auto s = one_state({Value::of(5)}, r);
    CHECK(applicable_rules(s, w, initial_configuration(s)).empty());
    CHECK(applicable_rules(s, data({{"b", 5}}), initial_configuration(s)).size() == 1);
  }
}

TEST_CASE("step") {
  const auto w = data({{"a", 5}, {"a", 7}});
  SUBCASE("type 1 moves the head") {
    const auto s = one_state({Value::of(5)}, rule(RuleForm::Type1, 0));
    const auto c = step(s, w, initial_configuration(s), s.rules[0]);
    CHECK(c == Configuration{1, 2, {Value::of(5)}});
  }
  SUBCASE("type 2 stores") {
    const auto s = one_state({Value::of(1), Value::of(2)}, rule(RuleForm::Type2, 1, {}, Move::Left));
    const auto c = step(s, w, initial_configuration(s), s.rules[0]);
    CHECK(c == Configuration{1, 0, {Value::of(1), Value::of(5)}});
  }
  SUBCASE("type 3 copies") {
    const auto s = one_state({Value::of(5), Value::of(9)}, rule(RuleForm::Type3, 0, 1, Move::Stay));
    const auto c = step(s, w, initial_configuration(s), s.rules[0]);
    CHECK(c == Configuration{1, 1, {Value::of(5), Value::of(5)}});
  }
  SUBCASE("inapplicable rule and tape exit") {
    const auto s = one_state({Value::of(9)}, rule(RuleForm::Type1, 0));
    CHECK_THROWS_AS(step(s, w, initial_configuration(s), s.rules[0]), std::invalid_argument);
    const auto left = one_state({Value::begin()}, rule(RuleForm::Type1, 0, {}, Move::Left));
    Configuration c = initial_configuration(left);
    c.head = 0;
    CHECK_THROWS_AS(step(left, w, c, left.rules[0]), TapeBoundary);
    const auto right = one_state({Value::end()}, rule(RuleForm::Type1, 0, {}, Move::Right));
    c = initial_configuration(right);
    c.head = 3;
    CHECK_THROWS_AS(step(right, w, c, right.rules[0]), TapeBoundary);
  }
}

TEST_CASE("spec checks") {
  auto s = one_state({Value::of(1)}, rule(RuleForm::Type1, 0));
  s.rules[0].reg = 3;
  CHECK_THROWS_AS(s.check(), SpecError);
  s.rules[0] = rule(RuleForm::Type3, 0);
  s.rules[0].to = 1;
  CHECK_THROWS_AS(s.check(), SpecError);
  s = one_state({Value::of(1)}, rule(RuleForm::Type4));
  s.initial_assignment.clear();
  CHECK_THROWS_AS(s.check(), SpecError);
}

TEST_CASE("builtin recognizer examples") {
  const auto gw = unsigned_gauss_recognizer();
  CHECK(accepts(gw, data({{"U", 1}, {"O", 2}, {"U", 2}, {"O", 1}})));
  CHECK_FALSE(accepts(gw, data({{"U", 1}, {"U", 2}, {"O", 1}})));
  CHECK(accepts(gw, to_data_word(parse("U1 U2 U3 U4 O1 O2 O3 O4"))));
  CHECK(accepts(gw, {}));
  CHECK(gw.deterministic_claim);

  const auto sgw = signed_gauss_recognizer();
  CHECK(accepts(sgw, to_data_word(parse("U1+ O2+ U3+ O1+ U2+ O3+"))));
  CHECK_FALSE(accepts(sgw, to_data_word(parse("U1+ O1-"))));
  CHECK_THROWS_AS(run(sgw, to_data_word(parse("U1 O1"))), UndeclaredTag);
  CHECK_THROWS_AS(run(gw, data({{"X", 1}})), UndeclaredTag);
}

TEST_CASE("builtin recognizers agree with validate") {
  auto check_word = [](const GaussWord& w) {
    const auto& spec = w.is_signed() ? signed_gauss_recognizer() : unsigned_gauss_recognizer();
    const auto r = run(spec, to_data_word(w));
    CHECK(r.explored <= r.ceiling);
    CHECK(r.accepted() == validate(w).ok());
  };
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = 1 + i % 10;
    auto w = oracle::random_word(rng, n, i % 2 == 1);
    check_word(w);
    // Break the word: retag, relabel or drop one letter.
    std::vector<Symbol> syms(w.symbols().begin(), w.symbols().end());
    const auto p = oracle::uniform_below(rng, syms.size());
    switch (i % 3) {
      case 0: syms[p].strand = opposite(syms[p].strand); break;
      case 1: syms[p].label = Label(syms[p].label.value() % n + 1); break;
      default: syms.erase(syms.begin() + static_cast<std::ptrdiff_t>(p)); break;
    }
    if (w.is_signed() && i % 4 == 1) syms[p % syms.size()].sign = Sign::Minus;
    check_word(GaussWord(syms, w.signedness()));
  }
}

TEST_CASE("determinism violations are reported") {
  RegisterAutomatonSpec s;
  s.states = {"q", "a", "b"};
  s.finals = {1};
  s.k = 1;
  s.initial_assignment = {Value::of(1)};
  s.deterministic_claim = true;
  s.rules = {rule(RuleForm::Type1, 0), rule(RuleForm::Type3, 0, 0)};
  s.rules[0].to = 1;
  s.rules[1].to = 2;
  s.check();
  const auto w = data({{"a", 1}});
  CHECK_THROWS_AS(run(s, w), DeterminismViolation);
  const auto r = run(s, w, {Mode::Nondeterministic, true, std::nullopt});
  CHECK(r.accepted());
  CHECK(r.branching_configurations == 1);
  CHECK(r.trace.size() == 2);
  CHECK(r.trace.back().state == 1);
}

TEST_CASE("loops reject") {
  RegisterAutomatonSpec s;
  s.states = {"q", "f"};
  s.finals = {1};
  s.k = 1;
  s.initial_assignment = {Value::of(1)};
  s.rules = {rule(RuleForm::Type1, 0, {}, Move::Stay)};
  s.rules[0].to = 0;
  s.check();
  const auto r = run(s, data({{"a", 1}}));
  CHECK_FALSE(r.accepted());
  CHECK(r.explored == 1);
  CHECK_THROWS_AS(run(unsigned_gauss_recognizer(), to_data_word(parse("U1 O1")),
                      {Mode::Deterministic, false, 2}),
                  LimitExceeded);
}

TEST_CASE("configuration ceiling") {
  const auto gw = unsigned_gauss_recognizer();
  const auto w = to_data_word(parse("U1 O2 U2 O1"));
  // 2 data + 2 markers, 3 registers, 6 tape positions.
  CHECK(configuration_ceiling(gw, w) == gw.states.size() * 6 * 64);
}

TEST_CASE("compilation preserves acceptance") {
  SUBCASE("only Type1 and Type2 rules remain") {
    for (const auto& spec : {unsigned_gauss_recognizer(), signed_gauss_recognizer()}) {
      const auto c = compile_modified_to_original(spec);
      CHECK(c.k == spec.k + 1);
      for (const auto& r : c.rules)
        CHECK((r.form == RuleForm::Type1 || r.form == RuleForm::Type2));
      CHECK_NOTHROW(c.check());
    }
  }
  SUBCASE("type 3 self-copy on single letters") {
    const auto s = one_state({Value::of(1)}, rule(RuleForm::Type3, 0, 0));
    const auto c = compile_modified_to_original(s);
    for (std::uint64_t d = 1; d <= 3; ++d) {
      const auto w = data({{"a", d}});
      CHECK(accepts(c, w) == accepts(s, w));
      CHECK(accepts(c, w) == (d == 1));
    }
  }
  SUBCASE("conservative on Type1/Type2 specs") {
    const auto s = one_state({Value::of(1)}, rule(RuleForm::Type2, 0));
    const auto c = compile_modified_to_original(s);
    for (std::uint64_t d = 1; d <= 3; ++d) CHECK(accepts(c, data({{"a", d}})) == (d != 1));
  }
  SUBCASE("recognizers on random words") {
    const auto gw = unsigned_gauss_recognizer();
    const auto cgw = compile_modified_to_original(gw);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
      DataWord w;
      const auto len = oracle::uniform_below(rng, 11);
      for (std::uint64_t p = 0; p < len; ++p)
        w.push_back({oracle::uniform_below(rng, 2) ? "U" : "O", 1 + oracle::uniform_below(rng, 4)});
      const auto a = run(gw, w);
      const auto b = run(cgw, w);
      CHECK(a.accepted() == b.accepted());
      CHECK(b.explored <= b.ceiling);
    }
  }
}

TEST_CASE("counter codec") {
  const std::vector<std::uint64_t> w{5, 7, 5, 9};
  const CounterCodec codec(w);
  CHECK(codec.value(5) == 0);
  CHECK(codec.is_zero(5));
  CHECK(codec.value(7) == 1);
  CHECK(codec.value(9) == 2);
  CHECK(codec.capacity() == 3);
  CHECK(codec.increment(5) == 7);
  CHECK(codec.decrement(9) == 7);
  CHECK(codec.encode(2) == 9);
  CHECK_THROWS_AS(codec.increment(9), std::out_of_range);
  CHECK_THROWS_AS(codec.decrement(5), std::out_of_range);
  CHECK_THROWS_AS(codec.value(4), std::invalid_argument);
  CHECK_THROWS_AS(CounterCodec(std::span<const std::uint64_t>{}), std::invalid_argument);
}

TEST_CASE("json") {
  SUBCASE("spec round trip") {
    for (const auto& spec : {unsigned_gauss_recognizer(), signed_gauss_recognizer()}) {
      const auto text = spec_to_json(spec);
      const auto back = spec_from_json(text);
      CHECK(back.states == spec.states);
      CHECK(back.rules == spec.rules);
      CHECK(back.initial_assignment == spec.initial_assignment);
      CHECK(back.tags == spec.tags);
      CHECK(spec_to_json(back) == text);
    }
  }
  SUBCASE("minimal spec") {
    const auto s = spec_from_json(R"({"states": ["q", "f"], "initial": "q", "finals": ["f"], "k": 1,
      "initial_assignment": ["BEGIN"],
      "rules": [{"form": "Type2", "from": "q", "to": "f", "register": 1, "move": "right"}]})");
    CHECK(s.k == 1);
    CHECK(s.rules[0].reg == 0);
    CHECK_FALSE(s.tags);
    CHECK(accepts(s, data({{"x", 4}})));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(spec_from_json("{"), SpecError);
    CHECK_THROWS_AS(spec_from_json(R"({"states": ["q"], "initial": "nope", "finals": [], "k": 0,
      "initial_assignment": [], "rules": []})"),
                    SpecError);
  }
  SUBCASE("data words") {
    CHECK(data_word_from_json(R"([{"tag": "U", "datum": 1}, {"tag": "O", "datum": 1}])") ==
          to_data_word(parse("U1 O1")));
    CHECK_THROWS_AS(data_word_from_json(R"([{"tag": "U"}])"), Error);
  }
}

#ifdef GAUSSWORDS_SPEC_DIR
TEST_CASE("shipped spec files match the builtins") {
  auto slurp = [](const std::string& name) {
    std::ifstream in(std::string(GAUSSWORDS_SPEC_DIR) + "/" + name);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  CHECK(spec_from_json(slurp("l_gw.json")).rules == unsigned_gauss_recognizer().rules);
  CHECK(spec_from_json(slurp("l_sgw.json")).rules == signed_gauss_recognizer().rules);
  CHECK(spec_to_json(spec_from_json(slurp("l_gw.json"))) == spec_to_json(unsigned_gauss_recognizer()));
}
#endif
