#include <json.hpp>

#include "gausswords/automaton.hpp"

namespace gauss::ra {

using json = nlohmann::ordered_json;

namespace {

json value_to_json(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Begin:
      return "BEGIN";
    case Value::Kind::End:
      return "END";
    case Value::Kind::Datum:
      break;
  }
  return v.datum;
}

Value value_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "BEGIN") return Value::begin();
    if (s == "END") return Value::end();
    throw SpecError("register value must be a natural number, \"BEGIN\" or \"END\"");
  }
  if (j.is_number_unsigned()) return Value::of(j.get<std::uint64_t>());
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
    return Value::of(static_cast<std::uint64_t>(j.get<std::int64_t>()));
  throw SpecError("register value must be a natural number, \"BEGIN\" or \"END\"");
}

std::string move_name(Move m) {
  switch (m) {
    case Move::Left:
      return "left";
    case Move::Right:
      return "right";
    case Move::Stay:
      break;
  }
  return "stay";
}

Move move_from_name(const std::string& s) {
  if (s == "left") return Move::Left;
  if (s == "right") return Move::Right;
  if (s == "stay") return Move::Stay;
  throw SpecError("move must be one of stay, left, right");
}

RuleForm form_from_json(const json& j) {
  if (j.is_number_integer()) {
    const auto n = j.get<int>();
    if (n >= 1 && n <= 4) return static_cast<RuleForm>(n);
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.size() == 5 && s.rfind("Type", 0) == 0 && s[4] >= '1' && s[4] <= '4')
      return static_cast<RuleForm>(s[4] - '0');
  }
  throw SpecError("rule form must be Type1..Type4");
}

std::size_t register_from_json(const json& j, std::size_t k) {
  const auto r = j.get<std::int64_t>();
  if (r < 1 || static_cast<std::size_t>(r) > k) throw SpecError("register index out of range");
  return static_cast<std::size_t>(r - 1);
}

}  // namespace

RegisterAutomatonSpec spec_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed automaton JSON: ") + e.what());
  }
  try {
    RegisterAutomatonSpec spec;
    spec.states = j.at("states").get<std::vector<std::string>>();
    spec.initial = spec.state_index(j.at("initial").get<std::string>());
    for (const auto& f : j.at("finals")) spec.finals.insert(spec.state_index(f.get<std::string>()));
    spec.k = j.at("k").get<std::size_t>();
    for (const auto& v : j.at("initial_assignment")) spec.initial_assignment.push_back(value_from_json(v));
    if (j.contains("tags")) spec.tags = j.at("tags").get<std::set<std::string>>();
    if (j.contains("deterministic")) spec.deterministic_claim = j.at("deterministic").get<bool>();
    for (const auto& r : j.at("rules")) {
      TransitionRule rule;
      rule.form = form_from_json(r.at("form"));
      if (r.contains("guard_tag")) rule.guard_tag = r.at("guard_tag").get<std::string>();
      rule.from = spec.state_index(r.at("from").get<std::string>());
      rule.to = spec.state_index(r.at("to").get<std::string>());
      if (r.contains("register")) rule.reg = register_from_json(r.at("register"), spec.k);
      if (r.contains("target_register"))
        rule.target = register_from_json(r.at("target_register"), spec.k);
      rule.move = move_from_name(r.value("move", std::string("stay")));
      spec.rules.push_back(std::move(rule));
    }
    spec.check();
    return spec;
  } catch (const json::exception& e) {
    throw SpecError(std::string("invalid automaton spec: ") + e.what());
  }
}

std::string spec_to_json(const RegisterAutomatonSpec& spec) {
  json j;
  j["schema"] = "gausswords.automaton/1";
  j["states"] = spec.states;
  j["initial"] = spec.states.at(spec.initial);
  json finals = json::array();
  for (auto f : spec.finals) finals.push_back(spec.states.at(f));
  j["finals"] = finals;
  j["k"] = spec.k;
  json init = json::array();
  for (const auto& v : spec.initial_assignment) init.push_back(value_to_json(v));
  j["initial_assignment"] = init;
  if (spec.tags) j["tags"] = *spec.tags;
  j["deterministic"] = spec.deterministic_claim;
  json rules = json::array();
  for (const auto& r : spec.rules) {
    json o;
    o["form"] = "Type" + std::to_string(static_cast<int>(r.form));
    if (r.guard_tag) o["guard_tag"] = *r.guard_tag;
    o["from"] = spec.states.at(r.from);
    o["to"] = spec.states.at(r.to);
    if (r.reg) o["register"] = *r.reg + 1;
    if (r.target) o["target_register"] = *r.target + 1;
    o["move"] = move_name(r.move);
    rules.push_back(o);
  }
  j["rules"] = rules;
  return j.dump(2) + "\n";
}

DataWord data_word_from_json(std::string_view text) {
  try {
    const auto j = json::parse(text);
    DataWord out;
    for (const auto& l : j) out.push_back({l.at("tag").get<std::string>(), l.at("datum").get<std::uint64_t>()});
    return out;
  } catch (const json::exception& e) {
    throw Error(std::string("invalid data word JSON: ") + e.what());
  }
}

std::string configuration_to_json(const RegisterAutomatonSpec& spec, const Configuration& c) {
  json j;
  j["state"] = spec.states.at(c.state);
  j["head"] = c.head;
  json regs = json::array();
  for (const auto& v : c.registers) regs.push_back(value_to_json(v));
  j["registers"] = regs;
  return j.dump();
}

}  // namespace gauss::ra
