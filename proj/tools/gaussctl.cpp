// gaussctl: validation, planarity, surface and interlacement diagnostics,
// oracle sweeps and register automaton runs for Gauss words.
//
// Exit codes: 0 property holds / accept, 1 property fails / reject,
// 2 invalid input, 3 limit exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gausswords/automaton.hpp"
#include "gausswords/carter.hpp"
#include "gausswords/export.hpp"
#include "gausswords/interlacement.hpp"
#include "gausswords/oracle.hpp"
#include "gausswords/word.hpp"

using json = nlohmann::ordered_json;
using namespace gauss;

namespace {

enum Exit : int { kHolds = 0, kFails = 1, kInvalid = 2, kLimit = 3 };

struct Globals {
  bool json = false;
  bool quiet = false;
  std::uint64_t seed = 0;
};

struct Input {
  std::vector<std::string> word;  // positional tokens, joined with spaces
  std::string file;
};

/// Result of one command on one input: exit code, text form and JSON form.
struct Outcome {
  int code = kHolds;
  std::string text;
  json record;
};

json symbols_json(const GaussWord& w) { return render(w); }

Outcome error_outcome(int code, const std::string& kind, const std::string& message,
                      const std::string& input) {
  json j;
  j["schema"] = "gausswords.error/1";
  j["input"] = input;
  j["error"] = kind;
  j["message"] = message;
  return {code, kind + ": " + message, j};
}

/// Runs fn, mapping library exceptions onto exit codes.
Outcome guarded(const std::string& input, const std::function<Outcome()>& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return error_outcome(kInvalid, "parse error", e.what(), input);
  } catch (const LimitExceeded& e) {
    return error_outcome(kLimit, "limit exceeded", e.what(), input);
  } catch (const ra::DeterminismViolation& e) {
    return error_outcome(kInvalid, "determinism violation", e.what(), input);
  } catch (const Error& e) {
    return error_outcome(kInvalid, "invalid input", e.what(), input);
  } catch (const std::invalid_argument& e) {
    return error_outcome(kInvalid, "invalid input", e.what(), input);
  } catch (const std::out_of_range& e) {
    return error_outcome(kInvalid, "invalid input", e.what(), input);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Single input from the positional word, otherwise batch lines from --file
/// or standard input. Blank lines and '#' comments are skipped in batch mode.
std::pair<bool, std::vector<std::string>> collect(const Input& in) {
  if (!in.word.empty()) {
    std::string joined;
    for (const auto& t : in.word) joined += (joined.empty() ? "" : " ") + t;
    return {false, {joined}};
  }
  std::vector<std::string> lines;
  std::ifstream file;
  if (!in.file.empty()) {
    file.open(in.file);
    if (!file) throw Error("cannot read " + in.file);
  }
  std::istream& is = in.file.empty() ? std::cin : file;
  std::string line;
  while (std::getline(is, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return {true, lines};
}

int emit(const Globals& g, bool batch, const Outcome& o) {
  if (!g.quiet) {
    if (batch || g.json) {
      std::cout << o.record.dump() << '\n';
    } else if (o.code == kInvalid || o.code == kLimit) {
      std::cerr << o.text << '\n';
    } else {
      std::cout << o.text << (o.text.empty() || o.text.back() == '\n' ? "" : "\n");
    }
  }
  return o.code;
}

/// Applies fn to every collected input; batch exit code is the worst seen.
int for_each_input(const Globals& g, const Input& in,
                   const std::function<Outcome(const std::string&)>& fn) {
  std::pair<bool, std::vector<std::string>> inputs;
  try {
    inputs = collect(in);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kInvalid;
  }
  int worst = kHolds;
  for (const auto& text : inputs.second) {
    const int code = emit(g, inputs.first, guarded(text, [&] { return fn(text); }));
    worst = std::max(worst, code);
  }
  return worst;
}

// --- validate --------------------------------------------------------------

Outcome cmd_validate(const std::string& text, bool via_automaton) {
  const auto w = parse(text);
  json j;
  j["schema"] = "gausswords.validate/1";
  j["word"] = symbols_json(w);
  j["signed"] = w.is_signed();
  std::ostringstream os;
  bool ok = false;
  if (via_automaton) {
    const auto spec = w.is_signed() ? ra::signed_gauss_recognizer() : ra::unsigned_gauss_recognizer();
    const auto r = ra::run(spec, ra::to_data_word(w));
    ok = r.accepted();
    j["method"] = "automaton";
    j["valid"] = ok;
    j["explored"] = r.explored;
    os << (ok ? "valid" : "invalid") << " (automaton, " << r.explored << " configurations)";
  } else {
    const auto report = validate(w);
    ok = report.ok();
    j["method"] = "direct";
    j["valid"] = ok;
    json vs = json::array();
    os << (ok ? "valid" : "invalid");
    for (const auto& v : report.violations) {
      const auto d = v.describe(w.signedness());
      vs.push_back(d);
      os << "\n  " << d;
    }
    j["violations"] = vs;
  }
  return {ok ? kHolds : kFails, os.str(), j};
}

// --- planar ----------------------------------------------------------------

json euler_json(const carter::EulerReport& e) {
  json j;
  j["vertices"] = e.vertices;
  j["edges"] = e.edges;
  j["faces"] = e.faces;
  j["chi"] = e.chi;
  return j;
}

std::string euler_text(const carter::EulerReport& e) {
  std::ostringstream os;
  os << "V=" << e.vertices << " E=" << e.edges << " F=" << e.faces << " chi=" << e.chi;
  return os.str();
}

json witness_json(const interlace::PlanarityVerdict& v) {
  if (const auto* l = std::get_if<Label>(&v.witness)) return {{"label", l->value()}};
  if (const auto* p = std::get_if<std::pair<Label, Label>>(&v.witness))
    return {{"pair", {p->first.value(), p->second.value()}}};
  if (const auto* c = std::get_if<std::vector<Label>>(&v.witness)) {
    json path = json::array();
    for (const auto& l : *c) path.push_back(l.value());
    return {{"cycle", path}};
  }
  return nullptr;
}

Outcome cmd_planar(const std::string& text) {
  const auto w = parse(text);
  require_valid(w);
  json j;
  j["schema"] = "gausswords.planar/1";
  j["word"] = symbols_json(w);
  j["signed"] = w.is_signed();
  std::ostringstream os;
  bool planar = false;
  if (w.is_signed()) {
    const auto e = carter::euler_characteristic(w);
    planar = e.chi == 2;
    j["planar"] = planar;
    j["euler"] = euler_json(e);
    os << (planar ? "planar" : "non-planar") << " (" << euler_text(e) << ")";
  } else {
    const auto v = interlace::is_planar_unsigned(w);
    planar = v.planar;
    j["planar"] = planar;
    j["failed_stage"] = v.failed_stage ? json(*v.failed_stage) : json(nullptr);
    j["witness"] = witness_json(v);
    os << (planar ? "planar" : "non-planar");
    if (v.failed_stage) os << ": stage " << *v.failed_stage << ", " << io::describe_witness(v);
  }
  return {planar ? kHolds : kFails, os.str(), j};
}

// --- faces / euler / interlace ---------------------------------------------

enum class Format { Text, Dot, Json };

Outcome cmd_faces(const std::string& text, Format f) {
  const auto fd = carter::enumerate_faces(parse(text));
  const auto j = json::parse(io::faces_to_json(fd));
  if (f == Format::Dot) return {kHolds, io::faces_to_dot(fd), j};
  if (f == Format::Json) return {kHolds, j.dump(), j};
  std::ostringstream os;
  for (std::size_t i = 0; i < fd.faces.size(); ++i) {
    os << "face " << i << ":";
    for (const auto& s : fd.faces[i]) os << ' ' << io::state_id(s);
    os << '\n';
  }
  return {kHolds, os.str(), j};
}

Outcome cmd_euler(const std::string& text) {
  const auto w = parse(text);
  const auto e = carter::euler_characteristic(w);
  return {kHolds, euler_text(e), json::parse(io::euler_to_json(w, e))};
}

Outcome cmd_interlace(const std::string& text, Format f) {
  const auto w = parse(text);
  const auto g = interlace::interlacement_graph(w);
  const auto j = json::parse(io::interlacement_to_json(g));
  if (f == Format::Dot) return {kHolds, io::interlacement_to_dot(g), j};
  if (f == Format::Json) return {kHolds, j.dump(), j};
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : g.vertices()) os << ' ' << v.value();
  os << '\n';
  for (const auto& e : j["edges"]) {
    os << e["u"] << " -- " << e["v"] << " beta=" << e["beta_count"] << " (mod 2: " << e["beta"]
       << ")\n";
  }
  return {kHolds, os.str(), j};
}

// --- oracle ----------------------------------------------------------------

Outcome cmd_oracle_word(const std::string& text, std::size_t max_crossings) {
  const auto w = parse(text);
  if (w.is_signed()) throw InvalidWord("the oracle takes unsigned words");
  require_valid(w);
  const bool brute = oracle::brute_force_unsigned_planarity(w, max_crossings);
  const bool fast = interlace::is_planar_unsigned(w).planar;
  json j;
  j["schema"] = "gausswords.oracle/1";
  j["word"] = symbols_json(w);
  j["oracle_planar"] = brute;
  j["algorithm_planar"] = fast;
  j["agree"] = brute == fast;
  std::string t = std::string(brute ? "planar" : "non-planar") + (brute == fast ? ", agrees" : ", DISAGREES");
  return {brute == fast ? kHolds : kFails, t, j};
}

oracle::CorpusPolicy parse_policy(const std::string& spec, std::uint64_t seed) {
  // exhaustive:N  or  random:MIN-MAX:COUNT
  const auto colon = spec.find(':');
  const auto kind = spec.substr(0, colon);
  const auto rest = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  try {
    if (kind == "exhaustive") return oracle::Exhaustive{std::stoul(rest)};
    if (kind == "random") {
      const auto dash = rest.find('-');
      const auto c2 = rest.find(':');
      if (dash == std::string::npos || c2 == std::string::npos || dash > c2) throw std::invalid_argument("");
      return oracle::Random{std::stoul(rest.substr(0, dash)), std::stoul(rest.substr(dash + 1, c2 - dash - 1)),
                            std::stoul(rest.substr(c2 + 1)), seed, false};
    }
  } catch (const std::logic_error&) {
  }
  throw Error("corpus must be exhaustive:N or random:MIN-MAX:COUNT, got '" + spec + "'");
}

Outcome cmd_oracle_corpus(const std::string& spec, std::uint64_t seed, std::size_t max_crossings) {
  const auto corpus = oracle::generate(parse_policy(spec, seed));
  std::size_t planar = 0;
  std::optional<GaussWord> counterexample;
  for (const auto& w : corpus.words) {
    const bool brute = oracle::brute_force_unsigned_planarity(w, max_crossings);
    planar += brute;
    if (brute != interlace::is_planar_unsigned(w).planar) {
      counterexample = w;
      break;
    }
  }
  json j;
  j["schema"] = "gausswords.oracle-corpus/1";
  j["policy"] = oracle::describe(corpus.policy);
  j["words"] = corpus.words.size();
  j["planar"] = planar;
  j["counterexample"] = counterexample ? json(render(*counterexample)) : json(nullptr);
  std::ostringstream os;
  if (counterexample)
    os << "disagreement on " << render(*counterexample);
  else
    os << "all agree (" << corpus.words.size() << " words, " << planar << " planar)";
  return {counterexample ? kFails : kHolds, os.str(), j};
}

// --- automaton -------------------------------------------------------------

ra::RegisterAutomatonSpec load_spec(const std::string& ref) {
  if (ref == "builtin:gw") return ra::unsigned_gauss_recognizer();
  if (ref == "builtin:sgw") return ra::signed_gauss_recognizer();
  return ra::spec_from_json(slurp(ref));
}

struct AutomatonOptions {
  std::string spec;
  std::string mode = "det";
  bool compile = false;
  bool trace = false;
  std::optional<std::uint64_t> budget;
};

std::string spec_size(const ra::RegisterAutomatonSpec& s) {
  return std::to_string(s.states.size()) + " states, " + std::to_string(s.rules.size()) +
         " rules, k=" + std::to_string(s.k);
}

json spec_size_json(const ra::RegisterAutomatonSpec& s) {
  return {{"states", s.states.size()}, {"rules", s.rules.size()}, {"k", s.k}};
}

Outcome cmd_automaton(const std::string& text, const AutomatonOptions& o,
                      const ra::RegisterAutomatonSpec& original,
                      const ra::RegisterAutomatonSpec& spec) {
  const auto first = text.find_first_not_of(" \t");
  const ra::DataWord word = first != std::string::npos && text[first] == '['
                                ? ra::data_word_from_json(text)
                                : ra::to_data_word(parse(text));
  ra::RunOptions opts;
  opts.mode = o.mode == "nondet" ? ra::Mode::Nondeterministic : ra::Mode::Deterministic;
  opts.trace = o.trace;
  opts.max_configurations = o.budget;
  const auto r = ra::run(spec, word, opts);

  json j;
  j["schema"] = "gausswords.automaton-run/1";
  j["input"] = text;
  j["mode"] = o.mode;
  j["verdict"] = r.accepted() ? "accept" : "reject";
  j["explored"] = r.explored;
  j["ceiling"] = r.ceiling;
  if (opts.mode == ra::Mode::Nondeterministic) j["branching"] = r.branching_configurations;
  if (o.compile) j["spec_sizes"] = {{"original", spec_size_json(original)}, {"compiled", spec_size_json(spec)}};
  std::ostringstream os;
  if (o.compile) os << "original: " << spec_size(original) << "\ncompiled: " << spec_size(spec) << '\n';
  if (o.trace) {
    json t = json::array();
    for (const auto& c : r.trace) {
      const auto cj = ra::configuration_to_json(spec, c);
      t.push_back(json::parse(cj));
      os << cj << '\n';
    }
    j["trace"] = t;
  }
  os << (r.accepted() ? "accept" : "reject") << " (" << r.explored << " configurations, ceiling "
     << r.ceiling << ")";
  return {r.accepted() ? kHolds : kFails, os.str(), j};
}

// --- generate --------------------------------------------------------------

struct GenerateOptions {
  std::optional<std::size_t> exhaustive;
  std::size_t count = 10;
  std::size_t min_crossings = 1;
  std::size_t max_crossings = 6;
  bool with_signs = false;
};

int cmd_generate(const Globals& g, const GenerateOptions& o) {
  try {
    const oracle::CorpusPolicy policy =
        o.exhaustive ? oracle::CorpusPolicy(oracle::Exhaustive{*o.exhaustive})
                     : oracle::CorpusPolicy(oracle::Random{o.min_crossings, o.max_crossings, o.count,
                                                           g.seed, o.with_signs});
    const auto corpus = oracle::generate(policy);
    if (g.quiet) return kHolds;
    if (g.json) {
      json j;
      j["schema"] = "gausswords.corpus/1";
      j["policy"] = oracle::describe(policy);
      json ws = json::array();
      for (const auto& w : corpus.words) ws.push_back(render(w));
      j["words"] = ws;
      std::cout << j.dump() << '\n';
    } else {
      oracle::write_corpus(std::cout, corpus);
    }
    return kHolds;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  }
}

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("word", in.word, "Word tokens (quoted or as separate arguments)");
  sub->add_option("--file", in.file, "Read one word per line from a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss word planarity and register automaton toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("-q,--quiet", g.quiet, "No output; exit code only");
  app.add_option("--seed", g.seed, "Seed for random generation");

  Input in;
  bool via_automaton = false;
  auto* validate_cmd = app.add_subcommand("validate", "Check that a word is a valid Gauss word");
  add_input(validate_cmd, in);
  validate_cmd->add_flag("--via-automaton", via_automaton, "Run the builtin recognizer instead");

  auto* planar_cmd = app.add_subcommand("planar", "Decide planarity (signed or unsigned)");
  add_input(planar_cmd, in);

  bool dot = false;
  bool as_json = false;
  auto* faces_cmd = app.add_subcommand("faces", "Left-turn face cycles of a signed word");
  add_input(faces_cmd, in);
  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of a signed word");
  add_input(euler_cmd, in);
  auto* interlace_cmd = app.add_subcommand("interlace", "Interlacement graph of an unsigned word");
  add_input(interlace_cmd, in);
  for (auto* sub : {faces_cmd, interlace_cmd}) {
    auto* d = sub->add_flag("--dot", dot, "Graphviz DOT output");
    sub->add_flag("--json", as_json, "JSON output")->excludes(d);
  }

  std::string corpus;
  std::size_t max_crossings = oracle::kDefaultMaxCrossings;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare with the brute-force signing oracle");
  add_input(oracle_cmd, in);
  oracle_cmd->add_option("--corpus", corpus, "exhaustive:N or random:MIN-MAX:COUNT");
  oracle_cmd->add_option("--max-crossings", max_crossings, "Oracle crossing bound");

  AutomatonOptions ao;
  bool dump = false;
  auto* automaton_cmd = app.add_subcommand("automaton", "Run a register automaton on a word");
  automaton_cmd->add_option("spec", ao.spec, "Spec file, builtin:gw or builtin:sgw")->required();
  add_input(automaton_cmd, in);
  automaton_cmd->add_option("--mode", ao.mode, "det or nondet")
      ->check(CLI::IsMember({"det", "nondet"}));
  automaton_cmd->add_flag("--compile", ao.compile, "Compile to Type1/Type2 rules first");
  automaton_cmd->add_flag("--trace", ao.trace, "Print the configuration path");
  automaton_cmd->add_option("--budget", ao.budget, "Cap on explored configurations");
  automaton_cmd->add_flag("--dump", dump, "Print the (compiled) spec as JSON and exit");
  std::string data_json;
  automaton_cmd->add_option("--data", data_json, "Data word as a JSON array of {tag, datum}");

  GenerateOptions go;
  auto* generate_cmd = app.add_subcommand("generate", "Write a word corpus");
  auto* ex = generate_cmd->add_option("--exhaustive", go.exhaustive, "All canonical words on N crossings");
  generate_cmd->add_option("--count", go.count, "Random words to draw")->excludes(ex);
  generate_cmd->add_option("--min", go.min_crossings, "Minimum crossings")->excludes(ex);
  generate_cmd->add_option("--max", go.max_crossings, "Maximum crossings")->excludes(ex);
  generate_cmd->add_flag("--signed", go.with_signs, "Random signs")->excludes(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kInvalid;
  }

  const Format format = dot ? Format::Dot : (as_json || g.json) ? Format::Json : Format::Text;

  if (*validate_cmd)
    return for_each_input(g, in, [&](const std::string& t) { return cmd_validate(t, via_automaton); });
  if (*planar_cmd) return for_each_input(g, in, cmd_planar);
  if (*faces_cmd) return for_each_input(g, in, [&](const std::string& t) { return cmd_faces(t, format); });
  if (*euler_cmd) return for_each_input(g, in, cmd_euler);
  if (*interlace_cmd)
    return for_each_input(g, in, [&](const std::string& t) { return cmd_interlace(t, format); });
  if (*oracle_cmd) {
    if (!corpus.empty())
      return emit(g, false, guarded(corpus, [&] { return cmd_oracle_corpus(corpus, g.seed, max_crossings); }));
    return for_each_input(g, in, [&](const std::string& t) { return cmd_oracle_word(t, max_crossings); });
  }
  if (*automaton_cmd) {
    ra::RegisterAutomatonSpec original;
    ra::RegisterAutomatonSpec spec;
    const auto loaded = guarded(ao.spec, [&] {
      original = load_spec(ao.spec);
      spec = ao.compile ? ra::compile_modified_to_original(original) : original;
      return Outcome{};
    });
    if (loaded.code != kHolds) return emit(g, false, loaded);
    if (dump) {
      if (!g.quiet) std::cout << ra::spec_to_json(spec);
      return kHolds;
    }
    auto run_one = [&](const std::string& t) { return cmd_automaton(t, ao, original, spec); };
    if (!data_json.empty()) return emit(g, false, guarded(data_json, [&] { return run_one(data_json); }));
    return for_each_input(g, in, run_one);
  }
  if (*generate_cmd) return cmd_generate(g, go);
  return kInvalid;
}
