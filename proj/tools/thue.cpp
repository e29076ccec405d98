#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "thue/completion.hpp"
#include "thue/corpus.hpp"
#include "thue/io.hpp"
#include "thue/nullseq.hpp"
#include "thue/overlap.hpp"
#include "thue/rewrite.hpp"

using json = nlohmann::json;
using namespace thue;

namespace {

constexpr int kExitEquivalent = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitUnknown = 3;

// Alphabet from a compact word literal: one symbol per character, in
// order of first appearance.
Alphabet derive_alphabet(const std::string& word) {
  std::vector<std::string> names;
  for (char ch : word) {
    std::string s(1, ch);
    if (std::find(names.begin(), names.end(), s) == names.end()) names.push_back(s);
  }
  return Alphabet(names);
}

Alphabet make_alphabet(const std::string& spec, const std::string& fallback_word) {
  if (spec.empty()) return derive_alphabet(fallback_word);
  std::istringstream ss(spec);
  std::vector<std::string> names;
  std::string tok;
  while (ss >> tok) names.push_back(tok);
  return Alphabet(names);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::not_equivalent: return "not-equivalent";
    default: return "unknown";
  }
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::equivalent: return kExitEquivalent;
    case Verdict::not_equivalent: return kExitNotEquivalent;
    default: return kExitUnknown;
  }
}

void print_steps(const Derivation& d, const EquationSystem& sys) {
  auto chain = replay(d, sys);
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& st = d.steps[i];
    std::cout << "step " << i + 1 << ": rule " << st.rule << ' '
              << (st.dir == Direction::forward ? "forward" : "backward") << " at pos "
              << st.pos << ": " << sys.alphabet.format(chain[i + 1]) << '\n';
  }
}

json steps_json(const Derivation& d, const EquationSystem& sys) {
  auto chain = replay(d, sys);
  json arr = json::array();
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& st = d.steps[i];
    arr.push_back({{"rule", st.rule},
                   {"direction", st.dir == Direction::forward ? "forward" : "backward"},
                   {"pos", st.pos},
                   {"word", sys.alphabet.format(chain[i + 1])}});
  }
  return arr;
}

json equations_json(const EquationSystem& sys) {
  json arr = json::array();
  for (const auto& eq : sys.equations)
    arr.push_back({{"lhs", sys.alphabet.format(eq.lhs)}, {"rhs", sys.alphabet.format(eq.rhs)}});
  return arr;
}

struct ReduceOpts {
  std::string file, word, strategy = "leftmost";
  std::uint64_t seed = 0;
  bool as_json = false, check = false;
};

int cmd_reduce(const ReduceOpts& o) {
  auto f = load_system(o.file);
  std::vector<Word> lhs_set;
  for (const auto& eq : f.sys.equations) lhs_set.push_back(eq.lhs);
  auto rep = check_non_overlapping(lhs_set);
  if (!rep.ok()) throw input_error("overlapping left sides: " + rep.describe());
  Word w = f.sys.alphabet.parse(o.word);
  Strategy strat = Strategy::leftmost();
  if (o.strategy == "rightmost") strat = Strategy::rightmost();
  else if (o.strategy == "random") strat = Strategy::randomized(o.seed);
  else if (o.strategy != "leftmost") throw input_error("unknown strategy: " + o.strategy);
  auto [nf, d] = reduce_to_normal_form(w, f.sys, strat);
  if (o.check) replay(d, f.sys);
  if (o.as_json) {
    json out{{"normal_form", f.sys.alphabet.format(nf)}, {"steps", steps_json(d, f.sys)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "normal form: " << f.sys.alphabet.format(nf) << '\n';
    print_steps(d, f.sys);
  }
  return 0;
}

struct EquivOpts {
  std::string file, p, q, exact_case;
  bool bounded = false, as_json = false, check = false;
  std::size_t max_length = 0, max_states = 0;
};

int cmd_equiv(const EquivOpts& o) {
  auto f = load_system(o.file);
  Word p = f.sys.alphabet.parse(o.p);
  Word q = f.sys.alphabet.parse(o.q);
  DecisionOutcome outcome;
  if (f.null_word && o.exact_case.empty() && !o.bounded) {
    auto ns = to_null_system(f);
    std::size_t ml = o.max_length ? o.max_length : std::max({p.size(), q.size(), ns.r.size() + 1});
    outcome = decide_problem_two(p, q, ns, ml);
  } else if (o.exact_case == "a") {
    outcome = decide_fixed_length(p, q, f.sys);
  } else if (o.exact_case == "b") {
    outcome = decide_reducing(p, q, f.sys);
  } else if (o.exact_case.empty()) {
    Budget b = default_budget(p, q, f.sys);
    if (o.max_length) b.max_length = o.max_length;
    if (o.max_states) b.max_states = o.max_states;
    outcome = decide_bounded(p, q, f.sys, b);
  } else {
    throw input_error("exact-case must be 'a' or 'b'");
  }
  if (o.check && outcome.witness) replay(*outcome.witness, f.sys);
  if (o.as_json) {
    json out{{"verdict", verdict_name(outcome.verdict)},
             {"states_explored", outcome.budget.states_explored},
             {"max_length_reached", outcome.budget.max_length_reached}};
    if (outcome.witness) out["witness"] = steps_json(*outcome.witness, f.sys);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << verdict_name(outcome.verdict) << '\n';
    if (outcome.witness) print_steps(*outcome.witness, f.sys);
  }
  return verdict_exit(outcome.verdict);
}

struct CompleteOpts {
  std::string word, alphabet;
  bool do_minimize = false, verify = false, as_json = false, trace = false;
};

int cmd_complete(const CompleteOpts& o) {
  Alphabet alpha = make_alphabet(o.alphabet, o.word);
  Word r = alpha.parse(o.word);
  auto state = complete(r, alpha);
  if (o.trace) {
    std::set<Word> prev;
    for (std::size_t i = 0; i < state.s_layers.size(); ++i) {
      json rec{{"theta", i + 1},
               {"s_size", state.s_layers[i].size()},
               {"e_size", state.e_layers[i].equations.size()}};
      json fresh = json::array();
      std::size_t base = i == 0 ? 0 : state.e_layers[i - 1].equations.size();
      for (std::size_t k = base; k < state.e_layers[i].equations.size(); ++k) {
        const auto& eq = state.e_layers[i].equations[k];
        fresh.push_back(alpha.format(eq.lhs) + " = " + alpha.format(eq.rhs));
      }
      rec["new_equations"] = fresh;
      std::cout << rec.dump() << '\n';
    }
  }
  json out;
  json gamma = json::array();
  for (const Word& w : state.null_sequences()) gamma.push_back(alpha.format(w));
  if (o.as_json) {
    out["null_sequences"] = gamma;
    out["equations"] = equations_json(state.equations());
  } else {
    std::cout << "null sequences:";
    for (const Word& w : state.null_sequences()) std::cout << ' ' << alpha.format(w);
    std::cout << '\n';
    std::cout << "equations:\n";
    for (const auto& eq : state.equations().equations)
      std::cout << "  " << alpha.format(eq.lhs) << " = " << alpha.format(eq.rhs) << '\n';
  }
  int rc = 0;
  if (o.do_minimize || o.verify) {
    auto ms = minimize(state);
    if (o.as_json) {
      out["minimized"] = equations_json(ms.epsilon);
      out["certified_minimum"] = ms.certified_minimum;
    } else {
      std::cout << "minimized:\n";
      for (const auto& eq : ms.epsilon.equations)
        std::cout << "  " << alpha.format(eq.lhs) << " = " << alpha.format(eq.rhs) << '\n';
    }
    if (o.verify) {
      auto rep = verify_epsilon_theorems(ms, state);
      auto emit = [&](const char* name, const EpsilonTheoremReport::Check& c) {
        if (o.as_json) {
          out["verify"][name] = {{"pass", c.pass}, {"counterexample", c.counterexample}};
        } else {
          std::cout << name << ": " << (c.pass ? "pass" : "FAIL " + c.counterexample) << '\n';
        }
      };
      emit("no_prefix_residual", rep.no_prefix_residual);
      emit("no_border_prefix", rep.no_border_prefix);
      emit("commutation", rep.commutation);
      emit("nm_decomposition", rep.nm_decomposition);
      if (!rep.all_pass()) rc = 1;
    }
  }
  if (o.as_json) std::cout << out.dump() << '\n';
  return rc;
}

struct AnalyzeOpts {
  std::string word, alphabet;
  bool as_json = false;
};

int cmd_analyze(const AnalyzeOpts& o) {
  Alphabet alpha = make_alphabet(o.alphabet, o.word);
  Word w = alpha.parse(o.word);
  if (w.empty()) throw input_error("empty word");
  auto bs = borders(w);
  auto root = primitive_root(w);
  auto chain = overlap_chain(w);
  auto so = max_self_overlap(w);
  if (o.as_json) {
    json out{{"word", alpha.format(w)},
             {"root", alpha.format(root.root)},
             {"exponent", root.exponent}};
    out["borders"] = json::array();
    for (const auto& b : bs) out["borders"].push_back(alpha.format(b));
    out["chain"] = json::array();
    for (const auto& st : chain)
      out["chain"].push_back({{"u", alpha.format(st.u)},
                              {"c", alpha.format(st.c)},
                              {"d", alpha.format(st.d)}});
    if (so)
      out["self_overlap"] = {{"u", alpha.format(so->u)},   {"c", alpha.format(so->c)},
                             {"d", alpha.format(so->d)},   {"alpha", alpha.format(so->alpha)},
                             {"beta", alpha.format(so->beta)}, {"n", so->n}};
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "word: " << alpha.format(w) << '\n';
  std::cout << "primitive root: " << alpha.format(root.root) << "^" << root.exponent << '\n';
  std::cout << "borders:";
  for (const auto& b : bs) std::cout << ' ' << alpha.format(b);
  std::cout << '\n';
  if (so)
    std::cout << "largest overlap: u=" << alpha.format(so->u) << " c=" << alpha.format(so->c)
              << " d=" << alpha.format(so->d) << " alpha=" << alpha.format(so->alpha)
              << " beta=" << alpha.format(so->beta) << " n=" << so->n << '\n';
  std::cout << "chain:";
  for (const auto& st : chain)
    std::cout << " (u=" << alpha.format(st.u) << ", c=" << alpha.format(st.c)
              << ", d=" << alpha.format(st.d) << ')';
  std::cout << '\n';
  return 0;
}

struct CorpusOpts {
  int id = 0;
  std::vector<std::size_t> n{2};
  std::size_t p = 2;
  std::string a = "a", c = "c";
  std::size_t n3 = 3;
  std::vector<std::string> extra;
};

int cmd_corpus(const CorpusOpts& o) {
  ExampleSpec ex;
  switch (o.id) {
    case 1: ex = example1(o.n, o.extra); break;
    case 2: ex = example2(); break;
    case 3: ex = example3(o.a, o.c, o.n3); break;
    case 4: ex = example4(o.n.at(0)); break;
    case 5: ex = example5(o.n.at(0), o.p); break;
    default: throw input_error("example id must be 1..5");
  }
  SystemFile f{ex.ns.eqs, ex.ns.r};
  std::cout << serialize_system(f);
  return 0;
}

struct CheckOpts {
  std::string file;
  std::size_t max_len = 0;
  bool verify = false, as_json = false;
};

int cmd_check(const CheckOpts& o) {
  auto f = load_system(o.file);
  bool all_ok = true;
  json out;
  if (f.sys.mode == Mode::forward_only) {
    std::vector<Word> lhs_set;
    for (const auto& eq : f.sys.equations) lhs_set.push_back(eq.lhs);
    auto rep = check_non_overlapping(lhs_set);
    all_ok = all_ok && rep.ok();
    if (o.as_json)
      out["non_overlapping"] = {{"pass", rep.ok()}, {"detail", rep.describe()}};
    else
      std::cout << "non-overlapping left sides: " << (rep.ok() ? "pass" : rep.describe())
                << '\n';
  }
  if (f.null_word) {
    auto ns = to_null_system(f);
    auto comp = check_complete(ns);
    all_ok = all_ok && comp.complete();
    std::string failing;
    for (Symbol z : comp.failing()) failing += ns.alphabet.name(z) + " ";
    if (o.as_json)
      out["complete"] = {{"pass", comp.complete()}, {"failing", failing}};
    else
      std::cout << "complete: " << (comp.complete() ? "pass" : "fails at " + failing) << '\n';
    auto cert = check_perfect_syntactic(ns);
    if (o.as_json) out["perfect_syntactic"] = cert.has_value();
    else std::cout << "perfect (certificate): " << (cert ? "yes" : "no") << '\n';
    std::size_t ml = o.max_len ? o.max_len : ns.r.size() + 3;
    auto perf = check_perfect_bounded(ns, ml);
    all_ok = all_ok && perf.pass;
    if (o.as_json)
      out["perfect_bounded"] = {{"pass", perf.pass}, {"max_len", ml}};
    else
      std::cout << "perfect up to length " << ml << ": " << (perf.pass ? "pass" : "FAIL")
                << '\n';
    if (o.verify) {
      auto state = complete(ns.r, ns.alphabet);
      auto ms = minimize(state);
      auto rep = verify_epsilon_theorems(ms, state);
      all_ok = all_ok && rep.all_pass();
      if (o.as_json)
        out["epsilon_theorems"] = rep.all_pass();
      else
        std::cout << "minimized-system theorems: " << (rep.all_pass() ? "pass" : "FAIL")
                  << '\n';
    }
  }
  if (o.as_json) std::cout << out.dump() << '\n';
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedures for string-rewriting systems"};
  app.require_subcommand(1);

  ReduceOpts ro;
  auto* reduce = app.add_subcommand("reduce", "Reduce a word to normal form");
  reduce->add_option("file", ro.file)->required();
  reduce->add_option("word", ro.word)->required();
  reduce->add_option("--strategy", ro.strategy, "leftmost|rightmost|random");
  reduce->add_option("--seed", ro.seed);
  reduce->add_flag("--json", ro.as_json);
  reduce->add_flag("--check", ro.check);

  EquivOpts eo;
  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two words");
  equiv->add_option("file", eo.file)->required();
  equiv->add_option("p", eo.p)->required();
  equiv->add_option("q", eo.q)->required();
  equiv->add_option("--exact-case", eo.exact_case, "a (length-preserving) or b (reducing)");
  equiv->add_flag("--bounded", eo.bounded);
  equiv->add_option("--max-length", eo.max_length);
  equiv->add_option("--max-states", eo.max_states);
  equiv->add_flag("--json", eo.as_json);
  equiv->add_flag("--check", eo.check);

  CompleteOpts co;
  auto* compl_ = app.add_subcommand("complete", "Generate equations from a null word");
  compl_->add_option("word", co.word)->required();
  compl_->add_option("--alphabet", co.alphabet);
  compl_->add_flag("--minimize", co.do_minimize);
  compl_->add_flag("--verify", co.verify);
  compl_->add_flag("--json", co.as_json);
  compl_->add_flag("--trace", co.trace);

  AnalyzeOpts ao;
  auto* analyze = app.add_subcommand("analyze", "Borders, roots, overlap chain");
  analyze->add_option("word", ao.word)->required();
  analyze->add_option("--alphabet", ao.alphabet);
  analyze->add_flag("--json", ao.as_json);

  CorpusOpts po;
  auto* corpus = app.add_subcommand("corpus", "Print a worked example as a system file");
  corpus->add_option("id", po.id)->required();
  corpus->add_option("--n", po.n, "exponent list (example 1) or n (examples 4, 5)");
  corpus->add_option("--p", po.p);
  corpus->add_option("--a", po.a);
  corpus->add_option("--c", po.c);
  corpus->add_option("--n3", po.n3, "power for example 3");
  corpus->add_option("--extra", po.extra, "extra symbols for example 1");

  CheckOpts ko;
  auto* check = app.add_subcommand("check", "Run the structural checks for a system file");
  check->add_option("file", ko.file)->required();
  check->add_option("--max-len", ko.max_len);
  check->add_flag("--verify", ko.verify);
  check->add_flag("--json", ko.as_json);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*reduce) return cmd_reduce(ro);
    if (*equiv) return cmd_equiv(eo);
    if (*compl_) return cmd_complete(co);
    if (*analyze) return cmd_analyze(ao);
    if (*corpus) return cmd_corpus(po);
    if (*check) return cmd_check(ko);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}
