#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "speciallab/errors.hpp"
#include "speciallab/language.hpp"
#include "speciallab/presentations.hpp"
#include "speciallab/rewriting.hpp"
#include "speciallab/special.hpp"
#include "speciallab/words.hpp"

namespace sl = speciallab;

namespace {

struct Config {
  std::string family;
  int n = 2;
  std::string file;
  int i_bound = 8;
  int witness_bound = 0;  // 0 resolves to default_witness_bound
  int e_bound = 5;
  std::string format = "text";

  bool kv() const { return format == "kv"; }
};

sl::PresentationSchema load_schema(const Config& cfg) {
  if (!cfg.file.empty()) {
    std::ifstream in(cfg.file);
    if (!in) throw sl::Error("cannot open presentation file: " + cfg.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return sl::parse_presentation(buf.str());
  }
  if (cfg.family == "pi") return sl::make_pi(cfg.n);
  if (cfg.family == "mn") return sl::make_mn(cfg.n);
  throw sl::Error("select a presentation with --family pi|mn --n <k> or --file <path>");
}

sl::CompleteSystem certified(const Config& cfg) {
  return sl::CompleteSystem::certify(sl::to_rewrite_system(load_schema(cfg)), cfg.i_bound);
}

int resolve_witness_bound(const Config& cfg, const sl::CompleteSystem& cs) {
  return cfg.witness_bound > 0 ? cfg.witness_bound : sl::default_witness_bound(cs);
}

void put(const std::string& key, const std::string& value) {
  std::cout << key << ": " << value << "\n";
}
void put(const std::string& key, const char* value) { put(key, std::string(value)); }
void put(const std::string& key, bool value) { put(key, value ? "true" : "false"); }
template <typename T>
void put(const std::string& key, T value) {
  put(key, std::to_string(value));
}

std::string tuple_text(const std::vector<int>& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(t[k]);
  }
  return out + ")";
}

int cmd_check(const Config& cfg) {
  const sl::RewriteSystem sys = sl::to_rewrite_system(load_schema(cfg));
  const sl::ConfluenceReport report = sl::check_local_confluence(sys, cfg.i_bound);
  std::size_t proper = 0, inclusions = 0;
  for (const auto& p : report.pairs)
    (p.kind == sl::OverlapKind::ProperOverlap ? proper : inclusions) += 1;
  const sl::Alphabet& alphabet = sys.alphabet();

  put("system", sys.name());
  put("special", sys.is_special());
  put("monadic", sys.is_monadic());
  put("length_reducing", sys.is_length_reducing());
  put("i_bound", report.bound);
  put("pairs_examined", report.pairs_examined);
  put("proper_overlaps", proper);
  put("inclusions", inclusions);
  put("unjoinable", report.unjoinable.size());
  put("verdict", sl::to_string(report.verdict));
  if (cfg.kv()) {
    for (std::size_t k = 0; k < report.pairs.size(); ++k) {
      const auto& p = report.pairs[k];
      const std::string pre = "pair_" + std::to_string(k);
      put(pre + "_kind", p.kind == sl::OverlapKind::ProperOverlap ? "proper-overlap" : "inclusion");
      put(pre + "_rule_l", p.left.rule_index);
      put(pre + "_i_l", p.left.param);
      put(pre + "_rule_r", p.right.rule_index);
      put(pre + "_i_r", p.right.param);
      put(pre + "_detail", p.detail);
      put(pre + "_source", sl::display_word(alphabet, p.source));
      put(pre + "_left", sl::display_word(alphabet, p.left_result));
      put(pre + "_right", sl::display_word(alphabet, p.right_result));
    }
    for (std::size_t k = 0; k < report.unjoinable.size(); ++k)
      put("unjoinable_" + std::to_string(k) + "_source",
          sl::display_word(alphabet, report.unjoinable[k].source));
  } else if (!report.unjoinable.empty()) {
    for (const auto& p : report.unjoinable)
      std::cout << "  unjoinable source: " << sl::display_word(alphabet, p.source) << "\n";
  }
  return report.ok() ? 0 : 1;
}

int cmd_nf(const Config& cfg, const std::string& word_text) {
  const sl::RewriteSystem sys = sl::to_rewrite_system(load_schema(cfg));
  const sl::Word w = sl::parse_word(sys.alphabet(), word_text);
  const sl::ReductionTrace trace = sl::reduce_to_normal_form(sys, w);
  put("system", sys.name());
  put("word", sl::display_word(sys.alphabet(), trace.input));
  put("normal_form", sl::display_word(sys.alphabet(), trace.output));
  put("steps", trace.steps.size());
  return 0;
}

int cmd_eq(const Config& cfg, const std::string& u_text, const std::string& v_text) {
  const sl::CompleteSystem cs = certified(cfg);
  const sl::Alphabet& alphabet = cs.system().alphabet();
  const sl::Word u = sl::parse_word(alphabet, u_text);
  const sl::Word v = sl::parse_word(alphabet, v_text);
  const bool equal = sl::equal_in_monoid(cs, u, v);
  put("system", cs.system().name());
  put("i_bound", cs.evidence().bound);
  put("u", sl::display_word(alphabet, u));
  put("v", sl::display_word(alphabet, v));
  put("equal", equal);
  return equal ? 0 : 1;
}

int cmd_wp(const Config& cfg, const std::string& query_text) {
  const sl::CompleteSystem cs = certified(cfg);
  const sl::WpQuery query = sl::parse_wp_query(cs.system().alphabet(), query_text);
  const bool member = sl::wp_member(cs, query);
  put("system", cs.system().name());
  put("i_bound", cs.evidence().bound);
  put("query", query.raw);
  put("member", member);
  return member ? 0 : 1;
}

int cmd_invertible(const Config& cfg, const std::string& word_text) {
  const sl::CompleteSystem cs = certified(cfg);
  const sl::Alphabet& alphabet = cs.system().alphabet();
  const sl::Word w = sl::parse_word(alphabet, word_text);
  const int bound = resolve_witness_bound(cfg, cs);
  const auto right = sl::is_right_invertible(cs, w, bound);
  const auto left = sl::is_left_invertible(cs, w, bound);
  put("system", cs.system().name());
  put("i_bound", cs.evidence().bound);
  put("witness_bound", bound);
  put("word", sl::display_word(alphabet, w));
  put("right_found", static_cast<bool>(right));
  if (right) put("right_witness", sl::display_word(alphabet, *right->right_witness));
  put("left_found", static_cast<bool>(left));
  if (left) put("left_witness", sl::display_word(alphabet, *left->left_witness));
  const bool both = right && left;
  put("invertible", both);
  return both ? 0 : 1;
}

int cmd_factor(const Config& cfg, const std::string& word_text) {
  const sl::CompleteSystem cs = certified(cfg);
  const sl::Alphabet& alphabet = cs.system().alphabet();
  const sl::Word w = sl::parse_word(alphabet, word_text);
  const int bound = resolve_witness_bound(cfg, cs);
  const sl::MinimalFactorization f = sl::minimal_factorization(cs, w, bound);
  put("system", cs.system().name());
  put("i_bound", cs.evidence().bound);
  put("witness_bound", bound);
  put("word", sl::display_word(alphabet, w));
  put("factors", f.factors.size());
  for (std::size_t k = 0; k < f.factors.size(); ++k)
    put("factor_" + std::to_string(k), sl::display_word(alphabet, f.factors[k]));
  return 0;
}

void print_lambda(const Config& cfg, const sl::CompleteSystem& cs, const sl::MinimalWordSet& lam,
                  int bound) {
  const sl::RewriteSystem& sys = cs.system();
  put("system", sys.name());
  put("i_bound", cs.evidence().bound);
  put("witness_bound", bound);
  put("inst_bound", lam.inst_bound);
  put("patterns", lam.patterns.size());
  for (std::size_t k = 0; k < lam.patterns.size(); ++k)
    put("pattern_" + std::to_string(k),
        sl::display_pattern(lam.patterns[k], sys.alphabet(), sys.param_name()));
  put("concrete", lam.concrete.size());
  for (std::size_t k = 0; k < lam.concrete.size(); ++k)
    put("concrete_" + std::to_string(k), sl::display_word(sys.alphabet(), lam.concrete[k]));
  put("warnings", lam.warnings.size());
  for (std::size_t k = 0; k < lam.warnings.size(); ++k)
    put("warning_" + std::to_string(k), lam.warnings[k]);
}

int cmd_lambda(const Config& cfg) {
  const sl::CompleteSystem cs = certified(cfg);
  const int bound = resolve_witness_bound(cfg, cs);
  const sl::MinimalWordSet lam = sl::compute_lambda(cs, bound);
  print_lambda(cfg, cs, lam, bound);
  const sl::BiprefixReport bp = sl::check_biprefix(lam);
  put("biprefix", bp.ok);
  put("biprefix_bound", bp.check_bound);
  if (!bp.ok) {
    put("biprefix_inner", sl::display_word(cs.system().alphabet(), bp.counterexample->first));
    put("biprefix_outer", sl::display_word(cs.system().alphabet(), bp.counterexample->second));
  }
  return 0;
}

int cmd_units(const Config& cfg, bool classification_only) {
  const sl::CompleteSystem cs = certified(cfg);
  const int bound = resolve_witness_bound(cfg, cs);
  const sl::MinimalWordSet lam = sl::compute_lambda(cs, bound);
  const sl::UnitsPresentation up = sl::units_presentation(cs, lam);
  const sl::UnitsClassification cls = sl::classify_units(up);
  const sl::RewriteSystem& sys = cs.system();
  if (!classification_only) {
    print_lambda(cfg, cs, lam, bound);
    put("generators", up.generators.size());
    for (std::size_t k = 0; k < up.generators.size(); ++k) {
      const std::string pre = "generator_" + std::to_string(k);
      put(pre, sl::display_generator(up, sl::RelatorSymbol{k, std::nullopt}));
      const auto& g = up.generators[k];
      put(pre + "_source",
          g.from_pattern
              ? sl::display_pattern(lam.patterns[g.index], sys.alphabet(), sys.param_name())
              : sl::display_word(sys.alphabet(), lam.concrete[g.index]));
    }
    put("relators", up.relators.size());
    for (std::size_t k = 0; k < up.relators.size(); ++k)
      put("relator_" + std::to_string(k), sl::display_relator(up, up.relators[k]));
  } else {
    put("system", sys.name());
    put("i_bound", cs.evidence().bound);
    put("witness_bound", bound);
  }
  put("recognized", cls.recognized);
  put("finitely_generated", cls.finitely_generated);
  put("classification", cls.description);
  return 0;
}

int cmd_grammar(const Config& cfg, std::size_t rule_index) {
  const sl::RewriteSystem sys = sl::to_rewrite_system(load_schema(cfg));
  if (rule_index >= sys.rules().size())
    throw sl::Error("rule index out of range (system has " +
                    std::to_string(sys.rules().size()) + " rules)");
  const sl::Grammar g = sl::export_lhs_grammar(sys.rules()[rule_index].lhs);
  std::cout << sl::export_grammar(g);
  return 0;
}

int cmd_slice(const Config& cfg, int n) {
  const sl::CompleteSystem cs = certified(cfg);
  const sl::SliceReport rep = sl::enumerate_wp_slice(cs, n, cfg.e_bound);
  put("system", cs.system().name());
  put("i_bound", cs.evidence().bound);
  put("n", rep.n);
  put("e_bound", rep.e_bound);
  put("tested", rep.tested);
  put("members", rep.members.size());
  for (std::size_t k = 0; k < rep.members.size(); ++k)
    put("member_" + std::to_string(k), tuple_text(rep.members[k]));
  put("expected", rep.expected.size());
  put("agreement", rep.agreement);
  return rep.agreement ? 0 : 1;
}

int cmd_verdict(const Config& cfg, int n) {
  const sl::CfVerdict v = sl::cf_verdict(n, std::min(cfg.e_bound, 4), cfg.i_bound);
  put("n", v.n);
  put("i_bound", cfg.i_bound);
  put("context_free", v.context_free);
  put("statement", v.statement);
  if (v.grammar) {
    std::istringstream lines(sl::export_grammar(*v.grammar));
    std::string line;
    for (std::size_t k = 0; std::getline(lines, line); ++k)
      put("grammar_" + std::to_string(k), line);
  }
  if (v.slice) {
    put("e_bound", v.slice->e_bound);
    put("slice_tested", v.slice->tested);
    put("slice_members", v.slice->members.size());
    for (std::size_t k = 0; k < v.slice->members.size(); ++k)
      put("slice_member_" + std::to_string(k), tuple_text(v.slice->members[k]));
    put("slice_agreement", v.slice->agreement);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis of special monoids presented by parameterized rewriting rule schemas"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Config cfg;
  app.add_option("--family", cfg.family, "builtin presentation family: pi or mn");
  app.add_option("--n", cfg.n, "family index n");
  app.add_option("--file", cfg.file, "presentation file path");
  app.add_option("--i-bound", cfg.i_bound, "parameter bound for critical-pair enumeration");
  app.add_option("--witness-bound", cfg.witness_bound,
                 "inverse witness length bound (0 = automatic)");
  app.add_option("--e-bound", cfg.e_bound, "exponent bound for slice enumeration");
  app.add_option("--format", cfg.format, "output format: text or kv")
      ->check(CLI::IsMember({"text", "kv"}));

  std::string word_arg, u_arg, v_arg, query_arg;
  int slice_n = 2, verdict_n = 2;
  std::size_t rule_index = 0;

  CLI::App* c_check = app.add_subcommand("check", "termination and bounded local confluence");
  CLI::App* c_nf = app.add_subcommand("nf", "leftmost normal form of a word");
  c_nf->add_option("word", word_arg, "word to reduce")->required();
  CLI::App* c_eq = app.add_subcommand("eq", "equality of two words in the monoid");
  c_eq->add_option("u", u_arg, "first word")->required();
  c_eq->add_option("v", v_arg, "second word");
  CLI::App* c_wp = app.add_subcommand("wp", "word-problem language membership of u#vrev");
  c_wp->add_option("query", query_arg, "query of the form u#vrev")->required();
  CLI::App* c_inv = app.add_subcommand("invertible", "left/right/two-sided invertibility");
  c_inv->add_option("word", word_arg, "word to test")->required();
  CLI::App* c_factor = app.add_subcommand("factor", "minimal invertible factorization");
  c_factor->add_option("word", word_arg, "word to factor")->required();
  CLI::App* c_lambda = app.add_subcommand("lambda", "minimal invertible words of the system");
  CLI::App* c_units = app.add_subcommand("units", "presentation of the group of units");
  CLI::App* c_classify = app.add_subcommand("classify", "structure of the group of units");
  CLI::App* c_grammar = app.add_subcommand("grammar", "context-free grammar for a rule's left side");
  c_grammar->add_option("rule", rule_index, "rule index (default 0)");
  CLI::App* c_slice = app.add_subcommand("slice", "identity-class slice over (a b^e c)^n words");
  c_slice->add_option("n", slice_n, "number of blocks")->required();
  CLI::App* c_verdict = app.add_subcommand("verdict", "context-freeness evidence for the n-family");
  c_verdict->add_option("n", verdict_n, "family index n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) return cmd_check(cfg);
    if (c_nf->parsed()) return cmd_nf(cfg, word_arg);
    if (c_eq->parsed()) return cmd_eq(cfg, u_arg, v_arg);
    if (c_wp->parsed()) return cmd_wp(cfg, query_arg);
    if (c_inv->parsed()) return cmd_invertible(cfg, word_arg);
    if (c_factor->parsed()) return cmd_factor(cfg, word_arg);
    if (c_lambda->parsed()) return cmd_lambda(cfg);
    if (c_units->parsed()) return cmd_units(cfg, false);
    if (c_classify->parsed()) return cmd_units(cfg, true);
    if (c_grammar->parsed()) return cmd_grammar(cfg, rule_index);
    if (c_slice->parsed()) return cmd_slice(cfg, slice_n);
    if (c_verdict->parsed()) return cmd_verdict(cfg, verdict_n);
    std::cerr << "no subcommand given; see --help\n";
    return 2;
  } catch (const sl::NotContextFreeError& e) {
    std::cerr << "not context-free: " << e.what() << "\n";
    return 2;
  } catch (const sl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
