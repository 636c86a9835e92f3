#include "speciallab/language.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "speciallab/errors.hpp"
#include "speciallab/presentations.hpp"

namespace speciallab {

WpQuery parse_wp_query(const Alphabet& alphabet, const std::string& raw) {
  const auto pos = raw.find('#');
  if (pos == std::string::npos) throw Error("word-problem query must contain '#'");
  if (raw.find('#', pos + 1) != std::string::npos)
    throw Error("word-problem query must contain exactly one '#'");
  WpQuery q;
  q.raw = raw;
  q.u = raw.substr(0, pos);
  q.v_rev = raw.substr(pos + 1);
  alphabet.validate(q.u);
  alphabet.validate(q.v_rev);
  return q;
}

bool wp_member(const CompleteSystem& cs, const WpQuery& query) {
  return equal_in_monoid(cs, query.u, reversed(query.v_rev));
}

Grammar export_lhs_grammar(const ParamPattern& pattern) {
  if (pattern.param_segment_count() > 2)
    throw NotContextFreeError("the pattern has " + std::to_string(pattern.param_segment_count()) +
                              " synchronized parameter runs; three or more make the instance "
                              "language non-context-free");

  Grammar g;
  g.nonterminals.push_back("S");
  auto term = [&](char c) {
    if (std::find(g.terminals.begin(), g.terminals.end(), c) == g.terminals.end())
      g.terminals.push_back(c);
    return Grammar::Symbol{true, c, 0};
  };
  auto nt = [](std::size_t idx) { return Grammar::Symbol{false, '\0', idx}; };

  if (!pattern.has_param()) {
    Grammar::Production p{0, {}};
    for (char c : pattern.instantiate(1)) p.rhs.push_back(term(c));
    g.productions.push_back(std::move(p));
    return g;
  }

  const int pm = pattern.param_min();
  std::vector<Word> consts(1);
  std::vector<char> runs;
  for (const auto& seg : pattern.segments()) {
    if (seg.is_param) {
      runs.push_back(seg.run_letter());
      consts.emplace_back();
    } else {
      consts.back() += seg.text;
    }
  }

  g.nonterminals.push_back("M");
  const std::size_t M = 1;
  Grammar::Production top{0, {}};
  for (char c : consts.front()) top.rhs.push_back(term(c));
  top.rhs.push_back(nt(M));
  for (char c : consts.back()) top.rhs.push_back(term(c));
  g.productions.push_back(std::move(top));

  if (runs.size() == 1) {
    g.productions.push_back({M, {term(runs[0]), nt(M)}});
    Grammar::Production base{M, {}};
    for (int k = 0; k < pm; ++k) base.rhs.push_back(term(runs[0]));
    g.productions.push_back(std::move(base));
  } else {
    g.productions.push_back({M, {term(runs[0]), nt(M), term(runs[1])}});
    Grammar::Production base{M, {}};
    for (int k = 0; k < pm; ++k) base.rhs.push_back(term(runs[0]));
    for (char c : consts[1]) base.rhs.push_back(term(c));
    for (int k = 0; k < pm; ++k) base.rhs.push_back(term(runs[1]));
    g.productions.push_back(std::move(base));
  }
  return g;
}

std::string export_grammar(const Grammar& g) {
  std::string out = "start: " + g.nonterminals.front() + "\n";
  for (const auto& p : g.productions) {
    out += g.nonterminals[p.lhs] + " ->";
    if (p.rhs.empty()) out += " EPS";
    for (const auto& s : p.rhs) {
      out += ' ';
      out += s.is_terminal ? std::string(1, s.terminal) : g.nonterminals[s.nonterminal];
    }
    out += '\n';
  }
  return out;
}

namespace {

// Symbols encoded as integers: nonterminal index when >= 0, terminal
// character when < 0.
using Rhs = std::vector<long>;

long enc_terminal(char c) { return -static_cast<long>(static_cast<unsigned char>(c)) - 1; }
char dec_terminal(long v) { return static_cast<char>(-(v + 1)); }

}  // namespace

CnfGrammar to_cnf(const Grammar& g) {
  if (g.nonterminals.empty()) throw Error("grammar has no nonterminals");
  std::vector<std::string> names = g.nonterminals;
  auto fresh = [&names](const std::string& base) {
    std::string name = base;
    int k = 0;
    while (std::find(names.begin(), names.end(), name) != names.end())
      name = base + std::to_string(++k);
    names.push_back(name);
    return names.size() - 1;
  };

  std::vector<std::pair<std::size_t, Rhs>> prods;
  for (const auto& p : g.productions) {
    Rhs rhs;
    for (const auto& s : p.rhs)
      rhs.push_back(s.is_terminal ? enc_terminal(s.terminal)
                                  : static_cast<long>(s.nonterminal));
    prods.emplace_back(p.lhs, std::move(rhs));
  }

  const std::size_t start = fresh("S0");
  prods.emplace_back(start, Rhs{0});

  std::map<char, std::size_t> terminal_nt;
  for (auto& [lhs, rhs] : prods) {
    if (rhs.size() < 2) continue;
    for (long& v : rhs) {
      if (v >= 0) continue;
      const char c = dec_terminal(v);
      auto it = terminal_nt.find(c);
      if (it == terminal_nt.end()) it = terminal_nt.emplace(c, fresh(std::string("T_") + c)).first;
      v = static_cast<long>(it->second);
    }
  }
  for (const auto& [c, idx] : terminal_nt) prods.emplace_back(idx, Rhs{enc_terminal(c)});

  std::vector<std::pair<std::size_t, Rhs>> binary;
  for (auto& [lhs, rhs] : prods) {
    if (rhs.size() <= 2) {
      binary.emplace_back(lhs, rhs);
      continue;
    }
    std::size_t cur = lhs;
    for (std::size_t k = 0; k + 2 < rhs.size(); ++k) {
      const std::size_t next = fresh("B");
      binary.push_back({cur, {rhs[k], static_cast<long>(next)}});
      cur = next;
    }
    binary.push_back({cur, {rhs[rhs.size() - 2], rhs.back()}});
  }

  std::set<std::size_t> nullable;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [lhs, rhs] : binary) {
      if (nullable.count(lhs)) continue;
      bool all = true;
      for (long v : rhs) all = all && v >= 0 && nullable.count(static_cast<std::size_t>(v));
      if (all) {
        nullable.insert(lhs);
        changed = true;
      }
    }
  }
  std::set<std::pair<std::size_t, Rhs>> no_eps;
  for (const auto& [lhs, rhs] : binary) {
    std::vector<Rhs> variants{{}};
    for (long v : rhs) {
      std::vector<Rhs> next;
      for (const Rhs& base : variants) {
        Rhs keep = base;
        keep.push_back(v);
        next.push_back(std::move(keep));
        if (v >= 0 && nullable.count(static_cast<std::size_t>(v))) next.push_back(base);
      }
      variants = std::move(next);
    }
    for (Rhs& r : variants)
      if (!r.empty()) no_eps.emplace(lhs, std::move(r));
  }

  const std::size_t n = names.size();
  std::vector<std::set<std::size_t>> unit(n);
  for (std::size_t i = 0; i < n; ++i) unit[i].insert(i);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [lhs, rhs] : no_eps) {
      if (rhs.size() != 1 || rhs[0] < 0) continue;
      for (std::size_t a = 0; a < n; ++a)
        if (unit[a].count(lhs) && unit[a].insert(static_cast<std::size_t>(rhs[0])).second)
          changed = true;
    }
  }

  if (n > 64) throw Error("grammar too large: more than 64 nonterminals in normal form");

  CnfGrammar out;
  out.start = start;
  out.start_nullable = nullable.count(start) > 0;
  out.names = names;
  std::set<std::pair<std::size_t, Rhs>> final_prods;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : unit[a])
      for (const auto& [lhs, rhs] : no_eps) {
        if (lhs != b) continue;
        if (rhs.size() == 1 && rhs[0] >= 0) continue;
        final_prods.emplace(a, rhs);
      }
  for (const auto& [lhs, rhs] : final_prods) {
    if (rhs.size() == 1) {
      out.terminal_mask[dec_terminal(rhs[0])] |= std::uint64_t{1} << lhs;
    } else {
      out.triples.push_back(
          {lhs, static_cast<std::size_t>(rhs[0]), static_cast<std::size_t>(rhs[1])});
    }
  }
  return out;
}

bool grammar_member(const CnfGrammar& g, const Word& w) {
  if (w.empty()) return g.start_nullable;
  const std::size_t n = w.size();
  std::vector<std::uint64_t> table(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = g.terminal_mask.find(w[i]);
    table[i] = it == g.terminal_mask.end() ? 0 : it->second;
  }
  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::uint64_t mask = 0;
      for (std::size_t k = 1; k < len; ++k) {
        const std::uint64_t left = table[(k - 1) * n + i];
        const std::uint64_t right = table[(len - k - 1) * n + i + k];
        if (!left || !right) continue;
        for (const auto& t : g.triples)
          if ((left >> t.b & 1) && (right >> t.c & 1)) mask |= std::uint64_t{1} << t.a;
      }
      table[(len - 1) * n + i] = mask;
    }
  }
  return table[(n - 1) * n] >> g.start & 1;
}

bool grammar_member(const Grammar& g, const Word& w) { return grammar_member(to_cnf(g), w); }

SliceReport enumerate_wp_slice(const CompleteSystem& cs, int n, int e_bound) {
  if (n < 1) throw Error("slice width must be at least 1");
  if (e_bound < 1) throw Error("exponent bound must be at least 1");
  const Alphabet& alphabet = cs.system().alphabet();
  for (const char* name : {"a", "b", "c"})
    if (!alphabet.letter_named(name))
      throw Error("slice enumeration needs letters named a, b, c");
  const char a = *alphabet.letter_named("a");
  const char b = *alphabet.letter_named("b");
  const char c = *alphabet.letter_named("c");

  double size = 1;
  for (int k = 0; k < n; ++k) size *= e_bound;
  if (size > 2e7) throw Error("slice too large to enumerate");

  SliceReport rep;
  rep.n = n;
  rep.e_bound = e_bound;
  std::vector<int> tuple(static_cast<std::size_t>(n), 1);
  while (true) {
    Word u;
    for (int e : tuple) {
      u += a;
      u.append(static_cast<std::size_t>(e), b);
      u += c;
    }
    ++rep.tested;
    if (normal_form(cs.system(), u).empty()) rep.members.push_back(tuple);
    if (std::all_of(tuple.begin(), tuple.end(), [&](int e) { return e == tuple[0]; }))
      rep.expected.push_back(tuple);
    int k = n - 1;
    while (k >= 0 && tuple[k] == e_bound) {
      tuple[k] = 1;
      --k;
    }
    if (k < 0) break;
    ++tuple[k];
  }
  rep.agreement = rep.members == rep.expected;
  return rep;
}

CfVerdict cf_verdict(int n, int e_bound, int i_bound) {
  if (n < 1) throw Error("n must be at least 1");
  CfVerdict out;
  out.n = n;
  const RewriteSystem sys = to_rewrite_system(make_pi(n));
  if (n <= 2) {
    out.context_free = true;
    out.grammar = export_lhs_grammar(sys.rules().front().lhs);
    out.statement = "context-free: the defining left-hand sides form a language with at most two "
                    "synchronized runs, generated by the exported grammar";
  } else {
    out.context_free = false;
    const CompleteSystem cs = CompleteSystem::certify(sys, i_bound);
    out.slice = enumerate_wp_slice(cs, n, e_bound);
    out.statement = "not context-free: among slice words (a b^{e_1} c)...(a b^{e_n} c) exactly "
                    "the equal-exponent tuples reach the identity, and matching " +
                    std::to_string(n) + " synchronized runs exceeds context-free power";
  }
  return out;
}

}  // namespace speciallab
