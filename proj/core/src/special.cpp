#include "speciallab/special.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "speciallab/errors.hpp"
#include "speciallab/presentations.hpp"

namespace speciallab {

int default_witness_bound(const CompleteSystem& cs) {
  const int bound = cs.evidence().bound;
  std::size_t longest = 1;
  for (const Rule& r : cs.system().rules())
    longest = std::max(longest, r.lhs.length_at(std::max(bound, r.lhs.param_min())));
  return static_cast<int>(2 * longest);
}

namespace {

// Shortest-witness Dijkstra over irreducible words. A move consumes a
// nonempty boundary piece t of the state (suffix when appending on the right,
// prefix when prepending on the left) by completing it to a full rule
// instance L with fresh letters p, |p| >= 1; the state becomes the normal
// form of the remainder glued to the rule's right side. Any minimal witness
// decomposes into such completions (a completion firing no boundary instance
// either survives to be consumed later or forms a full instance on its own,
// and the latter can be replaced by the shorter right side), so within the
// length bound the search is exact.
std::optional<Word> witness_search(const CompleteSystem& cs, const Word& w, int bound,
                                   std::size_t state_budget, bool right) {
  if (bound < 0) throw Error("witness search bound must be nonnegative");
  const RewriteSystem& sys = cs.system();
  sys.alphabet().validate(w);
  const Word s0 = normal_form(sys, w);
  if (s0.empty()) return Word{};

  struct Edge {
    Word prev;
    Word chunk;
  };
  std::map<Word, int> dist;
  std::map<Word, Edge> parent;
  using QEntry = std::tuple<int, std::uint64_t, Word>;
  std::priority_queue<QEntry, std::vector<QEntry>, std::greater<QEntry>> frontier;
  std::uint64_t tie = 0;
  dist.emplace(s0, 0);
  frontier.push({0, tie++, s0});
  std::size_t pops = 0;

  while (!frontier.empty()) {
    const auto [d, ignore, s] = frontier.top();
    frontier.pop();
    if (d != dist.at(s)) continue;
    if (++pops > state_budget)
      throw SearchBudgetError("witness search exceeded its state budget");

    if (s.empty()) {
      std::vector<Word> chunks;  // goal to start
      Word cur = s;
      while (cur != s0) {
        const Edge& e = parent.at(cur);
        chunks.push_back(e.chunk);
        cur = e.prev;
      }
      Word witness;
      if (right)
        for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) witness += *it;
      else
        for (const Word& c : chunks) witness += c;
      const Word probe = right ? w + witness : witness + w;
      if (!normal_form(sys, probe).empty())
        throw Error("internal: witness failed verification");
      return witness;
    }

    const int remaining = bound - d;
    if (remaining <= 0) continue;

    auto relax = [&](std::size_t tlen, const Word& inst, const Word& rhs_inst) {
      const std::size_t plen = inst.size() - tlen;
      Word chunk, next_word;
      if (right) {
        if (inst.compare(0, tlen, s, s.size() - tlen, tlen) != 0) return;
        chunk = inst.substr(tlen);
        next_word = s.substr(0, s.size() - tlen) + rhs_inst;
      } else {
        if (inst.compare(inst.size() - tlen, tlen, s, 0, tlen) != 0) return;
        chunk = inst.substr(0, plen);
        next_word = rhs_inst + s.substr(tlen);
      }
      const Word next = normal_form(sys, next_word);
      const int nd = d + static_cast<int>(plen);
      auto it = dist.find(next);
      if (it != dist.end() && it->second <= nd) return;
      dist[next] = nd;
      parent[next] = Edge{s, std::move(chunk)};
      frontier.push({nd, tie++, next});
    };

    for (std::size_t tlen = 1; tlen <= s.size(); ++tlen) {
      const std::size_t max_len = tlen + static_cast<std::size_t>(remaining);
      for (const Rule& rule : sys.rules()) {
        if (!rule.lhs.has_param()) {
          const std::size_t len = rule.lhs.length_at(1);
          if (len > tlen && len <= max_len)
            relax(tlen, rule.lhs.instantiate(1), rule.rhs.instantiate(1));
          continue;
        }
        for (int i = rule.lhs.param_min(); rule.lhs.length_at(i) <= max_len; ++i) {
          if (rule.lhs.length_at(i) <= tlen) continue;
          relax(tlen, rule.lhs.instantiate(i), rule.rhs.instantiate(i));
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<InvertibilityWitness> is_right_invertible(const CompleteSystem& cs, const Word& w,
                                                        int search_bound,
                                                        std::size_t state_budget) {
  auto witness = witness_search(cs, w, search_bound, state_budget, true);
  if (!witness) return std::nullopt;
  return InvertibilityWitness{Side::Right, std::nullopt, std::move(witness), search_bound};
}

std::optional<InvertibilityWitness> is_left_invertible(const CompleteSystem& cs, const Word& w,
                                                       int search_bound,
                                                       std::size_t state_budget) {
  auto witness = witness_search(cs, w, search_bound, state_budget, false);
  if (!witness) return std::nullopt;
  return InvertibilityWitness{Side::Left, std::move(witness), std::nullopt, search_bound};
}

std::optional<InvertibilityWitness> is_invertible(const CompleteSystem& cs, const Word& w,
                                                  int search_bound, std::size_t state_budget) {
  auto right = witness_search(cs, w, search_bound, state_budget, true);
  if (!right) return std::nullopt;
  auto left = witness_search(cs, w, search_bound, state_budget, false);
  if (!left) return std::nullopt;
  return InvertibilityWitness{Side::TwoSided, std::move(left), std::move(right), search_bound};
}

MinimalFactorization minimal_factorization(const CompleteSystem& cs, const Word& w,
                                           int search_bound, std::size_t state_budget) {
  cs.system().alphabet().validate(w);
  if (!is_invertible(cs, w, search_bound, state_budget))
    throw Error("word is not invertible within witness bound " + std::to_string(search_bound));
  MinimalFactorization out;
  Word rest = w;
  while (!rest.empty()) {
    std::size_t cut = 0;
    for (std::size_t len = 1; len <= rest.size(); ++len) {
      if (is_invertible(cs, rest.substr(0, len), search_bound, state_budget)) {
        cut = len;
        break;
      }
    }
    if (cut == 0)
      throw Error("no invertible prefix within witness bound " + std::to_string(search_bound) +
                  "; factorization inconclusive");
    out.factors.push_back(rest.substr(0, cut));
    rest.erase(0, cut);
  }
  return out;
}

namespace {

struct Run {
  char letter;
  std::size_t count;
};

std::vector<Run> rle(const Word& w) {
  std::vector<Run> out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out.push_back({w[i], j - i});
    i = j;
  }
  return out;
}

// Generalize a family of words indexed by consecutive parameter values
// pm, pm+1, ... into a pattern whose runs are either constant or track the
// parameter exactly. Absent when the family has no such shape.
std::optional<ParamPattern> anti_unify(const std::vector<Word>& family, int pm) {
  std::vector<std::vector<Run>> runs;
  runs.reserve(family.size());
  for (const Word& w : family) runs.push_back(rle(w));
  const auto& first = runs.front();
  for (const auto& r : runs) {
    if (r.size() != first.size()) return std::nullopt;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k].letter != first[k].letter) return std::nullopt;
  }

  std::vector<ParamPattern::Segment> segs;
  for (std::size_t k = 0; k < first.size(); ++k) {
    bool constant = true, tracks = true;
    for (std::size_t s = 0; s < runs.size(); ++s) {
      if (runs[s][k].count != first[k].count) constant = false;
      if (runs[s][k].count != static_cast<std::size_t>(pm) + s) tracks = false;
    }
    if (constant)
      segs.push_back({false, std::string(first[k].count, first[k].letter)});
    else if (tracks)
      segs.push_back({true, std::string(1, first[k].letter)});
    else
      return std::nullopt;
  }

  ParamPattern pattern;
  try {
    pattern = ParamPattern(std::move(segs), pm);
  } catch (const Error&) {
    return std::nullopt;
  }
  for (std::size_t s = 0; s < family.size(); ++s)
    if (pattern.instantiate(pm + static_cast<int>(s)) != family[s]) return std::nullopt;
  return pattern;
}

}  // namespace

MinimalWordSet compute_lambda(const CompleteSystem& cs, int search_bound,
                              std::size_t state_budget) {
  const RewriteSystem& sys = cs.system();
  MinimalWordSet out;
  out.inst_bound = cs.evidence().bound;

  auto add_pattern = [&](const ParamPattern& p) {
    if (std::find(out.patterns.begin(), out.patterns.end(), p) == out.patterns.end())
      out.patterns.push_back(p);
  };
  auto add_concrete = [&](const Word& w) {
    if (std::find(out.concrete.begin(), out.concrete.end(), w) == out.concrete.end())
      out.concrete.push_back(w);
  };
  auto factor = [&](const Word& w) {
    try {
      return minimal_factorization(cs, w, search_bound, state_budget).factors;
    } catch (const Error& e) {
      throw Error("rule side '" + w + "': " + e.what());
    }
  };

  for (const Rule& rule : sys.rules()) {
    for (const ParamPattern* side : {&rule.lhs, &rule.rhs}) {
      if (side->empty()) continue;
      if (!side->has_param()) {
        for (const Word& f : factor(side->instantiate(1))) add_pattern(ParamPattern::constant(f));
        continue;
      }
      const int pm = side->param_min();
      std::vector<std::vector<Word>> per_value;
      for (int i = pm; i <= out.inst_bound; ++i) per_value.push_back(factor(side->instantiate(i)));

      bool aligned = per_value.size() >= 3;
      for (const auto& f : per_value)
        if (f.size() != per_value.front().size()) aligned = false;

      if (!aligned) {
        out.warnings.push_back("factors of a rule side did not generalize (need >= 3 aligned "
                               "parameter values); keeping concrete words");
        for (const auto& f : per_value)
          for (const Word& w : f) add_concrete(w);
        continue;
      }
      for (std::size_t j = 0; j < per_value.front().size(); ++j) {
        std::vector<Word> family;
        for (const auto& f : per_value) family.push_back(f[j]);
        if (auto p = anti_unify(family, pm)) {
          add_pattern(*p);
        } else {
          out.warnings.push_back("a factor family does not follow a single-parameter run shape; "
                                 "keeping concrete words");
          for (const Word& w : family) add_concrete(w);
        }
      }
    }
  }
  return out;
}

BiprefixReport check_biprefix(const MinimalWordSet& lam) {
  // A proper prefix/suffix relation between instances of two single-parameter
  // patterns aligns their runs, constraining the parameters by equalities and
  // inequalities against the patterns' constant run lengths; any solvable
  // constraint set is solvable with small values, so enumerating up to the
  // constants (plus slack) decides all parameter values.
  std::size_t max_const = 0;
  int max_pm = 1;
  for (const auto& p : lam.patterns) {
    max_const = std::max(max_const, p.constant_length());
    if (p.has_param()) max_pm = std::max(max_pm, p.param_min());
  }
  for (const Word& w : lam.concrete) max_const = std::max(max_const, w.size());
  const int check_bound =
      std::max(lam.inst_bound, static_cast<int>(max_const) + max_pm + 2);

  std::vector<Word> words;
  for (const auto& p : lam.patterns) {
    if (!p.has_param()) {
      words.push_back(p.instantiate(1));
      continue;
    }
    for (int i = p.param_min(); i <= check_bound; ++i) words.push_back(p.instantiate(i));
  }
  words.insert(words.end(), lam.concrete.begin(), lam.concrete.end());
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j || words[i].size() >= words[j].size()) continue;
      const Word& u = words[i];
      const Word& v = words[j];
      const bool prefix = v.compare(0, u.size(), u) == 0;
      const bool suffix = v.compare(v.size() - u.size(), u.size(), u) == 0;
      if (prefix || suffix) return {false, std::make_pair(u, v), check_bound};
    }
  }
  return {true, std::nullopt, check_bound};
}

std::optional<std::vector<LambdaFactor>> decode_over_lambda(const MinimalWordSet& lam,
                                                            const Word& w) {
  std::vector<LambdaFactor> out;
  std::size_t pos = 0;
  while (pos < w.size()) {
    std::optional<LambdaFactor> hit;
    for (std::size_t pi = 0; pi < lam.patterns.size() && !hit; ++pi) {
      if (auto m = lam.patterns[pi].match_at(w, pos))
        hit = LambdaFactor{true, pi, m->param, w.substr(pos, m->length)};
    }
    for (std::size_t ci = 0; ci < lam.concrete.size() && !hit; ++ci) {
      const Word& c = lam.concrete[ci];
      if (!c.empty() && w.compare(pos, c.size(), c) == 0)
        hit = LambdaFactor{false, ci, 1, c};
    }
    if (!hit) return std::nullopt;
    pos += hit->word.size();
    out.push_back(std::move(*hit));
  }
  return out;
}

namespace {

std::vector<RelatorSymbol> to_symbols(const std::vector<LambdaFactor>& factors,
                                      const std::vector<std::size_t>& pattern_gen,
                                      const std::vector<std::size_t>& concrete_gen,
                                      const std::vector<UnitsGenerator>& gens) {
  std::vector<RelatorSymbol> out;
  out.reserve(factors.size());
  for (const auto& f : factors) {
    const std::size_t g = f.from_pattern ? pattern_gen[f.index] : concrete_gen[f.index];
    std::optional<int> param;
    if (gens[g].parameterized) param = f.param;
    out.push_back({g, param});
  }
  return out;
}

}  // namespace

UnitsPresentation units_presentation(const CompleteSystem& cs, const MinimalWordSet& lam) {
  const RewriteSystem& sys = cs.system();
  const auto bp = check_biprefix(lam);
  if (!bp.ok)
    throw Error("minimal word set is not a biprefix code ('" + bp.counterexample->first +
                "' sits inside '" + bp.counterexample->second + "')");

  UnitsPresentation up;
  up.lambda = lam;
  up.param_name = sys.param_name();
  up.param_min = 1;
  bool saw_param = false;
  for (const auto& p : lam.patterns) {
    if (!p.has_param()) continue;
    up.param_min = saw_param ? std::min(up.param_min, p.param_min()) : p.param_min();
    saw_param = true;
  }

  const bool single = lam.patterns.size() + lam.concrete.size() == 1;
  std::vector<std::size_t> pattern_gen(lam.patterns.size());
  std::vector<std::size_t> concrete_gen(lam.concrete.size());
  std::size_t counter = 1;
  for (std::size_t pi = 0; pi < lam.patterns.size(); ++pi) {
    pattern_gen[pi] = up.generators.size();
    up.generators.push_back({true, pi, lam.patterns[pi].has_param(),
                             single ? "x" : "x" + std::to_string(counter++)});
  }
  for (std::size_t ci = 0; ci < lam.concrete.size(); ++ci) {
    concrete_gen[ci] = up.generators.size();
    up.generators.push_back({false, ci, false, single ? "x" : "x" + std::to_string(counter++)});
  }

  auto decode_side = [&](const Word& w, const std::string& what) {
    auto d = decode_over_lambda(lam, w);
    if (!d)
      throw Error(what + " '" + w + "' does not decode over the minimal words");
    return to_symbols(*d, pattern_gen, concrete_gen, up.generators);
  };

  for (const Rule& rule : sys.rules()) {
    UnitsRelator rel;
    rel.parameterized = rule.lhs.has_param();
    if (!rel.parameterized) {
      rel.lhs = decode_side(rule.lhs.instantiate(1), "rule left side");
      if (!rule.rhs.empty()) rel.rhs = decode_side(rule.rhs.instantiate(1), "rule right side");
      up.relators.push_back(std::move(rel));
      continue;
    }

    // Decode the whole sampled family and require one symbolic shape: fixed
    // generator sequence, every sampled parameter either tracking the rule
    // parameter or constant.
    const int pm = rule.lhs.param_min();
    std::vector<std::vector<RelatorSymbol>> lhs_samples, rhs_samples;
    for (int i = pm; i <= lam.inst_bound; ++i) {
      lhs_samples.push_back(decode_side(rule.lhs.instantiate(i), "rule left side"));
      rhs_samples.push_back(rule.rhs.empty()
                                ? std::vector<RelatorSymbol>{}
                                : decode_side(rule.rhs.instantiate(i), "rule right side"));
    }
    auto unify = [&](const std::vector<std::vector<RelatorSymbol>>& samples) {
      const auto& first = samples.front();
      std::vector<RelatorSymbol> out;
      for (std::size_t k = 0; k < first.size(); ++k) {
        for (const auto& s : samples) {
          if (s.size() != first.size() || s[k].generator != first[k].generator)
            throw Error("decoded rule sides do not share one generator sequence across "
                        "parameter values");
        }
        RelatorSymbol sym{first[k].generator, std::nullopt};
        if (up.generators[sym.generator].parameterized) {
          bool tracks = true, constant = true;
          for (std::size_t s = 0; s < samples.size(); ++s) {
            const int expect = pm + static_cast<int>(s);
            if (!samples[s][k].param) throw Error("internal: missing decoded parameter");
            if (*samples[s][k].param != expect) tracks = false;
            if (*samples[s][k].param != *samples.front()[k].param) constant = false;
          }
          if (tracks)
            sym.param = std::nullopt;
          else if (constant)
            sym.param = samples.front()[k].param;
          else
            throw Error("decoded parameters follow neither the rule parameter nor a constant");
        }
        out.push_back(sym);
      }
      return out;
    };
    rel.lhs = unify(lhs_samples);
    rel.rhs = unify(rhs_samples);
    up.relators.push_back(std::move(rel));
  }
  return up;
}

std::string display_generator(const UnitsPresentation& up, const RelatorSymbol& sym) {
  const UnitsGenerator& g = up.generators[sym.generator];
  if (!g.parameterized) return g.base_name;
  if (sym.param) return g.base_name + "_" + std::to_string(*sym.param);
  return g.base_name + "_" + up.param_name;
}

std::string display_relator(const UnitsPresentation& up, const UnitsRelator& rel) {
  auto side = [&](const std::vector<RelatorSymbol>& syms) -> std::string {
    if (syms.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < syms.size()) {
      std::size_t j = i;
      while (j < syms.size() && syms[j] == syms[i]) ++j;
      if (!out.empty()) out += ' ';
      out += display_generator(up, syms[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  };
  return side(rel.lhs) + " = " + side(rel.rhs);
}

UnitsClassification classify_units(const UnitsPresentation& up) {
  const auto& gens = up.generators;
  const auto& rels = up.relators;
  if (gens.empty()) return {true, true, "trivial group"};

  bool infinite_gens = false;
  for (const auto& g : gens) infinite_gens = infinite_gens || g.parameterized;
  const std::string per_param =
      ", one per " + up.param_name + " >= " + std::to_string(up.param_min);

  // Shape (a): every relator is x^n = 1 on one generator, covering each
  // generator exactly once (for families, via the shared parameter).
  if (!rels.empty()) {
    bool shape = true;
    const std::size_t n = rels.front().lhs.size();
    std::map<std::size_t, int> covered;
    for (const auto& r : rels) {
      if (!r.rhs.empty() || r.lhs.size() != n || n == 0) {
        shape = false;
        break;
      }
      const RelatorSymbol& head = r.lhs.front();
      for (const auto& sym : r.lhs)
        if (!(sym == head)) shape = false;
      if (gens[head.generator].parameterized && head.param)
        shape = false;  // constrains one member of the family only
      if (!shape) break;
      covered[head.generator] += 1;
    }
    if (shape && covered.size() == gens.size()) {
      for (const auto& [g, count] : covered)
        if (count != 1) shape = false;
      if (shape) {
        if (n == 1) return {true, true, "trivial group (every generator equals the identity)"};
        const std::string cyc = "C" + std::to_string(n);
        if (infinite_gens)
          return {true, false,
                  "free product of copies of " + cyc + per_param + "; not finitely generated"};
        if (gens.size() == 1) return {true, true, cyc};
        return {true, true,
                "free product of " + std::to_string(gens.size()) + " copies of " + cyc};
      }
    }
  }

  // Shape (b): the relators write out a full multiplication table on the
  // generators; verify it is a group and elementary abelian of exponent 2.
  if (!rels.empty()) {
    bool uniform = true;
    for (const auto& g : gens) uniform = uniform && (g.parameterized == gens.front().parameterized);
    const std::size_t m = gens.size() + 1;
    std::vector<int> table(m * m, -1);
    for (std::size_t x = 0; x < m; ++x) {
      table[x] = static_cast<int>(x);
      table[x * m] = static_cast<int>(x);
    }
    bool shape = uniform;
    for (const auto& r : rels) {
      if (r.lhs.size() != 2 || r.rhs.size() > 1) {
        shape = false;
        break;
      }
      bool family_ok = true;
      for (const auto& sym : r.lhs)
        if (gens[sym.generator].parameterized && sym.param) family_ok = false;
      for (const auto& sym : r.rhs)
        if (gens[sym.generator].parameterized && sym.param) family_ok = false;
      if (!family_ok) {
        shape = false;
        break;
      }
      const std::size_t x = r.lhs[0].generator + 1;
      const std::size_t y = r.lhs[1].generator + 1;
      const int z = r.rhs.empty() ? 0 : static_cast<int>(r.rhs[0].generator + 1);
      if (table[x * m + y] != -1 && table[x * m + y] != z) {
        shape = false;
        break;
      }
      table[x * m + y] = z;
    }
    if (shape) {
      for (int v : table) shape = shape && v != -1;
      if (shape) {
        try {
          const GroupTable gt(m, table);
          if (gt.is_elementary_abelian_2() && (m & (m - 1)) == 0) {
            std::string gname = "C2";
            for (std::size_t d = 2; (std::size_t{1} << d) <= m; ++d) gname += " x C2";
            if (infinite_gens)
              return {true, false,
                      "free product of copies of " + gname + per_param +
                          "; not finitely generated"};
            return {true, true, gname};
          }
        } catch (const Error&) {
        }
      }
    }
  }

  return {false, false, "unclassified"};
}

}  // namespace speciallab
