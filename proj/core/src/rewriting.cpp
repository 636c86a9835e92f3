#include "speciallab/rewriting.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "speciallab/errors.hpp"

namespace speciallab {

Rule::Rule(ParamPattern lhs_, ParamPattern rhs_) : lhs(std::move(lhs_)), rhs(std::move(rhs_)) {
  if (lhs.empty()) throw Error("rule left side must be nonempty");
  if (rhs.has_param()) {
    if (!lhs.has_param())
      throw Error("rule right side mentions the parameter but the left side does not");
    if (rhs.param_min() != lhs.param_min())
      throw Error("rule sides disagree on the minimum parameter value");
  }
  // Length at the parameter i is constant_length + i * param_segment_count.
  // The gap must be positive at param_min and nondecreasing in i.
  if (lhs.param_segment_count() < rhs.param_segment_count())
    throw Error("rule is not length-reducing: right side grows faster in the parameter");
  const int pm = lhs.param_min();
  if (lhs.length_at(pm) <= rhs.length_at(pm))
    throw Error("rule is not length-reducing at the minimum parameter value");
}

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<Rule> rules, std::string name,
                             std::string param_name)
    : alphabet_(std::move(alphabet)),
      rules_(std::move(rules)),
      name_(std::move(name)),
      param_name_(std::move(param_name)) {
  if (param_name_.empty()) throw Error("parameter name must be nonempty");
  for (const Rule& r : rules_) {
    const auto lhs_letters = r.lhs.letters();
    const auto rhs_letters = r.rhs.letters();
    alphabet_.validate(Word(lhs_letters.begin(), lhs_letters.end()));
    alphabet_.validate(Word(rhs_letters.begin(), rhs_letters.end()));
  }
}

bool RewriteSystem::is_special() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_special(); });
}

bool RewriteSystem::is_monadic() const {
  return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_monadic(); });
}

int RewriteSystem::max_param_min() const {
  int m = 1;
  for (const Rule& r : rules_)
    if (r.lhs.has_param()) m = std::max(m, r.lhs.param_min());
  return m;
}

std::optional<ReduceStep> reduce_once(const RewriteSystem& sys, const Word& w) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t ri = 0; ri < sys.rules().size(); ++ri) {
      const Rule& rule = sys.rules()[ri];
      auto m = rule.lhs.match_at(w, pos);
      if (!m) continue;
      Word out;
      out.reserve(w.size());
      out.append(w, 0, pos);
      out += rule.rhs.instantiate(m->param);
      out.append(w, pos + m->length, w.size() - pos - m->length);
      return ReduceStep{std::move(out), AppliedRule{ri, pos, m->param, m->length}};
    }
  }
  return std::nullopt;
}

ReductionTrace reduce_to_normal_form(const RewriteSystem& sys, const Word& w,
                                     std::size_t step_cap) {
  const std::size_t cap = std::max(step_cap, w.size());
  ReductionTrace trace;
  trace.input = w;
  Word cur = w;
  while (auto step = reduce_once(sys, cur)) {
    trace.steps.push_back(step->applied);
    cur = std::move(step->result);
    if (trace.steps.size() > cap)
      throw Error("internal: reduction exceeded the step cap, system is not length-reducing");
  }
  trace.output = std::move(cur);
  return trace;
}

Word normal_form(const RewriteSystem& sys, const Word& w) {
  return reduce_to_normal_form(sys, w).output;
}

const char* to_string(ConfluenceVerdict v) {
  switch (v) {
    case ConfluenceVerdict::LocallyConfluentUpToBound: return "locally-confluent-up-to-bound";
    case ConfluenceVerdict::Refuted: return "refuted";
  }
  return "?";
}

namespace {

struct Instance {
  std::size_t rule_index;
  int param;
  Word lhs;
  Word rhs;
};

std::vector<Instance> enumerate_instances(const RewriteSystem& sys, int i_bound) {
  std::vector<Instance> out;
  for (std::size_t ri = 0; ri < sys.rules().size(); ++ri) {
    const Rule& rule = sys.rules()[ri];
    if (!rule.lhs.has_param()) {
      out.push_back({ri, rule.lhs.param_min(), rule.lhs.instantiate(1), rule.rhs.instantiate(1)});
      continue;
    }
    for (int i = rule.lhs.param_min(); i <= i_bound; ++i)
      out.push_back({ri, i, rule.lhs.instantiate(i), rule.rhs.instantiate(i)});
  }
  return out;
}

}  // namespace

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys, int i_bound) {
  if (i_bound < sys.max_param_min())
    throw Error("parameter bound is below a rule's minimum parameter value");
  const auto instances = enumerate_instances(sys, i_bound);

  std::vector<CriticalPair> out;
  std::set<std::tuple<Word, Word, Word>> seen;
  auto emit = [&](CriticalPair cp) {
    if (seen.insert({cp.source, cp.left_result, cp.right_result}).second)
      out.push_back(std::move(cp));
  };

  for (std::size_t ia = 0; ia < instances.size(); ++ia) {
    const Instance& a = instances[ia];
    const std::size_t la = a.lhs.size();
    for (std::size_t ib = 0; ib < instances.size(); ++ib) {
      const Instance& b = instances[ib];
      const std::size_t lb = b.lhs.size();

      // Proper overlap: a nonempty proper suffix of a.lhs equals a prefix of
      // b.lhs. The superposition is a.lhs glued to b.lhs on that overlap.
      const std::size_t kmax = std::min(la, lb) - 1;
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (a.lhs.compare(la - k, k, b.lhs, 0, k) != 0) continue;
        Word source = a.lhs + b.lhs.substr(k);
        Word left_result = a.rhs + b.lhs.substr(k);
        Word right_result = a.lhs.substr(0, la - k) + b.rhs;
        emit({std::move(source), std::move(left_result), std::move(right_result),
              OverlapKind::ProperOverlap, {a.rule_index, a.param}, {b.rule_index, b.param}, k});
      }

      // Inclusion: b.lhs occurs inside a.lhs. An instance trivially includes
      // itself, which gives no information; everything else counts.
      if (ia == ib || lb > la) continue;
      for (std::size_t p = a.lhs.find(b.lhs); p != Word::npos; p = a.lhs.find(b.lhs, p + 1)) {
        Word left_result = a.rhs;
        Word right_result = a.lhs.substr(0, p) + b.rhs + a.lhs.substr(p + lb);
        emit({a.lhs, std::move(left_result), std::move(right_result), OverlapKind::Inclusion,
              {a.rule_index, a.param}, {b.rule_index, b.param}, p});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const CriticalPair& x, const CriticalPair& y) {
    return std::tie(x.source, x.left_result, x.right_result, x.left.rule_index, x.left.param,
                    x.right.rule_index, x.right.param, x.detail) <
           std::tie(y.source, y.left_result, y.right_result, y.left.rule_index, y.left.param,
                    y.right.rule_index, y.right.param, y.detail);
  });
  return out;
}

ConfluenceReport check_local_confluence(const RewriteSystem& sys, int i_bound) {
  ConfluenceReport report;
  report.bound = i_bound;
  report.pairs = critical_pairs(sys, i_bound);
  report.pairs_examined = report.pairs.size();
  for (const CriticalPair& cp : report.pairs) {
    if (normal_form(sys, cp.left_result) != normal_form(sys, cp.right_result))
      report.unjoinable.push_back(cp);
  }
  report.verdict = report.unjoinable.empty() ? ConfluenceVerdict::LocallyConfluentUpToBound
                                             : ConfluenceVerdict::Refuted;
  return report;
}

CompleteSystem CompleteSystem::certify(RewriteSystem sys, int i_bound) {
  ConfluenceReport report = check_local_confluence(sys, i_bound);
  if (!report.ok())
    throw CompletenessError("local confluence refuted: " +
                            std::to_string(report.unjoinable.size()) +
                            " unjoinable critical pair(s) up to parameter bound " +
                            std::to_string(i_bound));
  return CompleteSystem(std::move(sys), std::move(report));
}

bool equal_in_monoid(const CompleteSystem& cs, const Word& u, const Word& v) {
  cs.system().alphabet().validate(u);
  cs.system().alphabet().validate(v);
  return normal_form(cs.system(), u) == normal_form(cs.system(), v);
}

Word incremental_normal_form(const CompleteSystem& cs, const Word& w) {
  const RewriteSystem& sys = cs.system();
  if (!sys.is_monadic())
    throw Error("incremental normal form requires a monadic system");
  sys.alphabet().validate(w);
  Word stack;
  stack.reserve(w.size());
  for (char ch : w) {
    stack.push_back(ch);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Rule& rule : sys.rules()) {
        auto m = rule.lhs.match_suffix_end(stack);
        if (!m) continue;
        stack.resize(m->start);
        stack += rule.rhs.instantiate(m->param);
        changed = true;
        break;
      }
    }
  }
  return stack;
}

}  // namespace speciallab
