#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "speciallab/words.hpp"

namespace speciallab {

/// One rewriting rule schema lhs -> rhs. Both sides may mention the shared
/// parameter; the instantiated left side is strictly longer than the
/// instantiated right side for every admissible parameter value, so every
/// system built from rules is length-reducing (and hence terminating).
struct Rule {
  ParamPattern lhs;
  ParamPattern rhs;

  Rule(ParamPattern lhs_, ParamPattern rhs_);

  bool is_special() const { return rhs.empty(); }
  bool is_monadic() const { return !rhs.has_param() && rhs.constant_length() <= 1; }
  int param_min() const { return lhs.param_min(); }
};

class RewriteSystem {
 public:
  RewriteSystem(Alphabet alphabet, std::vector<Rule> rules, std::string name = "system",
                std::string param_name = "i");

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::string& name() const { return name_; }
  const std::string& param_name() const { return param_name_; }

  bool is_special() const;
  bool is_monadic() const;
  /// Always true by construction; kept as part of the contract surface.
  bool is_length_reducing() const { return true; }

  /// Largest param_min over the rules (1 for parameterless systems).
  int max_param_min() const;

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::string name_;
  std::string param_name_;
};

struct AppliedRule {
  std::size_t rule_index;
  std::size_t position;
  int param;
  std::size_t consumed;  // instance length replaced
  bool operator==(const AppliedRule&) const = default;
};

struct ReduceStep {
  Word result;
  AppliedRule applied;
};

/// Apply one rewrite at the leftmost matching position; among rules matching
/// there, the lowest rule index wins. Absent iff w is irreducible.
std::optional<ReduceStep> reduce_once(const RewriteSystem& sys, const Word& w);

struct ReductionTrace {
  Word input;
  Word output;
  std::vector<AppliedRule> steps;
};

/// Reduce w to its irreducible descendant under the leftmost strategy,
/// recording the applied rule instances. The step cap guards against internal
/// faults; a length-reducing system can never hit it.
ReductionTrace reduce_to_normal_form(const RewriteSystem& sys, const Word& w,
                                     std::size_t step_cap = 10'000);

Word normal_form(const RewriteSystem& sys, const Word& w);

enum class OverlapKind { ProperOverlap, Inclusion };

struct RuleInstance {
  std::size_t rule_index;
  int param;
  bool operator==(const RuleInstance&) const = default;
};

/// A superposition of two rule instances: either their left sides overlap
/// properly, or one left side contains the other. Rewriting the source with
/// each instance gives the two results.
struct CriticalPair {
  Word source;
  Word left_result;
  Word right_result;
  OverlapKind kind;
  RuleInstance left;
  RuleInstance right;
  std::size_t detail;  // overlap length, or inclusion position
};

/// All critical pairs among rule instances with parameters up to i_bound,
/// deduplicated by (source, left result, right result) and deterministically
/// ordered. i_bound must dominate every rule's param_min.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys, int i_bound);

enum class ConfluenceVerdict { LocallyConfluentUpToBound, Refuted };

const char* to_string(ConfluenceVerdict v);

struct ConfluenceReport {
  int bound = 0;
  std::size_t pairs_examined = 0;
  std::vector<CriticalPair> pairs;       // everything examined
  std::vector<CriticalPair> unjoinable;  // pairs whose normal forms differ
  ConfluenceVerdict verdict = ConfluenceVerdict::Refuted;
  bool ok() const { return verdict == ConfluenceVerdict::LocallyConfluentUpToBound; }
};

/// Decide joinability of every critical pair up to the bound by reducing both
/// results to normal form.
ConfluenceReport check_local_confluence(const RewriteSystem& sys, int i_bound);

/// A rewriting system together with the evidence that it is complete up to a
/// parameter bound: length-reducing by construction, and locally confluent on
/// every critical pair examined. Operations that decide monoid properties
/// take this type, so the gate cannot be bypassed.
class CompleteSystem {
 public:
  /// Runs the completeness check; throws CompletenessError naming the failing
  /// stage if the system cannot be certified.
  static CompleteSystem certify(RewriteSystem sys, int i_bound);

  const RewriteSystem& system() const { return sys_; }
  const ConfluenceReport& evidence() const { return evidence_; }

 private:
  CompleteSystem(RewriteSystem sys, ConfluenceReport evidence)
      : sys_(std::move(sys)), evidence_(std::move(evidence)) {}
  RewriteSystem sys_;
  ConfluenceReport evidence_;
};

/// u and v represent the same monoid element iff their normal forms agree.
bool equal_in_monoid(const CompleteSystem& cs, const Word& u, const Word& v);

/// Single left-to-right pass keeping an irreducible stack; every new letter
/// can only create a redex ending at the top, which is rewritten away before
/// the next letter is read. Requires a monadic system; agrees with
/// normal_form by confluence.
Word incremental_normal_form(const CompleteSystem& cs, const Word& w);

}  // namespace speciallab
