#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "speciallab/rewriting.hpp"
#include "speciallab/words.hpp"

namespace speciallab {

enum class Side { Left, Right, TwoSided };

/// Witnesses of (one- or two-sided) invertibility: left_witness * w reduces
/// to the empty word and/or w * right_witness does. Witnesses are verified by
/// rewriting before being returned.
struct InvertibilityWitness {
  Side side;
  std::optional<Word> left_witness;
  std::optional<Word> right_witness;
  int search_bound;
};

/// Twice the longest instantiated left-hand side at the certification bound;
/// ample for witnesses of code words in the systems this tool targets.
int default_witness_bound(const CompleteSystem& cs);

/// Shortest-witness search for w' with w w' = 1, |w'| <= search_bound.
///
/// The search runs over irreducible words: from state s, appending a word p
/// that completes a rule instance L = t p straddling the boundary (t a
/// nonempty suffix of s) moves to the normal form of (s minus t) followed by
/// the rule's right side, at cost |p|. Any witness of minimal length
/// decomposes into such completions, so within the bound the search is exact:
/// absence means no witness of length <= search_bound exists.
std::optional<InvertibilityWitness> is_right_invertible(const CompleteSystem& cs, const Word& w,
                                                        int search_bound,
                                                        std::size_t state_budget = 500'000);

/// Mirror search for u with u w = 1: completions extend instances to the
/// left, eating prefixes of the state.
std::optional<InvertibilityWitness> is_left_invertible(const CompleteSystem& cs, const Word& w,
                                                       int search_bound,
                                                       std::size_t state_budget = 500'000);

/// Both searches; present iff w is invertible with witnesses within the
/// bound, carrying both witnesses.
std::optional<InvertibilityWitness> is_invertible(const CompleteSystem& cs, const Word& w,
                                                  int search_bound,
                                                  std::size_t state_budget = 500'000);

struct MinimalFactorization {
  std::vector<Word> factors;
};

/// Factor an invertible word into minimal invertible factors by repeatedly
/// splitting off the shortest invertible nonempty prefix; the factorization
/// into minimal factors is unique, so the greedy choice is the factorization.
/// Throws if w is not seen to be invertible within the bound, or if some
/// remainder has no invertible prefix within the bound (inconclusive).
MinimalFactorization minimal_factorization(const CompleteSystem& cs, const Word& w,
                                           int search_bound, std::size_t state_budget = 500'000);

/// The minimal words of the monoid, as patterns when the factor families
/// generalize over the rule parameter and as concrete words (with a warning)
/// when they do not.
struct MinimalWordSet {
  std::vector<ParamPattern> patterns;
  std::vector<Word> concrete;
  int inst_bound;  // parameter bound used for enumeration and verification
  std::vector<std::string> warnings;
};

/// Factor every rule side's instances (parameter up to the certification
/// bound) into minimal invertible factors and anti-unify each factor family
/// back into a pattern. A family generalizes only if at least 3 consecutive
/// parameter values exhibit the same run-length shape.
MinimalWordSet compute_lambda(const CompleteSystem& cs, int search_bound,
                              std::size_t state_budget = 500'000);

struct BiprefixReport {
  bool ok;
  std::optional<std::pair<Word, Word>> counterexample;  // (shorter, longer)
  int check_bound;  // instantiation bound that made the pairwise check exhaustive
};

/// Whether no word of the set is a proper prefix or suffix of another.
/// Instances are enumerated up to a bound derived from the patterns' constant
/// parts, above which run-length profiles make new violations impossible, so
/// the verdict covers all parameter values.
BiprefixReport check_biprefix(const MinimalWordSet& lam);

struct LambdaFactor {
  bool from_pattern;  // false: index into concrete words
  std::size_t index;
  int param;
  Word word;
};

/// Unique factorization of w over the code, or absent. Scans left to right;
/// the prefix-code property makes at most one code word match at each
/// position. Requires check_biprefix to have passed.
std::optional<std::vector<LambdaFactor>> decode_over_lambda(const MinimalWordSet& lam,
                                                            const Word& w);

struct UnitsGenerator {
  bool from_pattern;
  std::size_t index;        // into lam.patterns or lam.concrete
  bool parameterized;       // a family x_i, one generator per parameter value
  std::string base_name;    // display stem ("x", "x1", ...)
};

struct RelatorSymbol {
  std::size_t generator;
  std::optional<int> param;  // absent: the relator family's shared parameter
  bool operator==(const RelatorSymbol&) const = default;
};

struct UnitsRelator {
  std::vector<RelatorSymbol> lhs;
  std::vector<RelatorSymbol> rhs;  // empty means = 1
  bool parameterized;
};

/// Presentation of the submonoid generated by the code: one abstract
/// generator per code word, one relator per defining rule, obtained by
/// decoding both rule sides over the code.
struct UnitsPresentation {
  MinimalWordSet lambda;
  std::vector<UnitsGenerator> generators;
  std::vector<UnitsRelator> relators;
  std::string param_name;
  int param_min;
};

/// Decode every rule side over the code and emit the relator family. Decoding
/// is checked at every parameter value up to the instantiation bound; a rule
/// side that fails to decode, or whose decoded shape does not follow the
/// shared parameter, is an error.
UnitsPresentation units_presentation(const CompleteSystem& cs, const MinimalWordSet& lam);

std::string display_generator(const UnitsPresentation& up, const RelatorSymbol& sym);
std::string display_relator(const UnitsPresentation& up, const UnitsRelator& rel);

struct UnitsClassification {
  bool recognized;
  bool finitely_generated;
  std::string description;
};

/// Recognize the shapes this tool produces: relators x^n on distinct
/// generators give a free product of cyclic groups; a complete multiplication
/// table on the generators gives a free product of copies of the finite
/// group it defines (verified to be a group and elementary abelian of
/// exponent 2). Everything else is reported unclassified.
UnitsClassification classify_units(const UnitsPresentation& up);

}  // namespace speciallab
