#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "speciallab/rewriting.hpp"
#include "speciallab/words.hpp"

namespace speciallab {

/// One oriented relation lhs = rhs with the left side strictly longer for
/// every parameter value, so `to_rewrite_system` never has to choose a
/// direction. rhs empty means lhs = 1.
struct Relation {
  ParamPattern lhs;
  ParamPattern rhs;
  bool operator==(const Relation&) const = default;
};

class PresentationSchema {
 public:
  PresentationSchema(Alphabet alphabet, std::vector<Relation> relations, std::string name,
                     std::string param_name = "i", int param_min = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::string& name() const { return name_; }
  const std::string& param_name() const { return param_name_; }
  int param_min() const { return param_min_; }

  /// True when every relation reads w = 1.
  bool is_special() const;

  bool operator==(const PresentationSchema&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Relation> relations_;
  std::string name_;
  std::string param_name_;
  int param_min_;
};

/// Multiplication table of a small finite group on elements 0..order-1 with
/// identity 0. Construction verifies the group laws exhaustively.
class GroupTable {
 public:
  GroupTable(std::size_t order, std::vector<int> products);

  /// The elementary abelian 2-group of order 2^n: indices multiply by XOR.
  static GroupTable boolean_cube(int n);

  std::size_t order() const { return order_; }
  int product(int x, int y) const;
  int identity() const { return 0; }
  int inverse(int x) const;
  int element_order(int x) const;
  bool is_abelian() const;
  /// Every non-identity element is an involution (so the group is C2^k).
  bool is_elementary_abelian_2() const;

 private:
  std::size_t order_;
  std::vector<int> products_;  // row-major
};

/// The monoid ⟨a,b,c | (a b^i c)^n = 1, i ≥ 1⟩.
PresentationSchema make_pi(int n);

/// The monoid obtained from the multiplication table of C2^n (order m = 2^n)
/// by substituting x_j ↦ a b_j^t c: alphabet {a, b_1, ..., b_{m-1}, c} and
/// rules (a b_i^t c)(a b_j^t c) = a b_k^t c where x_i x_j = x_k in the group,
/// or = 1 when x_j = x_i^{-1}. Both orientations of each table entry are
/// emitted. Requires 1 ≤ n ≤ 4.
PresentationSchema make_mn(int n);

RewriteSystem to_rewrite_system(const PresentationSchema& schema);

/// Parse the line-oriented presentation format:
///
///   monoid: pi_2
///   alphabet: a b c
///   param: i >= 1
///   rule: (a b^i c)^2 -> 1
///
/// Comments start with ';'. `1` denotes the empty word, `^i` the shared
/// parameter, and `(...)^k` k-fold repetition. Throws ParseError with the
/// offending line number.
PresentationSchema parse_presentation(const std::string& text);

std::string serialize(const PresentationSchema& schema);

/// Parse a concrete word in the same literal syntax as rule sides, without
/// the parameter. `1` or the empty string denote the empty word.
Word parse_word(const Alphabet& alphabet, const std::string& text);

/// Inverse of parse_word: single-letter alphabets print words verbatim,
/// otherwise letters are printed as space-separated generator names.
std::string display_word(const Alphabet& alphabet, const Word& w);

/// Render a pattern in file syntax, factoring whole-pattern repetition into
/// a parenthesized power and runs of one letter into literal powers.
std::string display_pattern(const ParamPattern& pattern, const Alphabet& alphabet,
                            const std::string& param_name);

}  // namespace speciallab
