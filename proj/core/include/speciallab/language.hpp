#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "speciallab/rewriting.hpp"
#include "speciallab/words.hpp"

namespace speciallab {

/// A word-problem query "u#v", asking whether u and the reversal of v name
/// the same monoid element. The right half is stored as written (reversed).
struct WpQuery {
  std::string raw;
  Word u;
  Word v_rev;
};

/// Parses "u#v" against the alphabet. Exactly one '#' must appear; both
/// halves may be empty.
WpQuery parse_wp_query(const Alphabet& alphabet, const std::string& raw);

/// Membership of the query in { u # rev(v) : u and v equal in the monoid },
/// decided by normal form comparison over the complete system.
bool wp_member(const CompleteSystem& cs, const WpQuery& query);

/// A context-free grammar over single-letter terminals. Nonterminal 0 is the
/// start symbol.
struct Grammar {
  struct Symbol {
    bool is_terminal;
    char terminal;
    std::size_t nonterminal;
  };
  struct Production {
    std::size_t lhs;
    std::vector<Symbol> rhs;
  };
  std::vector<std::string> nonterminals;
  std::vector<char> terminals;
  std::vector<Production> productions;
};

/// Builds a grammar for the instance language of a pattern: all words the
/// pattern produces as its parameter ranges over its admissible values.
/// Patterns with zero, one, or two parameter runs yield regular or linear
/// grammars; three or more synchronized runs have no context-free instance
/// language and raise NotContextFreeError.
Grammar export_lhs_grammar(const ParamPattern& pattern);

/// Renders a grammar as text: a "start:" line, then one production per line
/// with "EPS" for an empty right side.
std::string export_grammar(const Grammar& g);

/// Chomsky normal form with nonterminals packed into 64-bit masks.
struct CnfGrammar {
  struct Triple {
    std::size_t a;
    std::size_t b;
    std::size_t c;
  };
  std::size_t start = 0;
  bool start_nullable = false;
  std::vector<std::string> names;
  std::map<char, std::uint64_t> terminal_mask;
  std::vector<Triple> triples;
};

/// Converts to Chomsky normal form. Throws if the result needs more than 64
/// nonterminals.
CnfGrammar to_cnf(const Grammar& g);

/// CYK membership on the normal form.
bool grammar_member(const CnfGrammar& g, const Word& w);

/// Convenience overload converting to normal form first.
bool grammar_member(const Grammar& g, const Word& w);

/// Identity-class membership over one slice of words
/// (a b^{e_1} c)(a b^{e_2} c)...(a b^{e_n} c) with every exponent in
/// [1, e_bound]. `members` lists tuples equal to the identity, `expected`
/// lists the all-coordinates-equal tuples, both in lexicographic order.
struct SliceReport {
  int n = 0;
  int e_bound = 0;
  std::size_t tested = 0;
  std::vector<std::vector<int>> members;
  std::vector<std::vector<int>> expected;
  bool agreement = false;
};

/// Evaluates the slice against the complete system. The alphabet must
/// contain letters named a, b, c.
SliceReport enumerate_wp_slice(const CompleteSystem& cs, int n, int e_bound);

/// Context-freeness evidence for the monoid with defining relations
/// (a b^i c)^n = 1: a grammar for the relation left-hand sides when n <= 2,
/// a refuting identity-class slice when n > 2.
struct CfVerdict {
  int n = 0;
  bool context_free = false;
  std::string statement;
  std::optional<Grammar> grammar;
  std::optional<SliceReport> slice;
};

CfVerdict cf_verdict(int n, int e_bound = 4, int i_bound = 8);

}  // namespace speciallab
