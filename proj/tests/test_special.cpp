#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "speciallab/errors.hpp"
#include "speciallab/presentations.hpp"
#include "speciallab/rewriting.hpp"
#include "speciallab/special.hpp"

using namespace speciallab;

namespace {

CompleteSystem t2() { return CompleteSystem::certify(to_rewrite_system(make_pi(2)), 8); }

std::vector<Word> random_words(std::size_t count, std::size_t max_len, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, 2);
  std::vector<Word> out;
  for (std::size_t k = 0; k < count; ++k) {
    Word w;
    const std::size_t len = len_dist(rng);
    for (std::size_t j = 0; j < len; ++j) w += "abc"[letter_dist(rng)];
    out.push_back(std::move(w));
  }
  return out;
}

// Brute force: the shortest completion x with |x| <= bound such that the
// glued word reduces to the identity. Tries all words over the alphabet in
// length order.
std::optional<Word> shortest_completion(const RewriteSystem& sys, const Word& w, int bound,
                                        bool right) {
  std::vector<Word> layer{""};
  for (int len = 0; len <= bound; ++len) {
    for (const Word& x : layer) {
      const Word glued = right ? w + x : x + w;
      if (normal_form(sys, glued).empty()) return x;
    }
    std::vector<Word> next;
    for (const Word& x : layer)
      for (char c : {'a', 'b', 'c'}) next.push_back(x + c);
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("default witness bound doubles the longest instantiated left side") {
  const CompleteSystem cs = t2();
  // At the certification bound 8 the left side (a b^8 c)^2 has 20 letters.
  CHECK(default_witness_bound(cs) == 40);
}

TEST_CASE("one-sided and two-sided invertibility on T_2") {
  const CompleteSystem cs = t2();

  const auto right = is_right_invertible(cs, "a", 16);
  REQUIRE(right.has_value());
  CHECK(right->side == Side::Right);
  REQUIRE(right->right_witness.has_value());
  CHECK(*right->right_witness == "bcabc");
  CHECK_FALSE(right->left_witness.has_value());
  CHECK(right->search_bound == 16);
  CHECK_FALSE(is_left_invertible(cs, "a", 16).has_value());
  CHECK_FALSE(is_invertible(cs, "a", 16).has_value());

  const auto both = is_invertible(cs, "abc", 16);
  REQUIRE(both.has_value());
  CHECK(both->side == Side::TwoSided);
  CHECK(*both->right_witness == "abc");
  CHECK(*both->left_witness == "abc");

  // The identity inverts itself.
  const auto empty = is_invertible(cs, "", 16);
  REQUIRE(empty.has_value());
  CHECK(empty->right_witness->empty());

  // No left side begins or ends with b alone.
  CHECK_FALSE(is_right_invertible(cs, "b", 16).has_value());
  CHECK_FALSE(is_left_invertible(cs, "b", 16).has_value());

  CHECK_THROWS_AS(is_right_invertible(cs, "xyz", 16), Error);
}

TEST_CASE("witness search equals brute-force shortest completion") {
  const CompleteSystem cs = t2();
  const RewriteSystem& sys = cs.system();
  for (const Word& w : random_words(40, 4, 201)) {
    for (const bool right : {true, false}) {
      const auto oracle = shortest_completion(sys, w, 6, right);
      const auto found = right ? is_right_invertible(cs, w, 6) : is_left_invertible(cs, w, 6);
      REQUIRE(found.has_value() == oracle.has_value());
      if (!found) continue;
      const Word& witness = right ? *found->right_witness : *found->left_witness;
      // Same minimal length, and the returned witness verifies.
      CHECK(witness.size() == oracle->size());
      const Word glued = right ? w + witness : witness + w;
      CHECK(normal_form(sys, glued).empty());
    }
  }
}

TEST_CASE("witness search is deterministic and respects its budget") {
  const CompleteSystem cs = t2();
  const auto a = is_right_invertible(cs, "abcab", 16);
  const auto b = is_right_invertible(cs, "abcab", 16);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a->right_witness == *b->right_witness);
  CHECK_THROWS_AS(is_right_invertible(cs, "a", 16, 1), SearchBudgetError);
}

TEST_CASE("minimal factorization splits into minimal invertible factors") {
  const CompleteSystem cs = t2();
  for (int i = 1; i <= 5; ++i) {
    const Word block = "a" + Word(static_cast<std::size_t>(i), 'b') + "c";
    const auto f = minimal_factorization(cs, block + block, 16);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == block);
    CHECK(f.factors[1] == block);
  }

  const auto mixed = minimal_factorization(cs, "abcabbc", 16);
  CHECK(mixed.factors == std::vector<Word>{"abc", "abbc"});

  // Soundness on random invertible words: factors concatenate to the input,
  // each factor is invertible, and no proper non-empty prefix or suffix of a
  // factor is invertible (prefix minimality and its mirror).
  std::mt19937 rng(211);
  std::uniform_int_distribution<int> exp_dist(1, 4);
  std::uniform_int_distribution<int> count_dist(1, 4);
  // The longest sampled word is 4 blocks of 6 letters; its inverse is the
  // reversed block sequence, so 24 covers every witness.
  for (int k = 0; k < 25; ++k) {
    Word w;
    const int parts = count_dist(rng);
    for (int p = 0; p < parts; ++p)
      w += "a" + Word(static_cast<std::size_t>(exp_dist(rng)), 'b') + "c";
    const auto f = minimal_factorization(cs, w, 24);
    Word glued;
    for (const Word& factor : f.factors) {
      glued += factor;
      CHECK(is_invertible(cs, factor, 24).has_value());
      for (std::size_t cut = 1; cut < factor.size(); ++cut) {
        CHECK_FALSE(is_invertible(cs, factor.substr(0, cut), 24).has_value());
        CHECK_FALSE(is_invertible(cs, factor.substr(cut), 24).has_value());
      }
    }
    CHECK(glued == w);
  }

  CHECK_THROWS_AS(minimal_factorization(cs, "a", 16), Error);
  CHECK_THROWS_AS(minimal_factorization(cs, "ab", 16), Error);
}

TEST_CASE("lambda of T_2 is the single pattern a b^i c") {
  const CompleteSystem cs = t2();
  const MinimalWordSet lam = compute_lambda(cs, 40);
  REQUIRE(lam.patterns.size() == 1);
  CHECK(lam.patterns[0] == ParamPattern({{false, "a"}, {true, "b"}, {false, "c"}}, 1));
  CHECK(lam.concrete.empty());
  CHECK(lam.warnings.empty());
  CHECK(lam.inst_bound == 8);

  const BiprefixReport bp = check_biprefix(lam);
  CHECK(bp.ok);
  CHECK_FALSE(bp.counterexample.has_value());
}

TEST_CASE("lambda generalizes for each family member") {
  const CompleteSystem pi3 = CompleteSystem::certify(to_rewrite_system(make_pi(3)), 4);
  const MinimalWordSet lam3 = compute_lambda(pi3, 40);
  REQUIRE(lam3.patterns.size() == 1);
  CHECK(lam3.patterns[0] == ParamPattern({{false, "a"}, {true, "b"}, {false, "c"}}, 1));

  const CompleteSystem mn2 = CompleteSystem::certify(to_rewrite_system(make_mn(2)), 6);
  const MinimalWordSet lamm = compute_lambda(mn2, 32);
  REQUIRE(lamm.patterns.size() == 3);
  const Alphabet& alpha = mn2.system().alphabet();
  for (int j = 1; j <= 3; ++j) {
    const char bj = *alpha.letter_named("b_" + std::to_string(j));
    const ParamPattern expect({{false, "a"}, {true, std::string(1, bj)}, {false, "c"}}, 1);
    CHECK(lamm.patterns[static_cast<std::size_t>(j - 1)] == expect);
  }
  CHECK(lamm.concrete.empty());
  CHECK(lamm.warnings.empty());
}

TEST_CASE("biprefix violations are caught on synthetic sets") {
  MinimalWordSet prefix_clash;
  prefix_clash.inst_bound = 4;
  prefix_clash.patterns = {ParamPattern::constant("ab"), ParamPattern::constant("abc")};
  const auto p = check_biprefix(prefix_clash);
  CHECK_FALSE(p.ok);
  REQUIRE(p.counterexample.has_value());
  CHECK(p.counterexample->first == "ab");
  CHECK(p.counterexample->second == "abc");

  MinimalWordSet suffix_clash;
  suffix_clash.inst_bound = 4;
  suffix_clash.patterns = {ParamPattern::constant("bc"), ParamPattern::constant("abc")};
  CHECK_FALSE(check_biprefix(suffix_clash).ok);

  // Parameterized overlap: b^i a against the fixed word ba.
  MinimalWordSet param_clash;
  param_clash.inst_bound = 3;
  param_clash.patterns = {ParamPattern({{true, "b"}, {false, "a"}}, 1)};
  param_clash.concrete = {"bba"};
  CHECK_FALSE(check_biprefix(param_clash).ok);
}

TEST_CASE("decoding over lambda is greedy and total on code words") {
  const CompleteSystem cs = t2();
  const MinimalWordSet lam = compute_lambda(cs, 40);

  const auto d = decode_over_lambda(lam, "abcabbc");
  REQUIRE(d.has_value());
  REQUIRE(d->size() == 2);
  CHECK((*d)[0].param == 1);
  CHECK((*d)[0].word == "abc");
  CHECK((*d)[1].param == 2);
  CHECK((*d)[1].word == "abbc");

  CHECK(decode_over_lambda(lam, "")->empty());
  CHECK_FALSE(decode_over_lambda(lam, "ab").has_value());
  CHECK_FALSE(decode_over_lambda(lam, "abca").has_value());
  CHECK_FALSE(decode_over_lambda(lam, "babc").has_value());

  // Decode-then-concatenate round-trips on sampled code-star words.
  std::mt19937 rng(221);
  std::uniform_int_distribution<int> exp_dist(1, 6);
  for (int k = 0; k < 200; ++k) {
    Word w;
    while (w.size() < 20) {
      const int i = exp_dist(rng);
      w += "a" + Word(static_cast<std::size_t>(i), 'b') + "c";
    }
    const auto factors = decode_over_lambda(lam, w);
    REQUIRE(factors.has_value());
    Word glued;
    for (const auto& f : *factors) {
      CHECK(f.from_pattern);
      CHECK(lam.patterns[f.index].instantiate(f.param) == f.word);
      glued += f.word;
    }
    CHECK(glued == w);
  }
}

TEST_CASE("invertibility coincides with decodability on irreducible words") {
  const CompleteSystem cs = t2();
  const MinimalWordSet lam = compute_lambda(cs, 40);
  std::size_t invertible_seen = 0;
  std::set<Word> seen;
  for (const Word& raw : random_words(300, 12, 231)) {
    const Word w = normal_form(cs.system(), raw);
    if (!seen.insert(w).second) continue;
    const bool by_witness = is_invertible(cs, w, 16).has_value();
    const bool by_decode = decode_over_lambda(lam, w).has_value();
    CHECK(by_witness == by_decode);
    invertible_seen += by_witness ? 1 : 0;
  }
  CHECK(invertible_seen >= 1);
}

TEST_CASE("units presentation of T_2") {
  const CompleteSystem cs = t2();
  const MinimalWordSet lam = compute_lambda(cs, 40);
  const UnitsPresentation up = units_presentation(cs, lam);

  CHECK(up.param_name == "i");
  CHECK(up.param_min == 1);
  REQUIRE(up.generators.size() == 1);
  CHECK(up.generators[0].parameterized);
  CHECK(up.generators[0].base_name == "x");
  REQUIRE(up.relators.size() == cs.system().rules().size());
  const UnitsRelator& rel = up.relators[0];
  CHECK(rel.parameterized);
  REQUIRE(rel.lhs.size() == 2);
  CHECK(rel.lhs[0].generator == 0);
  CHECK_FALSE(rel.lhs[0].param.has_value());
  CHECK(rel.lhs[0] == rel.lhs[1]);
  CHECK(rel.rhs.empty());
  CHECK(display_generator(up, rel.lhs[0]) == "x_i");
  CHECK(display_relator(up, rel) == "x_i^2 = 1");

  const UnitsClassification cls = classify_units(up);
  CHECK(cls.recognized);
  CHECK_FALSE(cls.finitely_generated);
  CHECK(cls.description == "free product of copies of C2, one per i >= 1; not finitely generated");
}

TEST_CASE("units presentations across the families") {
  const CompleteSystem pi3 = CompleteSystem::certify(to_rewrite_system(make_pi(3)), 4);
  const UnitsPresentation up3 = units_presentation(pi3, compute_lambda(pi3, 40));
  REQUIRE(up3.relators.size() == 1);
  CHECK(display_relator(up3, up3.relators[0]) == "x_i^3 = 1");
  CHECK(classify_units(up3).description ==
        "free product of copies of C3, one per i >= 1; not finitely generated");

  const CompleteSystem pi1 = CompleteSystem::certify(to_rewrite_system(make_pi(1)), 8);
  const UnitsPresentation up1 = units_presentation(pi1, compute_lambda(pi1, 40));
  REQUIRE(up1.relators.size() == 1);
  CHECK(display_relator(up1, up1.relators[0]) == "x_i = 1");
  const UnitsClassification cls1 = classify_units(up1);
  CHECK(cls1.recognized);
  CHECK(cls1.finitely_generated);
  CHECK(cls1.description == "trivial group (every generator equals the identity)");

  const CompleteSystem mn2 = CompleteSystem::certify(to_rewrite_system(make_mn(2)), 6);
  const UnitsPresentation upm = units_presentation(mn2, compute_lambda(mn2, 32));
  REQUIRE(upm.generators.size() == 3);
  REQUIRE(upm.relators.size() == 9);
  CHECK(display_relator(upm, upm.relators[0]) == "x1_t^2 = 1");
  CHECK(display_relator(upm, upm.relators[1]) == "x1_t x2_t = x3_t");
  const UnitsClassification clsm = classify_units(upm);
  CHECK(clsm.recognized);
  CHECK_FALSE(clsm.finitely_generated);
  CHECK(clsm.description ==
        "free product of copies of C2 x C2, one per t >= 1; not finitely generated");
}

TEST_CASE("units of finitely presented special monoids") {
  // One defining word (ab)^2: the units form C2.
  const RewriteSystem one(Alphabet::from_letters("ab"),
                          {Rule(ParamPattern::constant("abab"), ParamPattern())},
                          "one-relator");
  const CompleteSystem cs = CompleteSystem::certify(one, 1);
  const MinimalWordSet lam = compute_lambda(cs, 8);
  REQUIRE(lam.patterns.size() == 1);
  CHECK(lam.patterns[0] == ParamPattern::constant("ab"));
  const UnitsPresentation up = units_presentation(cs, lam);
  REQUIRE(up.generators.size() == 1);
  CHECK_FALSE(up.generators[0].parameterized);
  CHECK(display_relator(up, up.relators[0]) == "x^2 = 1");
  const UnitsClassification cls = classify_units(up);
  CHECK(cls.recognized);
  CHECK(cls.finitely_generated);
  CHECK(cls.description == "C2");

  // Two independent defining words: a finitely generated free product.
  const RewriteSystem two(Alphabet::from_letters("abcd"),
                          {Rule(ParamPattern::constant("abab"), ParamPattern()),
                           Rule(ParamPattern::constant("cdcd"), ParamPattern())},
                          "two-relator");
  const CompleteSystem cs2 = CompleteSystem::certify(two, 1);
  const UnitsPresentation up2 = units_presentation(cs2, compute_lambda(cs2, 8));
  REQUIRE(up2.generators.size() == 2);
  CHECK(display_relator(up2, up2.relators[0]) == "x1^2 = 1");
  CHECK(display_relator(up2, up2.relators[1]) == "x2^2 = 1");
  const UnitsClassification cls2 = classify_units(up2);
  CHECK(cls2.recognized);
  CHECK(cls2.finitely_generated);
  CHECK(cls2.description == "free product of 2 copies of C2");
}

TEST_CASE("units extraction refuses a non-code lambda") {
  const CompleteSystem cs = t2();
  MinimalWordSet bad;
  bad.inst_bound = 4;
  bad.patterns = {ParamPattern::constant("ab"), ParamPattern::constant("abc")};
  CHECK_THROWS_AS(units_presentation(cs, bad), Error);
}

TEST_CASE("lambda requires invertible rule sides") {
  // In the monoid with aba = a the letter a is not invertible, so the rule
  // sides admit no minimal invertible factorization.
  const RewriteSystem sys(Alphabet::from_letters("ab"),
                          {Rule(ParamPattern::constant("aba"), ParamPattern::constant("a"))},
                          "toy");
  const CompleteSystem cs = CompleteSystem::certify(sys, 1);
  CHECK_THROWS_AS(compute_lambda(cs, 8), Error);
}

TEST_CASE("unrecognized relator shapes stay unclassified") {
  UnitsPresentation up;
  up.lambda.inst_bound = 0;
  up.param_name = "i";
  up.param_min = 1;
  up.generators = {{true, 0, false, "x1"}, {true, 1, false, "x2"}};
  UnitsRelator rel;
  rel.parameterized = false;
  rel.lhs = {RelatorSymbol{0, std::nullopt}, RelatorSymbol{1, std::nullopt}};
  up.relators = {rel};
  const UnitsClassification cls = classify_units(up);
  CHECK_FALSE(cls.recognized);
  CHECK(cls.description == "unclassified");
}
