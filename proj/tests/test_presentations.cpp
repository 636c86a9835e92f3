#include <set>
#include <vector>

#include "doctest.h"
#include "speciallab/errors.hpp"
#include "speciallab/presentations.hpp"
#include "speciallab/rewriting.hpp"

using namespace speciallab;

TEST_CASE("make_pi builds (a b^i c)^n = 1") {
  for (int n = 1; n <= 4; ++n) {
    const PresentationSchema schema = make_pi(n);
    CHECK(schema.name() == "pi_" + std::to_string(n));
    CHECK(schema.param_name() == "i");
    CHECK(schema.param_min() == 1);
    CHECK(schema.alphabet().display() == "a b c");
    CHECK(schema.is_special());
    REQUIRE(schema.relations().size() == 1);
    const Relation& rel = schema.relations()[0];
    CHECK(rel.rhs.empty());
    CHECK(rel.lhs.param_segment_count() == static_cast<std::size_t>(n));
    for (int i = 1; i <= 6; ++i) {
      Word block = "a" + Word(static_cast<std::size_t>(i), 'b') + "c";
      Word expect;
      for (int k = 0; k < n; ++k) expect += block;
      CHECK(rel.lhs.instantiate(i) == expect);
    }
  }
  CHECK_THROWS_AS(make_pi(0), Error);
}

TEST_CASE("make_mn writes out the boolean-cube multiplication table") {
  const PresentationSchema schema = make_mn(2);
  CHECK(schema.name() == "mn_2");
  CHECK(schema.param_name() == "t");
  CHECK(schema.alphabet().display() == "a b_1 b_2 b_3 c");
  CHECK_FALSE(schema.is_special());

  // One relation per ordered pair of non-identity elements of C2 x C2.
  REQUIRE(schema.relations().size() == 9);
  const GroupTable g = GroupTable::boolean_cube(2);
  const Alphabet& alpha = schema.alphabet();
  auto block = [&](int j, int t) {
    Word w(1, *alpha.letter_named("a"));
    w += Word(static_cast<std::size_t>(t), *alpha.letter_named("b_" + std::to_string(j)));
    w += *alpha.letter_named("c");
    return w;
  };
  std::size_t r = 0;
  std::size_t empty_rhs = 0;
  std::set<std::set<int>> unordered_shapes;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j, ++r) {
      const Relation& rel = schema.relations()[r];
      const int k = g.product(i, j);
      for (int t = 1; t <= 4; ++t) {
        CHECK(rel.lhs.instantiate(t) == block(i, t) + block(j, t));
        if (k == 0)
          CHECK(rel.rhs.empty());
        else
          CHECK(rel.rhs.instantiate(t) == block(k, t));
      }
      if (rel.rhs.empty()) ++empty_rhs;
      unordered_shapes.insert({i, j});
    }
  }
  // The three diagonal pairs hit the identity.
  CHECK(empty_rhs == 3);
  // Distinct unordered pairs: three diagonal plus three mixed.
  CHECK(unordered_shapes.size() == 6);

  CHECK(make_mn(1).relations().size() == 1);
  CHECK(make_mn(3).relations().size() == 49);
  CHECK_THROWS_AS(make_mn(0), Error);
  CHECK_THROWS_AS(make_mn(5), Error);
}

TEST_CASE("make_mn(1) is pi_2 written over renamed letters") {
  const RewriteSystem mn = to_rewrite_system(make_mn(1));
  const RewriteSystem pi = to_rewrite_system(make_pi(2));
  REQUIRE(mn.rules().size() == 1);
  REQUIRE(pi.rules().size() == 1);
  // b_1 receives the character 'b', so the instances coincide literally.
  for (int t = 1; t <= 6; ++t) {
    CHECK(mn.rules()[0].lhs.instantiate(t) == pi.rules()[0].lhs.instantiate(t));
    CHECK(mn.rules()[0].rhs.empty());
  }
}

TEST_CASE("group tables enforce the group laws") {
  // C3.
  const GroupTable c3(3, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  CHECK(c3.order() == 3);
  CHECK(c3.identity() == 0);
  CHECK(c3.product(1, 2) == 0);
  CHECK(c3.inverse(1) == 2);
  CHECK(c3.element_order(1) == 3);
  CHECK(c3.is_abelian());
  CHECK_FALSE(c3.is_elementary_abelian_2());

  for (int n = 0; n <= 4; ++n) {
    const GroupTable g = GroupTable::boolean_cube(n);
    CHECK(g.order() == (std::size_t{1} << n));
    CHECK(g.is_abelian());
    CHECK(g.is_elementary_abelian_2());
    for (std::size_t x = 0; x < g.order(); ++x) {
      CHECK(g.product(0, x) == static_cast<int>(x));
      CHECK(g.inverse(x) == static_cast<int>(x));
      if (x != 0) CHECK(g.element_order(x) == 2);
    }
  }

  // Identity must be element 0.
  CHECK_THROWS_AS(GroupTable(2, {1, 0, 0, 1}), Error);
  // Missing inverses.
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}), Error);
  // Fails associativity: (1*1)*2 = 2 but 1*(1*2) = 0.
  CHECK_THROWS_AS(GroupTable(3, {0, 1, 2, 1, 0, 1, 2, 1, 0}), Error);
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1}), Error);
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 7}), Error);
}

TEST_CASE("presentation files parse and serialize round-trip") {
  for (const PresentationSchema& schema :
       {make_pi(1), make_pi(2), make_pi(3), make_mn(1), make_mn(2)}) {
    const std::string text = serialize(schema);
    const PresentationSchema back = parse_presentation(text);
    CHECK(back == schema);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("parsing a hand-written presentation") {
  const std::string text =
      "; the T_2 system\n"
      "monoid: sample\n"
      "alphabet: a b c\n"
      "param: i >= 1\n"
      "rule: (a b^i c)^2 -> 1\n";
  const PresentationSchema schema = parse_presentation(text);
  CHECK(schema.name() == "sample");
  CHECK(schema.alphabet().display() == "a b c");
  CHECK(schema.param_min() == 1);
  REQUIRE(schema.relations().size() == 1);
  CHECK(schema.relations()[0].lhs.instantiate(2) == "abbcabbc");
  CHECK(schema.relations()[0].rhs.empty());
  CHECK_FALSE(schema == make_pi(2));  // names differ
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_presentation(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("alphabet: a b\n") == 1);  // monoid must come first
  CHECK(line_of("monoid: m\nmonoid: m\n") == 2);
  CHECK(line_of("monoid: m\nalphabet: a a\n") == 2);
  CHECK(line_of("monoid: m\nalphabet: a b\nrule: ab -> abc\n") == 3);  // not length-reducing
  CHECK(line_of("monoid: m\nalphabet: a b\nrule: ad -> 1\n") == 3);    // unknown letter
  CHECK(line_of("monoid: m\nalphabet: a b\nparam: i >= 0\n") == 3);
  CHECK(line_of("monoid: m\nalphabet: a b\nrule: a^j b -> 1\n") == 3);  // undeclared parameter
  CHECK(line_of("monoid: m\nalphabet: a b\nbogus: x\n") == 3);
  CHECK(line_of("monoid: m\nalphabet: a b\nparam: i >= 1\nrule: (a^i b -> 1\n") == 4);
  CHECK(line_of("monoid: m\nalphabet: a b\nrule: ab -> 1 extra\n") == 3);
}

TEST_CASE("word parsing and display") {
  const Alphabet alpha = Alphabet::from_letters("abc");
  CHECK(parse_word(alpha, "abc") == "abc");
  CHECK(parse_word(alpha, "a b c") == "abc");
  CHECK(parse_word(alpha, "ab^3c") == "abbbc");
  CHECK(parse_word(alpha, "(ab)^2") == "abab");
  CHECK(parse_word(alpha, "(a b^2 c)^2") == "abbcabbc");
  CHECK(parse_word(alpha, "1") == "");
  CHECK(parse_word(alpha, "") == "");
  CHECK_THROWS_AS(parse_word(alpha, "abd"), ParseError);
  CHECK_THROWS_AS(parse_word(alpha, "a^i"), ParseError);
  CHECK_THROWS_AS(parse_word(alpha, "a^0"), ParseError);

  CHECK(display_word(alpha, "") == "1");
  CHECK(display_word(alpha, "abc") == "abc");

  const Alphabet multi({"a", "b_1", "b_2", "c"});
  const Word w = parse_word(multi, "a b_1^2 c");
  CHECK(w.size() == 4);
  CHECK(display_word(multi, w) == "a b_1 b_1 c");
  CHECK(parse_word(multi, display_word(multi, w)) == w);
  CHECK(parse_word(multi, "a b_2 c") != parse_word(multi, "a b_1 c"));
}

TEST_CASE("pattern display uses runs and periods") {
  const Alphabet alpha = Alphabet::from_letters("abc");
  const ParamPattern abic({{false, "a"}, {true, "b"}, {false, "c"}}, 1);
  CHECK(display_pattern(abic, alpha, "i") == "a b^i c");
  const ParamPattern sq(
      {{false, "a"}, {true, "b"}, {false, "ca"}, {true, "b"}, {false, "c"}}, 1);
  CHECK(display_pattern(sq, alpha, "i") == "(a b^i c)^2");
  CHECK(display_pattern(ParamPattern::constant("aaaa"), alpha, "i") == "a^4");
  CHECK(display_pattern(ParamPattern::constant("abab"), alpha, "i") == "(a b)^2");
  CHECK(display_pattern(ParamPattern(), alpha, "i") == "1");
}

TEST_CASE("schemas reject malformed input") {
  const Alphabet alpha = Alphabet::from_letters("ab");
  const ParamPattern lhs({{false, "a"}, {true, "b"}, {false, "a"}}, 1);
  CHECK_THROWS_AS(PresentationSchema(alpha, {Relation{lhs, ParamPattern()}}, ""), Error);
  CHECK_THROWS_AS(PresentationSchema(alpha, {Relation{lhs, ParamPattern()}}, "m", "ii"), Error);
  CHECK_THROWS_AS(PresentationSchema(alpha, {Relation{lhs, ParamPattern()}}, "m", "i", 0), Error);
  // Relation orientation: left side strictly longer.
  CHECK_THROWS_AS(
      PresentationSchema(alpha, {Relation{ParamPattern::constant("a"), ParamPattern::constant("ab")}},
                         "m"),
      Error);
  // Parameter floor of the relation must match the schema's.
  const ParamPattern floor2({{false, "a"}, {true, "b"}, {false, "a"}}, 2);
  CHECK_THROWS_AS(PresentationSchema(alpha, {Relation{floor2, ParamPattern()}}, "m", "i", 1),
                  Error);
  CHECK_NOTHROW(PresentationSchema(alpha, {Relation{floor2, ParamPattern()}}, "m", "i", 2));
}

TEST_CASE("to_rewrite_system preserves every relation") {
  const PresentationSchema schema = make_mn(2);
  const RewriteSystem sys = to_rewrite_system(schema);
  CHECK(sys.name() == schema.name());
  CHECK(sys.param_name() == schema.param_name());
  CHECK(sys.alphabet() == schema.alphabet());
  REQUIRE(sys.rules().size() == schema.relations().size());
  for (std::size_t k = 0; k < sys.rules().size(); ++k) {
    CHECK(sys.rules()[k].lhs == schema.relations()[k].lhs);
    CHECK(sys.rules()[k].rhs == schema.relations()[k].rhs);
  }
}
