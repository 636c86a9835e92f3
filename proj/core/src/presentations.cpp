#include "speciallab/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

#include "speciallab/errors.hpp"

namespace speciallab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void validate_pattern_letters(const Alphabet& alphabet, const ParamPattern& p) {
  const auto letters = p.letters();
  alphabet.validate(Word(letters.begin(), letters.end()));
}

}  // namespace

PresentationSchema::PresentationSchema(Alphabet alphabet, std::vector<Relation> relations,
                                       std::string name, std::string param_name, int param_min)
    : alphabet_(std::move(alphabet)),
      relations_(std::move(relations)),
      name_(std::move(name)),
      param_name_(std::move(param_name)),
      param_min_(param_min) {
  if (name_.empty()) throw Error("presentation name must be nonempty");
  if (param_name_.size() != 1 || !std::isalpha(static_cast<unsigned char>(param_name_[0])))
    throw Error("parameter name must be a single letter");
  if (param_min_ < 1) throw Error("parameter minimum must be at least 1");
  for (const Relation& rel : relations_) {
    validate_pattern_letters(alphabet_, rel.lhs);
    validate_pattern_letters(alphabet_, rel.rhs);
    if (rel.lhs.has_param() && rel.lhs.param_min() != param_min_)
      throw Error("relation disagrees with the declared parameter minimum");
    Rule probe(rel.lhs, rel.rhs);  // orientation and length reduction
    (void)probe;
  }
}

bool PresentationSchema::is_special() const {
  return std::all_of(relations_.begin(), relations_.end(),
                     [](const Relation& r) { return r.rhs.empty(); });
}

GroupTable::GroupTable(std::size_t order, std::vector<int> products)
    : order_(order), products_(std::move(products)) {
  if (order_ == 0) throw Error("group order must be positive");
  if (products_.size() != order_ * order_) throw Error("group table has the wrong size");
  for (int v : products_)
    if (v < 0 || static_cast<std::size_t>(v) >= order_)
      throw Error("group table entry out of range");
  const int n = static_cast<int>(order_);
  for (int x = 0; x < n; ++x)
    if (product(0, x) != x || product(x, 0) != x)
      throw Error("group table: element 0 is not an identity");
  for (int x = 0; x < n; ++x) {
    bool inv = false;
    for (int y = 0; y < n && !inv; ++y) inv = product(x, y) == 0 && product(y, x) == 0;
    if (!inv) throw Error("group table: element without inverse");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (product(product(x, y), z) != product(x, product(y, z)))
          throw Error("group table is not associative");
}

GroupTable GroupTable::boolean_cube(int n) {
  if (n < 0 || n > 16) throw Error("boolean cube dimension out of range");
  const std::size_t m = std::size_t{1} << n;
  std::vector<int> t(m * m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) t[x * m + y] = static_cast<int>(x ^ y);
  return GroupTable(m, std::move(t));
}

int GroupTable::product(int x, int y) const {
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= order_ ||
      static_cast<std::size_t>(y) >= order_)
    throw Error("group element index out of range");
  return products_[static_cast<std::size_t>(x) * order_ + static_cast<std::size_t>(y)];
}

int GroupTable::inverse(int x) const {
  for (std::size_t y = 0; y < order_; ++y)
    if (product(x, static_cast<int>(y)) == 0) return static_cast<int>(y);
  throw Error("group element index out of range");
}

int GroupTable::element_order(int x) const {
  int acc = x;
  int k = 1;
  while (acc != 0) {
    acc = product(acc, x);
    ++k;
    if (static_cast<std::size_t>(k) > order_) throw Error("group table is corrupt");
  }
  return k;
}

bool GroupTable::is_abelian() const {
  const int n = static_cast<int>(order_);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (product(x, y) != product(y, x)) return false;
  return true;
}

bool GroupTable::is_elementary_abelian_2() const {
  const int n = static_cast<int>(order_);
  for (int x = 1; x < n; ++x)
    if (product(x, x) != 0) return false;
  return is_abelian();
}

PresentationSchema make_pi(int n) {
  if (n < 1) throw Error("the pi family requires n >= 1");
  Alphabet alphabet(std::vector<std::string>{"a", "b", "c"});
  std::vector<ParamPattern::Segment> segs;
  for (int k = 0; k < n; ++k) {
    segs.push_back({false, "a"});
    segs.push_back({true, "b"});
    segs.push_back({false, "c"});
  }
  std::vector<Relation> rels;
  rels.push_back({ParamPattern(std::move(segs), 1), ParamPattern()});
  return PresentationSchema(std::move(alphabet), std::move(rels), "pi_" + std::to_string(n), "i",
                            1);
}

PresentationSchema make_mn(int n) {
  if (n < 1 || n > 4) throw Error("the mn family requires 1 <= n <= 4");
  const GroupTable g = GroupTable::boolean_cube(n);
  const int m = static_cast<int>(g.order());

  std::vector<std::string> names;
  names.push_back("a");
  for (int j = 1; j < m; ++j) names.push_back("b_" + std::to_string(j));
  names.push_back("c");
  Alphabet alphabet(names);

  const char la = *alphabet.letter_named("a");
  const char lc = *alphabet.letter_named("c");
  auto factor = [&](int j) {
    std::vector<ParamPattern::Segment> segs;
    segs.push_back({false, std::string(1, la)});
    segs.push_back({true, std::string(1, *alphabet.letter_named("b_" + std::to_string(j)))});
    segs.push_back({false, std::string(1, lc)});
    return segs;
  };

  std::vector<Relation> rels;
  for (int i = 1; i < m; ++i) {
    for (int j = 1; j < m; ++j) {
      auto lhs_segs = factor(i);
      auto tail = factor(j);
      lhs_segs.insert(lhs_segs.end(), tail.begin(), tail.end());
      const int k = g.product(i, j);
      ParamPattern rhs = k == 0 ? ParamPattern() : ParamPattern(factor(k), 1);
      rels.push_back({ParamPattern(std::move(lhs_segs), 1), std::move(rhs)});
    }
  }
  return PresentationSchema(std::move(alphabet), std::move(rels), "mn_" + std::to_string(n), "t",
                            1);
}

RewriteSystem to_rewrite_system(const PresentationSchema& schema) {
  std::vector<Rule> rules;
  rules.reserve(schema.relations().size());
  for (const Relation& rel : schema.relations()) rules.emplace_back(rel.lhs, rel.rhs);
  return RewriteSystem(schema.alphabet(), std::move(rules), schema.name(), schema.param_name());
}

namespace {

struct Token {
  enum Kind { Name, Int, Caret, LParen, RParen, Arrow } kind;
  std::string text;
  long value = 0;
};

std::vector<Token> lex(const std::string& s, int line_no) {
  std::vector<Token> out;
  auto name_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto name_cont = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (name_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && name_cont(s[j])) ++j;
      out.push_back({Token::Name, s.substr(i, j - i), 0});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      Token t{Token::Int, s.substr(i, j - i), 0};
      try {
        t.value = std::stol(t.text);
      } catch (...) {
        throw ParseError(line_no, "integer literal out of range");
      }
      out.push_back(std::move(t));
      i = j;
    } else if (c == '^') {
      out.push_back({Token::Caret, "^", 0});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::LParen, "(", 0});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::RParen, ")", 0});
      ++i;
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Arrow, "->", 0});
      i += 2;
    } else {
      throw ParseError(line_no, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

struct Atom {
  char letter;
  bool is_param;
  bool operator==(const Atom&) const = default;
};

struct Cursor {
  const std::vector<Token>& toks;
  std::size_t pos;
  int line;
  bool done() const { return pos >= toks.size(); }
  const Token& peek() const { return toks[pos]; }
};

std::vector<Atom> resolve_name(const std::string& name, const Alphabet& alphabet, int line) {
  if (auto l = alphabet.letter_named(name)) return {{*l, false}};
  std::vector<Atom> atoms;
  for (char c : name) {
    auto l = alphabet.letter_named(std::string(1, c));
    if (!l) throw ParseError(line, "unknown generator '" + name + "'");
    atoms.push_back({*l, false});
  }
  return atoms;
}

// cur sits just past a '^' whose base atom is `base`; appends the expansion.
void apply_exponent(Cursor& cur, const std::string& param_name, bool allow_param, Atom base,
                    std::vector<Atom>& out) {
  if (cur.done()) throw ParseError(cur.line, "dangling '^'");
  const Token& e = cur.peek();
  if (e.kind == Token::Int) {
    ++cur.pos;
    if (e.value < 1) throw ParseError(cur.line, "a repeat count must be at least 1");
    out.insert(out.end(), static_cast<std::size_t>(e.value), base);
  } else if (e.kind == Token::Name) {
    if (!allow_param) throw ParseError(cur.line, "parameter not allowed in a concrete word");
    if (e.text != param_name)
      throw ParseError(cur.line, "exponent must be an integer or the parameter '" + param_name +
                                     "', got '" + e.text + "'");
    ++cur.pos;
    out.push_back({base.letter, true});
  } else {
    throw ParseError(cur.line, "exponent must be an integer or the parameter");
  }
}

std::vector<Atom> parse_items(Cursor& cur, const Alphabet& alphabet,
                              const std::string& param_name, bool allow_param) {
  std::vector<Atom> out;
  while (!cur.done()) {
    const Token t = cur.peek();
    if (t.kind == Token::RParen || t.kind == Token::Arrow) break;
    if (t.kind == Token::Name) {
      ++cur.pos;
      std::vector<Atom> atoms = resolve_name(t.text, alphabet, cur.line);
      if (!cur.done() && cur.peek().kind == Token::Caret) {
        ++cur.pos;
        const Atom base = atoms.back();
        atoms.pop_back();
        apply_exponent(cur, param_name, allow_param, base, atoms);
      }
      out.insert(out.end(), atoms.begin(), atoms.end());
    } else if (t.kind == Token::Int) {
      if (t.value != 1) throw ParseError(cur.line, "unexpected integer '" + t.text + "'");
      ++cur.pos;
      if (!cur.done() && cur.peek().kind == Token::Caret)
        throw ParseError(cur.line, "the empty word takes no exponent");
    } else if (t.kind == Token::LParen) {
      ++cur.pos;
      std::vector<Atom> group = parse_items(cur, alphabet, param_name, allow_param);
      if (cur.done() || cur.peek().kind != Token::RParen)
        throw ParseError(cur.line, "missing ')'");
      ++cur.pos;
      long k = 1;
      if (!cur.done() && cur.peek().kind == Token::Caret) {
        ++cur.pos;
        if (cur.done() || cur.peek().kind != Token::Int)
          throw ParseError(cur.line, "a group exponent must be a literal integer");
        k = cur.peek().value;
        ++cur.pos;
        if (k < 1) throw ParseError(cur.line, "a repeat count must be at least 1");
      }
      for (long r = 0; r < k; ++r) out.insert(out.end(), group.begin(), group.end());
    } else {
      throw ParseError(cur.line, "unexpected token '" + t.text + "'");
    }
  }
  return out;
}

ParamPattern atoms_to_pattern(const std::vector<Atom>& atoms, int param_min, int line) {
  std::vector<ParamPattern::Segment> segs;
  std::string pending;
  for (const Atom& a : atoms) {
    if (a.is_param) {
      if (!pending.empty()) {
        segs.push_back({false, std::move(pending)});
        pending.clear();
      }
      segs.push_back({true, std::string(1, a.letter)});
    } else {
      pending.push_back(a.letter);
    }
  }
  if (!pending.empty()) segs.push_back({false, std::move(pending)});
  if (segs.empty()) return ParamPattern();
  try {
    return ParamPattern(std::move(segs), param_min);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

PresentationSchema parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<std::string> name;
  std::optional<Alphabet> alphabet;
  std::string param_name = "i";
  int param_min = 1;
  bool saw_param = false;
  std::vector<Relation> relations;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto sc = line.find(';'); sc != std::string::npos) line.erase(sc);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(line_no, "expected '<field>: ...' with field monoid/alphabet/param/rule");
    const std::string field = trim(line.substr(0, colon));
    const std::string rest = trim(line.substr(colon + 1));

    if (field == "monoid") {
      if (name) throw ParseError(line_no, "duplicate monoid line");
      if (alphabet) throw ParseError(line_no, "monoid line must come before the alphabet");
      if (rest.empty()) throw ParseError(line_no, "monoid name must be nonempty");
      name = rest;
    } else if (field == "alphabet") {
      if (!name) throw ParseError(line_no, "alphabet line before monoid line");
      if (alphabet) throw ParseError(line_no, "duplicate alphabet line");
      const auto names = split_ws(rest);
      if (names.empty()) throw ParseError(line_no, "alphabet must be nonempty");
      try {
        alphabet.emplace(names);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (field == "param") {
      if (!alphabet) throw ParseError(line_no, "param line before alphabet line");
      if (saw_param) throw ParseError(line_no, "duplicate param line");
      if (!relations.empty()) throw ParseError(line_no, "param line must come before rules");
      const auto parts = split_ws(rest);
      if (parts.size() != 3 || parts[1] != ">=")
        throw ParseError(line_no, "expected 'param: <letter> >= <min>'");
      if (parts[0].size() != 1 || !std::isalpha(static_cast<unsigned char>(parts[0][0])))
        throw ParseError(line_no, "parameter name must be a single letter");
      param_name = parts[0];
      try {
        param_min = std::stoi(parts[2]);
      } catch (...) {
        throw ParseError(line_no, "parameter minimum must be an integer");
      }
      if (param_min < 1) throw ParseError(line_no, "parameter minimum must be at least 1");
      saw_param = true;
    } else if (field == "rule") {
      if (!alphabet) throw ParseError(line_no, "rule line before alphabet line");
      const auto toks = lex(rest, line_no);
      Cursor cur{toks, 0, line_no};
      const auto lhs_atoms = parse_items(cur, *alphabet, param_name, true);
      if (cur.done() || cur.peek().kind != Token::Arrow)
        throw ParseError(line_no, "expected '->' in rule");
      ++cur.pos;
      const auto rhs_atoms = parse_items(cur, *alphabet, param_name, true);
      if (!cur.done()) throw ParseError(line_no, "trailing tokens after rule");
      ParamPattern lhs = atoms_to_pattern(lhs_atoms, param_min, line_no);
      ParamPattern rhs = atoms_to_pattern(rhs_atoms, param_min, line_no);
      try {
        Rule probe(lhs, rhs);
        (void)probe;
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
      relations.push_back({std::move(lhs), std::move(rhs)});
    } else {
      throw ParseError(line_no, "unknown field '" + field + "'");
    }
  }

  if (!name) throw ParseError(line_no, "missing monoid line");
  if (!alphabet) throw ParseError(line_no, "missing alphabet line");
  try {
    return PresentationSchema(std::move(*alphabet), std::move(relations), std::move(*name),
                              param_name, param_min);
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string serialize(const PresentationSchema& schema) {
  std::ostringstream out;
  out << "monoid: " << schema.name() << "\n";
  out << "alphabet:";
  for (std::size_t i = 0; i < schema.alphabet().size(); ++i)
    out << ' ' << schema.alphabet().name_of(schema.alphabet().letter(i));
  out << "\n";
  out << "param: " << schema.param_name() << " >= " << schema.param_min() << "\n";
  for (const Relation& rel : schema.relations()) {
    out << "rule: " << display_pattern(rel.lhs, schema.alphabet(), schema.param_name()) << " -> "
        << display_pattern(rel.rhs, schema.alphabet(), schema.param_name()) << "\n";
  }
  return out.str();
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
  const auto toks = lex(trim(text), 1);
  Cursor cur{toks, 0, 1};
  const auto atoms = parse_items(cur, alphabet, "", false);
  if (!cur.done()) throw ParseError(1, "unexpected token '" + cur.peek().text + "' in word");
  Word w;
  w.reserve(atoms.size());
  for (const Atom& a : atoms) w.push_back(a.letter);
  return w;
}

std::string display_word(const Alphabet& alphabet, const Word& w) {
  alphabet.validate(w);
  if (w.empty()) return "1";
  if (alphabet.all_single_char()) return w;
  std::vector<std::string> toks;
  toks.reserve(w.size());
  for (char c : w) toks.push_back(alphabet.name_of(c));
  return join(toks, " ");
}

namespace {

std::vector<Atom> pattern_atoms(const ParamPattern& p) {
  std::vector<Atom> out;
  for (const auto& seg : p.segments()) {
    if (seg.is_param)
      out.push_back({seg.run_letter(), true});
    else
      for (char c : seg.text) out.push_back({c, false});
  }
  return out;
}

std::string display_atoms(const std::vector<Atom>& atoms, const Alphabet& alphabet,
                          const std::string& param_name) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  while (i < atoms.size()) {
    if (atoms[i].is_param) {
      toks.push_back(alphabet.name_of(atoms[i].letter) + "^" + param_name);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < atoms.size() && !atoms[j].is_param && atoms[j].letter == atoms[i].letter) ++j;
    const std::size_t run = j - i;
    toks.push_back(run == 1 ? alphabet.name_of(atoms[i].letter)
                            : alphabet.name_of(atoms[i].letter) + "^" + std::to_string(run));
    i = j;
  }
  return join(toks, " ");
}

}  // namespace

std::string display_pattern(const ParamPattern& pattern, const Alphabet& alphabet,
                            const std::string& param_name) {
  if (pattern.empty()) return "1";
  const auto atoms = pattern_atoms(pattern);
  const std::size_t n = atoms.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t k = p; k < n && periodic; ++k)
      if (!(atoms[k] == atoms[k % p])) periodic = false;
    if (!periodic) continue;
    if (p == 1) break;  // a pure run reads better as a literal power
    const std::vector<Atom> unit(atoms.begin(), atoms.begin() + p);
    return "(" + display_atoms(unit, alphabet, param_name) + ")^" + std::to_string(n / p);
  }
  return display_atoms(atoms, alphabet, param_name);
}

}  // namespace speciallab
