#include "speciallab/words.hpp"

#include <algorithm>

namespace speciallab {

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 1; k <= w.size(); ++k) out.push_back(w.substr(0, k));
  return out;
}

std::vector<Word> suffixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 1; k <= w.size(); ++k) out.push_back(w.substr(w.size() - k));
  return out;
}

bool self_overlap_free(const Word& w) {
  if (w.empty()) throw Error("self_overlap_free: the empty word has no overlaps");
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w.compare(0, k, w, w.size() - k, k) == 0) return false;
  }
  return true;
}

std::vector<Word> overlaps(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw Error("overlaps: words must be non-empty");
  if (u == v) throw Error("overlaps: words must be distinct (use self_overlap_free)");
  std::vector<Word> out;
  for (std::size_t k = 1; k <= std::min(u.size(), v.size()); ++k) {
    if (u.compare(0, k, v, v.size() - k, k) == 0) out.push_back(u.substr(0, k));
  }
  return out;
}

namespace {

constexpr std::string_view kAssignable =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

}  // namespace

Alphabet::Alphabet(const std::vector<std::string>& names) {
  if (names.empty()) throw Error("alphabet: at least one letter is required");
  names_ = names;
  letters_.assign(names.size(), '\0');

  auto used = [&](char c) {
    return std::find(letters_.begin(), letters_.end(), c) != letters_.end();
  };

  // Single-character names claim their character first, then the remaining
  // names get a free character (preferring their leading one).
  for (std::size_t k = 0; k < names_.size(); ++k) {
    const std::string& name = names_[k];
    if (name.empty()) throw Error("alphabet: empty letter name");
    if (name == "#") throw Error("alphabet: '#' is reserved for word-problem queries");
    if (name.size() == 1) {
      if (used(name[0])) throw Error("alphabet: duplicate letter '" + name + "'");
      letters_[k] = name[0];
    }
  }
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (letters_[k] != '\0') continue;
    const std::string& name = names_[k];
    if (std::count(names_.begin(), names_.end(), name) > 1)
      throw Error("alphabet: duplicate letter '" + name + "'");
    char pick = '\0';
    if (!used(name[0]) && kAssignable.find(name[0]) != std::string_view::npos) {
      pick = name[0];
    } else {
      for (char c : kAssignable) {
        if (!used(c)) { pick = c; break; }
      }
    }
    if (pick == '\0') throw Error("alphabet: no free character left for '" + name + "'");
    letters_[k] = pick;
  }
}

Alphabet Alphabet::from_letters(std::string_view letters) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return Alphabet(names);
}

bool Alphabet::contains(char c) const {
  return std::find(letters_.begin(), letters_.end(), c) != letters_.end();
}

std::size_t Alphabet::index_of(char c) const {
  auto it = std::find(letters_.begin(), letters_.end(), c);
  if (it == letters_.end())
    throw Error(std::string("letter '") + c + "' is not in the alphabet " + display());
  return static_cast<std::size_t>(it - letters_.begin());
}

const std::string& Alphabet::name_of(char c) const { return names_.at(index_of(c)); }

std::optional<char> Alphabet::letter_named(const std::string& name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return letters_[k];
  }
  return std::nullopt;
}

bool Alphabet::all_single_char() const {
  return std::all_of(names_.begin(), names_.end(),
                     [](const std::string& n) { return n.size() == 1; });
}

void Alphabet::validate(const Word& w) const {
  for (char c : w) {
    if (!contains(c))
      throw Error(std::string("letter '") + c + "' is not in the alphabet " + display());
  }
}

std::string Alphabet::display() const {
  std::string out;
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (k) out += ' ';
    out += names_[k];
  }
  return out;
}

ParamPattern::ParamPattern() = default;

ParamPattern::ParamPattern(std::vector<Segment> segments, int param_min)
    : segments_(std::move(segments)), param_min_(param_min) {
  validate_and_index();
}

ParamPattern ParamPattern::constant(const Word& w) {
  if (w.empty()) return ParamPattern();
  return ParamPattern({Segment{false, w}}, 1);
}

void ParamPattern::validate_and_index() {
  // Merge adjacent constants so segment structure is canonical.
  std::vector<Segment> merged;
  for (auto& s : segments_) {
    if (!s.is_param) {
      if (s.text.empty()) throw Error("pattern: empty constant segment");
      if (!merged.empty() && !merged.back().is_param) {
        merged.back().text += s.text;
      } else {
        merged.push_back(std::move(s));
      }
    } else {
      if (s.text.size() != 1) throw Error("pattern: a parameter run names a single letter");
      merged.push_back(std::move(s));
    }
  }
  segments_ = std::move(merged);

  param_segments_ = 0;
  constant_length_ = 0;
  std::size_t first_param = segments_.size();
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const Segment& s = segments_[k];
    if (!s.is_param) {
      constant_length_ += s.text.size();
      continue;
    }
    if (param_segments_++ == 0) first_param = k;
    char x = s.run_letter();
    if (k > 0) {
      const Segment& prev = segments_[k - 1];
      char before = prev.is_param ? prev.run_letter() : prev.text.back();
      if (before == x)
        throw Error(std::string("pattern: ambiguous boundary, letter '") + x +
                    "' adjacent to its own parameter run");
    }
    if (k + 1 < segments_.size()) {
      const Segment& next = segments_[k + 1];
      char after = next.is_param ? next.run_letter() : next.text.front();
      if (after == x)
        throw Error(std::string("pattern: ambiguous boundary, letter '") + x +
                    "' adjacent to its own parameter run");
    }
  }
  if (param_segments_ > 0) {
    if (param_min_ < 1) throw Error("pattern: parameter minimum must be at least 1");
    if (first_param + 1 == segments_.size())
      throw Error("pattern: ambiguous boundary, a trailing parameter run is not "
                  "determined by any match");
  } else {
    param_min_ = 1;
  }
}

std::vector<char> ParamPattern::letters() const {
  std::vector<char> out;
  auto add = [&](char c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  for (const Segment& s : segments_) {
    if (s.is_param) {
      add(s.run_letter());
    } else {
      for (char c : s.text) add(c);
    }
  }
  return out;
}

Word ParamPattern::instantiate(int i) const {
  if (has_param() && i < param_min_)
    throw Error("pattern: parameter " + std::to_string(i) + " is below the minimum " +
                std::to_string(param_min_));
  Word out;
  out.reserve(length_at(has_param() ? i : param_min_));
  for (const Segment& s : segments_) {
    if (s.is_param) {
      out.append(static_cast<std::size_t>(i), s.run_letter());
    } else {
      out += s.text;
    }
  }
  return out;
}

std::size_t ParamPattern::length_at(int i) const {
  return constant_length_ + param_segments_ * static_cast<std::size_t>(i);
}

std::optional<PatternMatch> ParamPattern::match_at(const Word& w, std::size_t pos) const {
  if (empty() || pos > w.size()) return std::nullopt;
  std::size_t cur = pos;
  std::optional<int> param;
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const Segment& s = segments_[k];
    if (!s.is_param) {
      if (cur + s.text.size() > w.size()) return std::nullopt;
      if (w.compare(cur, s.text.size(), s.text) != 0) return std::nullopt;
      cur += s.text.size();
    } else {
      char x = s.run_letter();
      if (param) {
        std::size_t need = static_cast<std::size_t>(*param);
        if (cur + need > w.size()) return std::nullopt;
        for (std::size_t t = 0; t < need; ++t) {
          if (w[cur + t] != x) return std::nullopt;
        }
        cur += need;
      } else {
        // First parameter run: the next segment's letter differs from x, so
        // the run is maximal and pins the parameter.
        std::size_t r = 0;
        while (cur + r < w.size() && w[cur + r] == x) ++r;
        if (r == 0 || static_cast<int>(r) < param_min_) return std::nullopt;
        param = static_cast<int>(r);
        cur += r;
      }
    }
  }
  return PatternMatch{pos, param.value_or(param_min_), cur - pos};
}

std::vector<PatternMatch> ParamPattern::find_matches(const Word& w) const {
  std::vector<PatternMatch> out;
  if (empty()) return out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (auto m = match_at(w, pos)) out.push_back(*m);
  }
  return out;
}

std::optional<PatternMatch> ParamPattern::match_suffix_end(const Word& w) const {
  if (empty()) return std::nullopt;
  std::size_t cur = w.size();
  std::optional<int> param;
  for (std::size_t k = segments_.size(); k-- > 0;) {
    const Segment& s = segments_[k];
    if (!s.is_param) {
      if (cur < s.text.size()) return std::nullopt;
      if (w.compare(cur - s.text.size(), s.text.size(), s.text) != 0) return std::nullopt;
      cur -= s.text.size();
    } else {
      char x = s.run_letter();
      if (param) {
        std::size_t need = static_cast<std::size_t>(*param);
        if (cur < need) return std::nullopt;
        for (std::size_t t = 1; t <= need; ++t) {
          if (w[cur - t] != x) return std::nullopt;
        }
        cur -= need;
      } else {
        std::size_t r = 0;
        while (r < cur && w[cur - 1 - r] == x) ++r;
        if (k > 0) {
          // A left neighbour with a different letter pins the run exactly.
          if (r == 0) return std::nullopt;
        } else if (r == 0) {
          return std::nullopt;
        }
        if (static_cast<int>(r) < param_min_) return std::nullopt;
        param = static_cast<int>(r);
        cur -= r;
      }
    }
  }
  return PatternMatch{cur, param.value_or(param_min_), w.size() - cur};
}

}  // namespace speciallab
