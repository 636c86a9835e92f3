#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "speciallab/errors.hpp"

namespace speciallab {

/// A word is a string of single-character letters; the empty string is the
/// monoid identity. Validation against an alphabet happens at the API
/// boundaries that know one.
using Word = std::string;

Word reversed(const Word& w);

/// Non-empty prefixes of w, shortest first. Empty for the empty word.
std::vector<Word> prefixes(const Word& w);

/// Non-empty suffixes of w, shortest first.
std::vector<Word> suffixes(const Word& w);

/// True iff no proper non-empty prefix of w is also a suffix of w, i.e. the
/// only word that is both is w itself. Rejects the empty word.
bool self_overlap_free(const Word& w);

/// Non-empty words that are simultaneously a prefix of u and a suffix of v,
/// shortest first. Both words must be non-empty and distinct.
std::vector<Word> overlaps(const Word& u, const Word& v);

/// Finite ordered letter set. Letters are single characters; '#' is reserved
/// for word-problem queries and never admitted. Letters may carry multi
/// character display names (e.g. "b_1"), in which case a free character is
/// assigned to stand for the letter internally.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);
  static Alphabet from_letters(std::string_view letters);

  std::size_t size() const { return letters_.size(); }
  bool contains(char c) const;
  std::size_t index_of(char c) const;
  char letter(std::size_t idx) const { return letters_.at(idx); }
  const std::string& name_of(char c) const;
  std::optional<char> letter_named(const std::string& name) const;
  bool all_single_char() const;

  /// Throws if some letter of w is not in the alphabet.
  void validate(const Word& w) const;

  /// Space-separated display names, in declaration order.
  std::string display() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<char> letters_;
  std::vector<std::string> names_;
};

/// One occurrence of a pattern instance inside a host word. `param` is the
/// parameter value of the matched instance (by convention param_min for
/// parameterless patterns) and `length` the instance length, so that
/// pattern.instantiate(param) equals the factor starting at `start`.
struct PatternMatch {
  std::size_t start;
  int param;
  std::size_t length;
  bool operator==(const PatternMatch&) const = default;
};

/// A word schema with one shared integer parameter i >= param_min. Segments
/// are constant words or parameter runs x^i. Well-formedness demands that a
/// letter adjacent to a parameter run differs from the run letter, and that
/// the first parameter run is not the final segment; together these make the
/// parameter value of any match at a given position unique.
class ParamPattern {
 public:
  struct Segment {
    bool is_param;
    std::string text;  // constant content, or the run letter for a parameter
    char run_letter() const { return text[0]; }
    bool operator==(const Segment&) const = default;
  };

  /// The empty pattern, denoting the empty word (used for rule right sides).
  ParamPattern();
  ParamPattern(std::vector<Segment> segments, int param_min);
  static ParamPattern constant(const Word& w);

  bool empty() const { return segments_.empty(); }
  bool has_param() const { return param_segments_ > 0; }
  int param_min() const { return param_min_; }
  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t param_segment_count() const { return param_segments_; }
  std::size_t constant_length() const { return constant_length_; }

  /// Letters used by the pattern, in first-appearance order.
  std::vector<char> letters() const;

  Word instantiate(int i) const;
  std::size_t length_at(int i) const;

  /// The unique match of an instance starting exactly at pos, if any.
  std::optional<PatternMatch> match_at(const Word& w, std::size_t pos) const;

  /// All matches in w, ordered by start position.
  std::vector<PatternMatch> find_matches(const Word& w) const;

  /// The match of an instance ending exactly at w.size(), if any. When a
  /// leading parameter run is not pinned by the rest of the pattern the
  /// longest compatible run is taken.
  std::optional<PatternMatch> match_suffix_end(const Word& w) const;

  bool operator==(const ParamPattern& other) const {
    return segments_ == other.segments_ &&
           (!has_param() || param_min_ == other.param_min_);
  }

 private:
  std::vector<Segment> segments_;
  int param_min_ = 1;
  std::size_t param_segments_ = 0;
  std::size_t constant_length_ = 0;

  void validate_and_index();
};

}  // namespace speciallab
