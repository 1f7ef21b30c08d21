#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace multibase {

using Word = std::vector<int>;

/// Digits {0, ..., M}; m = ceil(M / 2).
struct Alphabet {
  int M = 1;

  int m() const { return (M + 1) / 2; }
  bool even() const { return M % 2 == 0; }
};

/// Eventually periodic sequence pre (per)^inf in canonical form: the period is
/// primitive and the preperiod is as short as possible. 0^inf has period "0".
class DigitSeq {
 public:
  DigitSeq() : period_{0} {}
  /// Canonicalizes; an empty period means a 0^inf tail.
  DigitSeq(Word preperiod, Word period);

  /// `1(0)`, `(20)`, `100(21)`, `210` (= 210(0)), or comma form `10,3,(11,0)`.
  static DigitSeq parse(std::string_view text);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return period_; }
  bool ends_in_zeros() const { return period_.size() == 1 && period_[0] == 0; }
  int max_digit() const;

  /// Digit at 0-based position i.
  int at(size_t i) const;
  /// Tail after dropping the first n digits.
  DigitSeq shifted(size_t n) const;
  DigitSeq prepend(const Word& w) const;
  /// First n digits.
  Word prefix(size_t n) const;

  /// Comma form is used when `M` >= 10 or a digit exceeds 9.
  std::string to_string(int M = 9) const;

  friend bool operator==(const DigitSeq& a, const DigitSeq& b) = default;
  /// Structural order (preperiod length, then words); not the lexicographic order.
  friend bool operator<(const DigitSeq& a, const DigitSeq& b);

 private:
  void canonicalize();
  Word pre_;
  Word period_;
};

DigitSeq reflect(const DigitSeq& seq, const Alphabet& alphabet);

/// Lexicographic order of the infinite sequences.
std::strong_ordering lex_compare(const DigitSeq& a, const DigitSeq& b);

/// Word text: digits concatenated, or comma separated when `comma` is set.
std::string word_to_string(const Word& w, bool comma);

}  // namespace multibase
