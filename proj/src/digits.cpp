#include "multibase/digits.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "multibase/error.hpp"

namespace multibase {

DigitSeq::DigitSeq(Word preperiod, Word period) : pre_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) period_ = {0};
  canonicalize();
}

void DigitSeq::canonicalize() {
  const size_t n = period_.size();
  for (size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (size_t i = d; i < n && repeats; ++i) repeats = period_[i] == period_[i - d];
    if (repeats) {
      period_.resize(d);
      break;
    }
  }
  while (!pre_.empty() && pre_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    pre_.pop_back();
  }
}

int DigitSeq::max_digit() const {
  int best = *std::max_element(period_.begin(), period_.end());
  for (int d : pre_) best = std::max(best, d);
  return best;
}

int DigitSeq::at(size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return period_[(i - pre_.size()) % period_.size()];
}

DigitSeq DigitSeq::shifted(size_t n) const {
  if (n <= pre_.size()) return DigitSeq(Word(pre_.begin() + static_cast<long>(n), pre_.end()), period_);
  size_t r = (n - pre_.size()) % period_.size();
  Word p(period_.begin() + static_cast<long>(r), period_.end());
  p.insert(p.end(), period_.begin(), period_.begin() + static_cast<long>(r));
  return DigitSeq({}, std::move(p));
}

DigitSeq DigitSeq::prepend(const Word& w) const {
  Word p(w);
  p.insert(p.end(), pre_.begin(), pre_.end());
  return DigitSeq(std::move(p), period_);
}

Word DigitSeq::prefix(size_t n) const {
  Word w(n);
  for (size_t i = 0; i < n; ++i) w[i] = at(i);
  return w;
}

std::string word_to_string(const Word& w, bool comma) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (comma && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string DigitSeq::to_string(int M) const {
  bool comma = M >= 10 || max_digit() > 9;
  std::string out = word_to_string(pre_, comma);
  if (comma && !pre_.empty()) out += ',';
  return out + "(" + word_to_string(period_, comma) + ")";
}

bool operator<(const DigitSeq& a, const DigitSeq& b) {
  if (a.pre_.size() != b.pre_.size()) return a.pre_.size() < b.pre_.size();
  if (a.pre_ != b.pre_) return a.pre_ < b.pre_;
  if (a.period_.size() != b.period_.size()) return a.period_.size() < b.period_.size();
  return a.period_ < b.period_;
}

namespace {

[[noreturn]] void bad(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "invalid digit sequence '" + std::string(text) + "': " + why);
}

}  // namespace

DigitSeq DigitSeq::parse(std::string_view text) {
  Word pre, per;
  bool in_period = false, closed = false, saw_period = false;
  auto push = [&](int d) {
    if (closed) bad(text, "digits after ')'");
    (in_period ? per : pre).push_back(d);
  };
  auto open = [&]() {
    if (in_period || closed) bad(text, "unexpected '('");
    in_period = saw_period = true;
  };
  auto close = [&]() {
    if (!in_period) bad(text, "unexpected ')'");
    in_period = false;
    closed = true;
  };

  if (text.empty()) bad(text, "empty");
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (!tok.empty() && tok.front() == '(') {
        open();
        tok.remove_prefix(1);
      }
      bool closes = !tok.empty() && tok.back() == ')';
      if (closes) tok.remove_suffix(1);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        bad(text, "bad token");
      if (tok.size() > 6) bad(text, "digit too large");
      push(std::stoi(std::string(tok)));
      if (closes) close();
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c == '(') open();
      else if (c == ')') close();
      else if (std::isdigit(static_cast<unsigned char>(c))) push(c - '0');
      else bad(text, "unexpected character");
    }
  }
  if (in_period) bad(text, "unterminated period");
  if (saw_period && per.empty()) bad(text, "empty period");
  return DigitSeq(std::move(pre), std::move(per));
}

DigitSeq reflect(const DigitSeq& seq, const Alphabet& alphabet) {
  Word pre(seq.preperiod()), per(seq.period());
  for (auto& d : pre) d = alphabet.M - d;
  for (auto& d : per) d = alphabet.M - d;
  return DigitSeq(std::move(pre), std::move(per));
}

std::strong_ordering lex_compare(const DigitSeq& a, const DigitSeq& b) {
  size_t n = a.preperiod().size() + b.preperiod().size() + std::lcm(a.period().size(), b.period().size());
  for (size_t i = 0; i < n; ++i) {
    int x = a.at(i), y = b.at(i);
    if (x != y) return x <=> y;
  }
  return std::strong_ordering::equal;
}

}  // namespace multibase
