#include "multibase/expansions.hpp"

#include <algorithm>
#include <map>

#include "multibase/bases.hpp"
#include "multibase/error.hpp"

namespace multibase {

const DigitSeq& BaseContext::alpha_seq() const {
  if (!alpha.decided) {
    throw Error(ErrorCode::AlphaUndecided, "quasi-greedy expansion not eventually periodic within horizon (prefix " +
                                               word_to_string(alpha.prefix, alphabet.M >= 10) + ")");
  }
  return alpha.seq;
}

BaseContext make_context(int M, const AlgebraicReal& q, int horizon) {
  if (M < 1) throw Error(ErrorCode::InvalidBase, "M must be >= 1");
  if (compare(q, Rational(1)) <= 0 || compare(q, Rational(M + 1)) > 0) {
    throw Error(ErrorCode::InvalidBase, "base must satisfy 1 < q <= M+1");
  }
  BaseContext ctx;
  ctx.alphabet = Alphabet{M};
  ctx.field = NumberField::create(q);
  ctx.q = ctx.field->generator();
  ctx.q_elem = ctx.field->gen();
  ctx.q_inv = ctx.q_elem.inverse();
  ctx.upper = Rational(M) * (ctx.q_elem - Rational(1)).inverse();
  ctx.alpha = quasi_greedy_alpha(ctx, horizon);
  return ctx;
}

namespace {

void check_digits(const Word& w, int M) {
  for (int d : w) {
    if (d < 0 || d > M) {
      throw Error(ErrorCode::DigitOutOfRange, "digit " + std::to_string(d) + " outside {0.." + std::to_string(M) + "}");
    }
  }
}

}  // namespace

FieldElement evaluate_word(const Word& w, const BaseContext& ctx) {
  check_digits(w, ctx.alphabet.M);
  // Horner in 1/q: ((w_n/q + w_{n-1})/q + ...)/q
  FieldElement acc = ctx.field->zero();
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = ctx.q_inv * (acc + Rational(*it));
  return acc;
}

FieldElement evaluate(const DigitSeq& seq, const BaseContext& ctx) {
  FieldElement head = evaluate_word(seq.preperiod(), ctx);
  if (seq.ends_in_zeros()) return head;
  const Word& per = seq.period();
  FieldElement block = evaluate_word(per, ctx);
  FieldElement qinv_l = ctx.q_inv.pow(static_cast<long>(per.size()));
  FieldElement tail = block / (ctx.field->one() - qinv_l);
  return head + ctx.q_inv.pow(static_cast<long>(seq.preperiod().size())) * tail;
}

AlphaResult quasi_greedy_alpha(const BaseContext& ctx, int horizon) {
  const int M = ctx.alphabet.M;
  AlphaResult out;
  std::map<std::vector<Rational>, int> seen;
  FieldElement r = ctx.field->one();
  Word digits;
  for (int step = 0; step < horizon; ++step) {
    seen.emplace(r.coeffs(), step);
    FieldElement t = ctx.q_elem * r;
    Interval enc = t.enclosure();
    Integer guess = enc.lo.get_num() / enc.lo.get_den();
    int d = static_cast<int>(std::clamp<long>(guess.get_si(), 0, M));
    while (d < M && sign_of(t - Rational(d + 1)) >= 0) ++d;
    while (d > 0 && sign_of(t - Rational(d)) < 0) --d;
    digits.push_back(d);
    r = t - Rational(d);
    if (r.is_zero()) {
      Word per(digits);
      per.back() -= 1;
      out.decided = true;
      out.seq = DigitSeq({}, std::move(per));
      out.prefix = digits;
      return out;
    }
    if (auto it = seen.find(r.coeffs()); it != seen.end()) {
      size_t start = static_cast<size_t>(it->second);
      out.decided = true;
      out.seq = DigitSeq(Word(digits.begin(), digits.begin() + static_cast<long>(start)),
                         Word(digits.begin() + static_cast<long>(start), digits.end()));
      out.prefix = digits;
      return out;
    }
  }
  out.prefix = digits;
  return out;
}

bool is_admissible_alpha(const DigitSeq& seq) {
  if (seq.ends_in_zeros()) return false;
  size_t n = seq.preperiod().size() + seq.period().size();
  for (size_t i = 1; i <= n; ++i) {
    if (lex_compare(seq.shifted(i), seq) > 0) return false;
  }
  return true;
}

bool is_unique_given_alpha(const DigitSeq& seq, const DigitSeq& alpha, const Alphabet& alphabet) {
  const int M = alphabet.M;
  DigitSeq alpha_bar = reflect(alpha, alphabet);
  size_t n = seq.preperiod().size() + seq.period().size();
  for (size_t i = 0; i < n; ++i) {
    int d = seq.at(i);
    if (d < M || d > 0) {
      DigitSeq tail = seq.shifted(i + 1);
      if (d < M && lex_compare(tail, alpha) >= 0) return false;
      if (d > 0 && lex_compare(tail, alpha_bar) <= 0) return false;
    }
  }
  return true;
}

bool is_unique_expansion(const DigitSeq& seq, const BaseContext& ctx) {
  check_digits(seq.preperiod(), ctx.alphabet.M);
  check_digits(seq.period(), ctx.alphabet.M);
  return is_unique_given_alpha(seq, ctx.alpha_seq(), ctx.alphabet);
}

bool in_window(const BaseContext& ctx) {
  const int M = ctx.alphabet.M;
  return compare(ctx.q, p1(M)) > 0 && compare(ctx.q, p2(M)) <= 0;
}

std::vector<DigitSeq> unique_set_catalog(const BaseContext& ctx, int max_preperiod) {
  if (!in_window(ctx)) throw Error(ErrorCode::BaseOutOfWindow, "catalog requires p1 < q <= p2");
  const Alphabet& A = ctx.alphabet;
  const int m = A.m();
  std::vector<Word> tails;
  int u_max;
  if (A.even()) {
    tails = {{m}};
    u_max = m;
  } else {
    tails = {{m, m - 1}, {m - 1, m}};
    u_max = m - 1;
  }
  std::vector<DigitSeq> out{DigitSeq({}, {0}), DigitSeq({}, {A.M})};
  for (int k = 0; k <= max_preperiod; ++k) {
    for (int u = 0; u <= u_max; ++u) {
      for (const auto& tail : tails) {
        Word pre(static_cast<size_t>(k), 0);
        pre.push_back(u);
        DigitSeq s(pre, tail);
        out.push_back(s);
        out.push_back(reflect(s, A));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const DigitSeq& a, const DigitSeq& b) {
    if (a.preperiod().size() != b.preperiod().size()) return a.preperiod().size() < b.preperiod().size();
    return lex_compare(a, b) < 0;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DigitSeq> enumerate_canonical(int M, int max_pre, int max_period) {
  std::vector<DigitSeq> out;
  auto words_of_length = [M](int len) {
    std::vector<Word> words;
    Word w(static_cast<size_t>(len), 0);
    while (true) {
      words.push_back(w);
      int i = len - 1;
      while (i >= 0 && w[static_cast<size_t>(i)] == M) w[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++w[static_cast<size_t>(i)];
    }
    return words;
  };
  std::vector<std::vector<Word>> by_len;
  for (int len = 0; len <= std::max(max_pre, max_period); ++len) by_len.push_back(words_of_length(len));
  for (int lp = 0; lp <= max_pre; ++lp) {
    for (int lq = 1; lq <= max_period; ++lq) {
      for (const auto& pre : by_len[static_cast<size_t>(lp)]) {
        for (const auto& per : by_len[static_cast<size_t>(lq)]) {
          DigitSeq s(pre, per);
          // keep only pairs that are already canonical, so each sequence appears once
          if (s.preperiod() == pre && s.period() == per) out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

std::vector<char> classify_unique(const std::vector<DigitSeq>& seqs, const DigitSeq& alpha,
                                  const Alphabet& alphabet) {
  std::vector<char> out(seqs.size());
  for (size_t i = 0; i < seqs.size(); ++i) out[i] = is_unique_given_alpha(seqs[i], alpha, alphabet) ? 1 : 0;
  return out;
}

std::vector<char> classify_unique_omp(const std::vector<DigitSeq>& seqs, const DigitSeq& alpha,
                                      const Alphabet& alphabet) {
  std::vector<char> out(seqs.size());
  const long n = static_cast<long>(seqs.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) {
    out[static_cast<size_t>(i)] = is_unique_given_alpha(seqs[static_cast<size_t>(i)], alpha, alphabet) ? 1 : 0;
  }
  return out;
}

}  // namespace multibase
