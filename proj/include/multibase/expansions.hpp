#pragma once

#include <vector>

#include "multibase/digits.hpp"
#include "multibase/number_field.hpp"

namespace multibase {

struct AlphaResult {
  bool decided = false;
  DigitSeq seq;  // valid when decided
  Word prefix;   // greedy digits produced before giving up
};

/// A base q in (1, M+1] with its number field and cached constants.
struct BaseContext {
  Alphabet alphabet;
  AlgebraicReal q;  // minimal polynomial attached
  FieldPtr field;
  FieldElement q_elem;
  FieldElement q_inv;
  FieldElement upper;  // M / (q - 1), right end of I_q
  AlphaResult alpha;   // at the default horizon

  /// alpha.seq, or throws AlphaUndecided.
  const DigitSeq& alpha_seq() const;
};

constexpr int kDefaultAlphaHorizon = 64;

/// Certifies 1 < q <= M+1 (InvalidBase otherwise) and builds Q(q).
BaseContext make_context(int M, const AlgebraicReal& q, int horizon = kDefaultAlphaHorizon);

/// Exact value of sum d_i q^-i in Q(q). Throws DigitOutOfRange.
FieldElement evaluate(const DigitSeq& seq, const BaseContext& ctx);
/// Value of the finite word w_1..w_n as sum w_i q^-i.
FieldElement evaluate_word(const Word& w, const BaseContext& ctx);

/// Quasi-greedy expansion of 1, via the greedy orbit. Undecided if the orbit
/// neither terminates nor repeats within `horizon` steps.
AlphaResult quasi_greedy_alpha(const BaseContext& ctx, int horizon = kDefaultAlphaHorizon);

/// Infinite and every shift <= the sequence itself.
bool is_admissible_alpha(const DigitSeq& seq);

/// Lexicographic uniqueness test against a known alpha.
bool is_unique_given_alpha(const DigitSeq& seq, const DigitSeq& alpha, const Alphabet& alphabet);
/// Throws AlphaUndecided or DigitOutOfRange.
bool is_unique_expansion(const DigitSeq& seq, const BaseContext& ctx);

/// p1(M) < q <= p2(M), by exact comparison.
bool in_window(const BaseContext& ctx);

/// Unique expansions with at most `max_preperiod` leading zeros, for q in the
/// window; deduplicated, ordered by preperiod length then lexicographically.
/// Throws BaseOutOfWindow.
std::vector<DigitSeq> unique_set_catalog(const BaseContext& ctx, int max_preperiod);

/// Every canonical sequence with preperiod length <= max_pre and period length
/// in [1, max_period] over {0..M}, each listed once.
std::vector<DigitSeq> enumerate_canonical(int M, int max_pre, int max_period);

/// is_unique_given_alpha over a batch; serial reference and OpenMP kernel.
std::vector<char> classify_unique(const std::vector<DigitSeq>& seqs, const DigitSeq& alpha,
                                  const Alphabet& alphabet);
std::vector<char> classify_unique_omp(const std::vector<DigitSeq>& seqs, const DigitSeq& alpha,
                                      const Alphabet& alphabet);

}  // namespace multibase
