#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "multibase/expansions.hpp"

namespace multibase {

/// f_{k-1}(I_q) ∩ f_k(I_q) = [k/q, (k-1)/q + M/(q(q-1))].
struct Overlap {
  int k = 0;
  FieldElement lo;
  FieldElement hi;
};

struct SwitchRegion {
  std::vector<Overlap> overlaps;  // k = 1..M
};

SwitchRegion switch_region(const BaseContext& ctx);

/// Digits d with 0 <= q x - d <= M/(q-1), ascending. Throws OutOfInterval.
std::vector<int> allowed_digits(const FieldElement& x, const BaseContext& ctx);

enum class UniqueStatus { Unique, NotUnique, Unknown };

struct UniqueCertificate {
  UniqueStatus status = UniqueStatus::Unknown;
  DigitSeq expansion;  // when Unique
  int steps = 0;
};

/// Follows the orbit while exactly one digit is allowed.
UniqueCertificate certify_unique(const FieldElement& x, const BaseContext& ctx, int depth_cap = 128);

enum class CountKind { Exactly, AtLeast, Undecided };
std::string_view count_kind_name(CountKind kind);

struct CountOptions {
  int depth_cap = 128;
  std::uint64_t branch_cap = 64;
  std::size_t state_budget = std::size_t{1} << 18;
};

struct BranchEvent {
  Word prefix;        // shortest digit prefix reaching the branching state
  Word digit_options;
};

struct LeafCertificate {
  Word prefix;
  DigitSeq tail;  // unique continuation, an orbit cycle
};

struct CountResult {
  CountKind kind = CountKind::Undecided;
  std::uint64_t count = 0;
  int depth_used = 0;
  bool graph_closed = false;     // every reachable state was expanded
  bool infinite_proven = false;  // a reachable cycle has a branching state
  std::size_t states = 0;
  /// prefix_counts[n] = number of distinct length-n prefixes of expansions,
  /// saturating at UINT64_MAX; valid for n <= depth_used.
  std::vector<std::uint64_t> prefix_counts;
  std::vector<BranchEvent> branches;
  std::vector<LeafCertificate> leaves;
};

/// Exactly(k): the reachable state graph closed, the number of expansions is
/// finite and k <= branch_cap; leaves list every expansion.
/// AtLeast(k): infinitely many expansions proven (k = prefixes at the depth
/// reached) or more than branch_cap expansions.
/// Undecided: exploration truncated without a proof; count holds the prefix count.
CountResult count_expansions(const FieldElement& x, const BaseContext& ctx, const CountOptions& options = {});

/// M = 2, q = 1 + sqrt(2).
const BaseContext& golden_context_M2();

struct ConstructedPoint {
  FieldElement x;
  BaseContext ctx;
  DigitSeq seq;
};

/// x_k = (1 (00)^(k-1) 1^inf) at M = 2, q = 1 + sqrt(2).
ConstructedPoint construct_xk(int k);

/// (20)^inf and, for j <= j_max, (20)^j 21 0^inf and (20)^j 1 2^inf; each is
/// checked to evaluate to 1 at q = 1 + sqrt(2).
std::vector<DigitSeq> expansions_of_one_M2(int j_max);

}  // namespace multibase
