#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multibase/algebraic.hpp"
#include "multibase/digits.hpp"
#include "multibase/number_field.hpp"

namespace multibase {

AlgebraicReal p1(int M);
AlgebraicReal p2(int M);
AlgebraicReal q2(int M);

/// A base strictly inside (p1, p2) whose quasi-greedy expansion of 1 is purely
/// periodic: ((m+1)00)^inf for even M, (m m (m-1)(m-1)(m-1))^inf for odd M.
AlgebraicReal window_interior_base(int M);

enum class Variant { Even, Odd1, Odd2, Odd3 };

std::string_view variant_name(Variant v);
/// "even", "odd1", "odd2", "odd3" (case-insensitive). Throws InvalidFamily.
Variant parse_variant(std::string_view text);

struct FamilyId {
  Variant variant = Variant::Even;
  int k = 0;
  int j = 0;
  int u = 0;
  int v = 0;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

std::string to_string(const FamilyId& id);

/// Throws InvalidFamily if the variant does not match the parity of M or a
/// parameter is out of range.
void validate_family(const FamilyId& id, int M);

/// The family function as numerator(q) / q^shift.
struct LaurentForm {
  Polynomial numerator;
  int shift = 0;
};
LaurentForm family_laurent(const FamilyId& id, int M);

FieldElement family_value(const FamilyId& id, int M, const FieldElement& q);
Rational family_value(const FamilyId& id, int M, const Rational& q);
/// Evaluated in Q(q).
FieldElement family_value(const FamilyId& id, int M, const AlgebraicReal& q);

/// sign(f(p1)) < 0.
bool family_has_root(const FamilyId& id, int M);
/// The displayed parameter inequality for the variant, evaluated exactly.
bool family_criterion_closed_form(const FamilyId& id, int M);

/// Unique root in (p1, inf). With `minimal`, the defining polynomial is reduced
/// to the factor vanishing at the root. Throws NoRoot.
AlgebraicReal family_root(const FamilyId& id, int M, bool minimal = true);

/// The two expansions whose equality defines the family:
/// left = 1 0^k u T_L and right = 0 reflect(0^j v T_R).
std::pair<DigitSeq, DigitSeq> family_witness_sequences(const FamilyId& id, int M);

/// All valid families for M with k, j <= K.
std::vector<FamilyId> all_families(int M, int K);

struct SweepHit {
  FamilyId family;
  AlgebraicReal root;
};

/// Families with k, j <= K whose root lies in (p1, p2]; ordered by family.
std::vector<SweepHit> sweep_window(int M, int K);
std::vector<SweepHit> sweep_window_omp(int M, int K);

/// Odd1 hits whose witness pair is not also the pair of an odd2/odd3 hit.
std::vector<SweepHit> odd1_witnesses(const std::vector<SweepHit>& hits, int M);

/// Parameter sets named by the window theorems, before deduplication.
std::vector<FamilyId> theorem_families(int M);

struct B2Witness {
  AlgebraicReal base;
  FamilyId family;
  DigitSeq left_seq;
  DigitSeq right_seq;
};

/// B2(M) in (p1, p2] with one witness per base, ascending. The theorem sets are
/// checked against an independent sweep with k, j <= sweep_k; a mismatch throws
/// VerificationFailed.
std::vector<B2Witness> enumerate_B2_window(int M, int sweep_k = 8);

/// Distinct values among `xs`, ascending.
std::vector<AlgebraicReal> distinct_sorted(std::vector<AlgebraicReal> xs);

struct KnownBasesM1 {
  AlgebraicReal q2;
  AlgebraicReal qk;
  AlgebraicReal q_aleph0_second;
};
KnownBasesM1 known_bases_M1();

}  // namespace multibase
