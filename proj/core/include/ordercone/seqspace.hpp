#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>

#include "ordercone/rational.hpp"

namespace ordercone::seq {

using Index = std::int64_t;

/// A sequence over Z with finitely many explicit entries below `tail_start`
/// and the constant `tail_value` from `tail_start` on. Unlisted indices below
/// the tail are zero. Explicit zero entries are dropped on construction.
///
/// The ambient space is
///   X = { x : L = lim x_k exists and sum_{k>=1} x_{-k} / 2^k = L },
/// with subspaces B = { x ∈ X : x_k = 0 for k <= -2 } and
/// C = { x ∈ X : x_k = 0 for k >= 0 }. Disjointness is pointwise.
class SeqElement {
 public:
  SeqElement() = default;
  /// Throws Error(PreconditionViolated) if an explicit index is >= tail_start.
  SeqElement(std::map<Index, Rational> explicit_entries, Index tail_start, Rational tail_value);

  static SeqElement zero() { return SeqElement(); }

  Rational at(Index k) const;
  const std::map<Index, Rational>& explicit_entries() const noexcept { return entries_; }
  Index tail_start() const noexcept { return tail_start_; }
  const Rational& tail_value() const noexcept { return tail_value_; }

  /// sum_{k>=1} x_{-k} / 2^k. Finitely many terms are nonzero.
  Rational negative_weighted_sum() const;

  /// Lowest index at which the sequence may be nonzero (tail start if none).
  Index lowest_index() const;

  friend bool operator==(const SeqElement& a, const SeqElement& b);

 private:
  std::map<Index, Rational> entries_;
  Index tail_start_ = 0;
  Rational tail_value_ = 0;
};

SeqElement operator+(const SeqElement& a, const SeqElement& b);
SeqElement operator-(const SeqElement& a, const SeqElement& b);
SeqElement operator*(const Rational& t, const SeqElement& a);
SeqElement pointwise_max(const SeqElement& a, const SeqElement& b);
/// a_k <= b_k for every k.
bool pointwise_leq(const SeqElement& a, const SeqElement& b);
bool is_zero_sequence(const SeqElement& a);

enum class Part { B, C };

struct NonDirected {
  Rational infimum;   // lower bound on the weighted sum of every common upper bound in C
};
struct NonPervasive {};
struct NonDisjoint {
  Index index;        // both sequences are nonzero here
};
using SeqWitness = std::variant<NonDirected, NonPervasive, NonDisjoint>;

bool seq_is_member(const SeqElement& x);

/// Throws Error(NotMember) if x ∉ X.
bool seq_in_subspace(const SeqElement& x, Part which);

struct BCDecomposition {
  SeqElement b;
  SeqElement c;
};

/// The unique x = b + c with b ∈ B, c ∈ C: b_{-1} = 2 lim x_k and
/// c_{-1} = -2 sum_{k>=2} x_{-k}/2^k. Throws Error(NotMember).
BCDecomposition seq_decompose_bc(const SeqElement& x);

/// Throws Error(NotMember) unless both are members.
bool seq_is_disjoint(const SeqElement& x, const SeqElement& y);

/// Some index where both are nonzero, if any.
std::optional<Index> seq_common_support(const SeqElement& x, const SeqElement& y);

/// An upper bound of x and y inside C, or a proof that none exists: the
/// pointwise maximum m has weighted sum s, every upper bound in C dominates
/// m, so s > 0 rules out membership. For s <= 0 the bound is m with the -1
/// entry raised by -2s. Throws Error(NotInC).
std::variant<SeqElement, SeqWitness> seq_join_in_c(const SeqElement& x, const SeqElement& y);

/// Checks that a member supported only at -1 is zero, which rules out a
/// nonzero element of X below the positive part of x^(1) in the cover.
/// Throws std::logic_error if the check fails.
SeqWitness seq_nonpervasive_witness();

/// x^(1) ∈ C and the fixed b ∈ B are not disjoint, so C is not B^d.
/// Throws std::logic_error if the check fails.
SeqWitness seq_b_complement_witness();

/// x^(n): 1 at -n, -2 at -(n+1), zero elsewhere.
SeqElement x_n(Index n);
/// z^(n): 1 at n >= 0, zero elsewhere.
SeqElement z_n(Index n);
/// b: 1/2 on k >= 0, 1 at -1, zero below.
SeqElement sample_b();

}  // namespace ordercone::seq
