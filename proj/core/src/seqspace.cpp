#include "ordercone/seqspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ordercone/error.hpp"

namespace ordercone::seq {

namespace {

// 2^k for k < 0.
Rational power_of_two(Index k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(Integer(1), p) : Rational(p);
}

template <typename Fn>
SeqElement combine(const SeqElement& a, const SeqElement& b, Fn fn) {
  const Index lo = std::min(a.tail_start(), b.tail_start());
  const Index hi = std::max(a.tail_start(), b.tail_start());
  std::set<Index> keys;
  for (const auto& [k, v] : a.explicit_entries()) keys.insert(k);
  for (const auto& [k, v] : b.explicit_entries()) keys.insert(k);
  for (Index k = lo; k < hi; ++k) keys.insert(k);
  std::map<Index, Rational> out;
  for (auto k : keys) {
    Rational v = fn(a.at(k), b.at(k));
    if (v != 0) out.emplace(k, std::move(v));
  }
  return SeqElement(std::move(out), hi, fn(a.tail_value(), b.tail_value()));
}

void require_member(const SeqElement& x, const char* what) {
  if (!seq_is_member(x)) throw Error(Errc::NotMember, std::string(what) + " violates the membership equation");
}

}  // namespace

SeqElement::SeqElement(std::map<Index, Rational> explicit_entries, Index tail_start, Rational tail_value)
    : tail_start_(tail_start), tail_value_(std::move(tail_value)) {
  for (auto& [k, v] : explicit_entries) {
    if (k >= tail_start) {
      throw Error(Errc::PreconditionViolated, "explicit index " + std::to_string(k) +
                                                  " is not below the tail start " + std::to_string(tail_start));
    }
    if (v != 0) entries_.emplace(k, std::move(v));
  }
}

Rational SeqElement::at(Index k) const {
  if (k >= tail_start_) return tail_value_;
  const auto it = entries_.find(k);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational SeqElement::negative_weighted_sum() const {
  Rational s = 0;
  for (const auto& [k, v] : entries_)
    if (k < 0) s += v * power_of_two(k);
  // Tail on indices tail_start..-1: sum of 2^k over that range is 1 - 2^tail_start.
  if (tail_start_ < 0 && tail_value_ != 0) s += tail_value_ * (1 - power_of_two(tail_start_));
  return s;
}

Index SeqElement::lowest_index() const {
  return entries_.empty() ? tail_start_ : std::min(entries_.begin()->first, tail_start_);
}

bool operator==(const SeqElement& a, const SeqElement& b) {
  return is_zero_sequence(a - b);
}

bool is_zero_sequence(const SeqElement& a) {
  return a.explicit_entries().empty() && a.tail_value() == 0;
}

SeqElement operator+(const SeqElement& a, const SeqElement& b) {
  return combine(a, b, [](const Rational& p, const Rational& q) { return Rational(p + q); });
}

SeqElement operator-(const SeqElement& a, const SeqElement& b) {
  return combine(a, b, [](const Rational& p, const Rational& q) { return Rational(p - q); });
}

SeqElement operator*(const Rational& t, const SeqElement& a) {
  std::map<Index, Rational> out;
  for (const auto& [k, v] : a.explicit_entries()) out.emplace(k, t * v);
  return SeqElement(std::move(out), a.tail_start(), t * a.tail_value());
}

SeqElement pointwise_max(const SeqElement& a, const SeqElement& b) {
  return combine(a, b, [](const Rational& p, const Rational& q) { return p < q ? q : p; });
}

bool pointwise_leq(const SeqElement& a, const SeqElement& b) {
  const SeqElement d = b - a;
  if (d.tail_value() < 0) return false;
  return std::all_of(d.explicit_entries().begin(), d.explicit_entries().end(),
                     [](const auto& kv) { return kv.second > 0; });
}

bool seq_is_member(const SeqElement& x) { return x.negative_weighted_sum() == x.tail_value(); }

bool seq_in_subspace(const SeqElement& x, Part which) {
  require_member(x, "sequence");
  const auto& e = x.explicit_entries();
  if (which == Part::B) {
    const bool low_entries = !e.empty() && e.begin()->first <= -2;
    const bool low_tail = x.tail_start() <= -2 && x.tail_value() != 0;
    return !low_entries && !low_tail;
  }
  if (x.tail_value() != 0) return false;
  return e.empty() || e.rbegin()->first < 0;
}

BCDecomposition seq_decompose_bc(const SeqElement& x) {
  require_member(x, "sequence");
  const Rational limit = x.tail_value();

  std::map<Index, Rational> b_entries;
  for (const auto& [k, v] : x.explicit_entries())
    if (k >= 0) b_entries.emplace(k, v);
  b_entries[-1] = 2 * limit;
  SeqElement b(std::move(b_entries), std::max<Index>(x.tail_start(), 0), limit);

  std::map<Index, Rational> c_entries;
  for (Index k = x.lowest_index(); k <= -2; ++k) {
    Rational v = x.at(k);
    if (v != 0) c_entries.emplace(k, std::move(v));
  }
  // sum_{k>=2} x_{-k}/2^k = (full weighted sum) - x_{-1}/2
  const Rational rest = x.negative_weighted_sum() - x.at(-1) / 2;
  c_entries[-1] = -2 * rest;
  SeqElement c(std::move(c_entries), 0, 0);

  if (!seq_in_subspace(b, Part::B) || !seq_in_subspace(c, Part::C) || !(b + c == x)) {
    throw std::logic_error("B ⊕ C decomposition failed its postconditions");
  }
  return {std::move(b), std::move(c)};
}

std::optional<Index> seq_common_support(const SeqElement& x, const SeqElement& y) {
  std::set<Index> candidates;
  for (const auto& [k, v] : x.explicit_entries()) candidates.insert(k);
  for (const auto& [k, v] : y.explicit_entries()) candidates.insert(k);
  candidates.insert(std::max(x.tail_start(), y.tail_start()));
  for (auto k : candidates)
    if (x.at(k) != 0 && y.at(k) != 0) return k;
  return std::nullopt;
}

bool seq_is_disjoint(const SeqElement& x, const SeqElement& y) {
  require_member(x, "first sequence");
  require_member(y, "second sequence");
  return !seq_common_support(x, y).has_value();
}

std::variant<SeqElement, SeqWitness> seq_join_in_c(const SeqElement& x, const SeqElement& y) {
  for (const auto* v : {&x, &y}) {
    if (!seq_is_member(*v) || !seq_in_subspace(*v, Part::C)) {
      throw Error(Errc::NotInC, "arguments must be members of C");
    }
  }
  SeqElement m = pointwise_max(x, y);
  const Rational s = m.negative_weighted_sum();
  if (s > 0) return SeqWitness{NonDirected{s}};

  std::map<Index, Rational> entries = m.explicit_entries();
  entries[-1] = m.at(-1) - 2 * s;
  SeqElement c(std::move(entries), m.tail_start(), m.tail_value());
  if (!seq_in_subspace(c, Part::C) || !pointwise_leq(x, c) || !pointwise_leq(y, c)) {
    throw std::logic_error("adjusted upper bound is not an upper bound in C");
  }
  return c;
}

SeqWitness seq_nonpervasive_witness() {
  // The positive part of x^(1) in the cover is the unit sequence at -1.
  const SeqElement unit({{-1, Rational(1)}}, 0, 0);
  if (!(pointwise_max(x_n(1), SeqElement::zero()) == unit)) {
    throw std::logic_error("positive part of x^(1) is not supported at -1 alone");
  }
  // Membership of t·unit reads t/2 = 0, a linear condition with a nonzero
  // coefficient, so only t = 0 is admissible.
  if (unit.negative_weighted_sum() != Rational(1, 2) || seq_is_member(unit)) {
    throw std::logic_error("unit sequence at -1 unexpectedly satisfies the membership equation");
  }
  if (!seq_is_member(Rational(0) * unit)) throw std::logic_error("zero is not a member");
  return NonPervasive{};
}

SeqWitness seq_b_complement_witness() {
  const SeqElement b = sample_b();
  const SeqElement x1 = x_n(1);
  if (!seq_in_subspace(b, Part::B) || !seq_in_subspace(x1, Part::C)) {
    throw std::logic_error("witness sequences are not in B and C respectively");
  }
  const auto k = seq_common_support(b, x1);
  if (!k) throw std::logic_error("witness sequences are disjoint");
  return NonDisjoint{*k};
}

SeqElement x_n(Index n) {
  return SeqElement({{-n, Rational(1)}, {-(n + 1), Rational(-2)}}, std::max<Index>(0, -n + 1), 0);
}

SeqElement z_n(Index n) { return SeqElement({{n, Rational(1)}}, n + 1, 0); }

SeqElement sample_b() { return SeqElement({{-1, Rational(1)}}, 0, Rational(1, 2)); }

}  // namespace ordercone::seq
