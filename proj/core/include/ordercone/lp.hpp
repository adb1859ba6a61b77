#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ordercone/linalg.hpp"

namespace ordercone {

/// {x : A x >= b}. Variables are free; sign constraints are ordinary rows.
struct Polyhedron {
  MatrixQ a;
  VectorQ b;

  std::size_t variables() const noexcept { return a.cols(); }
  bool contains(const VectorQ& x) const;
};

/// Accumulates rows of a Polyhedron.
class PolyhedronBuilder {
 public:
  explicit PolyhedronBuilder(std::size_t variables) : n_(variables) {}

  PolyhedronBuilder& at_least(VectorQ row, Rational rhs);   // row·x >= rhs
  PolyhedronBuilder& at_most(VectorQ row, Rational rhs);    // row·x <= rhs
  PolyhedronBuilder& equal(VectorQ row, Rational rhs);      // both of the above
  /// F x >= lower, componentwise.
  PolyhedronBuilder& rows_at_least(const MatrixQ& f, const VectorQ& lower);
  PolyhedronBuilder& rows_at_most(const MatrixQ& f, const VectorQ& upper);

  Polyhedron build() const;

 private:
  std::size_t n_;
  std::vector<VectorQ> rows_;
  VectorQ rhs_;
};

enum class Sense { Maximize, Minimize };

struct Optimal {
  Rational value;
  VectorQ point;
};
struct Infeasible {};
struct Unbounded {};

using LPOutcome = std::variant<Optimal, Infeasible, Unbounded>;

/// Exact two-phase simplex with Bland's rule. Free variables are eliminated
/// through a maximal independent row subset (chosen greedily in row order),
/// so the tableau is carried over slack variables only; components of x in
/// ker A are fixed to zero. The returned point is a basic solution and the
/// result is a deterministic function of the input.
///
/// Throws Error(DimensionMismatch) if the objective length differs from the
/// number of variables or rows(A) != size(b).
LPOutcome lp(const VectorQ& objective, const Polyhedron& p, Sense sense);

/// Some point of p, or nullopt when p is empty.
std::optional<VectorQ> feasible_point(const Polyhedron& p);

inline bool is_optimal(const LPOutcome& o) { return std::holds_alternative<Optimal>(o); }

}  // namespace ordercone
