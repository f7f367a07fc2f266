#pragma once

// The Mantaci-Reutenauer algebra realized concretely inside the rational
// group algebra of W_n: coset sums d_A, exact product expansion in the
// d basis by a factored linear solve, the character map theta, the
// evaluations tau, the kernel of theta, and the surjection psi onto HB.

#include "hyperoct/burnside.hpp"

#include <map>
#include <vector>

namespace hyperoct {

// Dense coordinate vector over the group table.
using GroupAlgebraVector = std::vector<Rational>;

struct MRElement {
  std::map<SignedComposition, Rational> coords;

  friend bool operator==(const MRElement&, const MRElement&) = default;
};

MRElement operator+(const MRElement& x, const MRElement& y);
MRElement operator-(const MRElement& x, const MRElement& y);
MRElement operator*(const Rational& c, const MRElement& x);
bool is_zero(const MRElement& x);

struct ClassFunction {
  std::vector<Rational> values;  // at c_lambda, over the canonical DP order

  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g);

class MRAlgebra {
 public:
  explicit MRAlgebra(Workspace& ws);

  Workspace& ws() { return ws_; }
  const std::vector<SignedComposition>& comps() const { return comps_; }

  MRElement d(const SignedComposition& a);
  GroupAlgebraVector to_group_algebra(const MRElement& x);

  // Expansion of an arbitrary group-algebra vector over the d basis;
  // throws when the vector lies outside the span.
  MRElement expand(const GroupAlgebraVector& vec);

  MRElement multiply(const SignedComposition& a, const SignedComposition& b);
  MRElement multiply(const MRElement& x, const MRElement& y);

  ClassFunction theta(const MRElement& x);
  Rational tau(int lambda_idx, const MRElement& x);
  IMat theta_matrix();  // DP rows, SC columns, on the d basis

  std::vector<MRElement> kernel_basis();  // d_A - d_{hat(lambda(A))}
  BurnsideElement psi(const MRElement& x);

  int d_rank();  // number of pivots of the d-basis matrix

 private:
  void ensure_solver();
  MRElement expand_integer(const std::vector<long long>& vec);
  const std::vector<long long>& theta_row(const SignedComposition& a);

  Workspace& ws_;
  std::vector<SignedComposition> comps_;
  std::map<SignedComposition, int> comp_idx_;
  std::vector<std::vector<char>> indicator_;  // per comp, over the table
  bool solver_ready_ = false;
  std::vector<int> pivot_rows_;
  RatMat pinv_;
  std::map<SignedComposition, std::vector<long long>> theta_rows_;
};

}  // namespace hyperoct
