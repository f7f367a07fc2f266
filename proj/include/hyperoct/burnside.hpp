#pragma once

// The generalized Burnside algebra HB(W_n): exact-rational coordinate
// vectors over the classes [W/W_A], multiplication through double-coset
// decomposition, species maps, primitive idempotents, the subgroup
// algebras HB(W_A), and restriction/induction between them.

#include "hyperoct/marks.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hyperoct {

struct BurnsideElement {
  int n = 0;
  std::vector<Rational> coords;  // over the canonical DP order

  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;
};

BurnsideElement operator+(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement operator-(const BurnsideElement& x, const BurnsideElement& y);
BurnsideElement operator*(const Rational& c, const BurnsideElement& x);
bool is_zero(const BurnsideElement& x);

class HBAlgebra {
 public:
  explicit HBAlgebra(Workspace& ws);

  Workspace& ws() { return ws_; }
  const MarkTable& table() const { return mt_; }
  int dim() const { return mt_.size(); }

  BurnsideElement zero() const;
  BurnsideElement basis(int idx) const;  // [W/W_{hat lambda}]
  BurnsideElement identity() const;      // class of A = (n)

  const std::vector<long long>& structure_constants(int i, int j);
  BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y);

  Rational species(int lambda_idx, const BurnsideElement& x);
  Rational species_general(const SignedComposition& a, const BurnsideElement& x);

  BurnsideElement idempotent(int lambda_idx) const;  // e_lambda = u-row over the basis
  std::vector<BurnsideElement> idempotents() const;

  long long class_size(int lambda_idx);  // |W_n| * (row sum of u), asserted integral
  std::vector<long long> class_sizes();
  long long count_type_sn();  // sum over classes with empty minus part; asserted (2n-1)!!

  // Left side: sum_mu u_{lambda mu} * #{x in D_{hat mu, A} with trivial
  // intersection}. Right side: sign * |C(lambda) ∩ W_A| / |W_A|.
  std::pair<Rational, Rational> theorem35(int lambda_idx, const SignedComposition& a);

 private:
  Workspace& ws_;
  MarkTable mt_;
  std::map<std::pair<int, int>, std::vector<long long>> sc_;
};

struct SubBurnsideElement {
  SignedComposition ambient;  // the A of HB(W_A)
  std::vector<Rational> coords;

  friend bool operator==(const SubBurnsideElement&, const SubBurnsideElement&) = default;
};

bool is_zero(const SubBurnsideElement& x);

// HB(W_A): basis indexed by the W_A-conjugacy classes of subcompositions
// of A, with its own fixed-point matrix built and inverted by the same
// machinery as the full group.
class SubAlgebra {
 public:
  SubAlgebra(Workspace& ws, const SignedComposition& a);

  const SignedComposition& comp() const { return a_; }
  int dim() const { return static_cast<int>(reps_.size()); }
  const std::vector<SignedComposition>& reps() const { return reps_; }
  const std::vector<std::vector<SignedComposition>>& classes() const { return classes_; }
  int class_index(const SignedComposition& c) const;
  const IMat& phi() const { return phi_; }
  const RatMat& u() const { return u_; }

  SubBurnsideElement zero() const;
  SubBurnsideElement basis(int idx) const;
  SubBurnsideElement identity() const;

  // D^A_C = D_C ∩ W_A by the descent condition in the ambient length.
  const std::vector<int>& d_in_a(const SignedComposition& c);

  const std::vector<long long>& structure_constants(int i, int j);
  SubBurnsideElement multiply(const SubBurnsideElement& x, const SubBurnsideElement& y);
  Rational species(int class_idx, const SubBurnsideElement& x);  // s^A_C
  SubBurnsideElement idempotent(int class_idx) const;

 private:
  Workspace& ws_;
  SignedComposition a_;
  std::vector<std::vector<SignedComposition>> classes_;
  std::vector<SignedComposition> reps_;
  std::map<SignedComposition, int> class_of_;
  std::vector<int> ambient_lengths_;        // per W_A element
  std::vector<CosetPartition> rep_cosets_;  // cosets of W_{rep} inside W_A
  IMat phi_;
  RatMat u_;
  std::map<SignedComposition, std::vector<int>> d_in_a_;
  std::map<std::pair<int, int>, std::vector<long long>> sc_;
};

// Sparse tensor of the [W/W_A] basis products, classes labelled by their
// position in the canonical order.
nlohmann::json structure_tensor_to_json(HBAlgebra& hb);

BurnsideElement induce(Workspace& ws, const SubAlgebra& sub, const SubBurnsideElement& x);
SubBurnsideElement restrict_to(Workspace& ws, SubAlgebra& sub, const BurnsideElement& x);
// res from HB(W_A) to HB(W_B) for W_B ⊆ W_A.
SubBurnsideElement restrict_between(Workspace& ws, SubAlgebra& sub_a, SubAlgebra& sub_b,
                                    const SubBurnsideElement& x);

}  // namespace hyperoct
