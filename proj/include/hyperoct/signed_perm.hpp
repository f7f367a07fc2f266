#pragma once

// Signed permutations of {±1..±n} in window form, the type-B root system,
// length by root counting, signed cycle types, fixed subspaces, and the
// enumerated group table at desk scale.

#include "hyperoct/compositions.hpp"
#include "hyperoct/rational.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace hyperoct {

// Only the window (w(1),...,w(n)) is stored; images of negative indices
// follow from w(-i) = -w(i).
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> window);
  static SignedPerm identity(int n);

  int n() const { return static_cast<int>(win_.size()); }
  const std::vector<int>& window() const { return win_; }
  int image(int i) const;  // i in ±{1..n}
  SignedPerm inverse() const;
  bool is_identity() const;
  std::string str() const;  // "[-2,1]"

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> win_;
};

// (u*v)(i) = u(v(i)): the right factor acts first.
SignedPerm operator*(const SignedPerm& u, const SignedPerm& v);
SignedPerm conjugate(const SignedPerm& x, const SignedPerm& w);  // x w x^-1

SignedPerm gen_t(int n, int i);  // negates coordinate i
SignedPerm gen_s(int n, int i);  // swaps coordinates i, i+1
// by label: "t" (= "t1"), "s1".."s{n-1}", "t1".."tn"
SignedPerm generator(int n, const std::string& name);

struct Root {
  std::vector<int> coeff;

  bool is_positive() const;
  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::vector<Root> positive_roots(int n);  // e_i and e_j ± e_i (i < j); n² of them
Root root_image(const SignedPerm& w, const Root& a);

int length(const SignedPerm& w);  // #{a in Ψ+ : w(a) negative}
int sign_of(const SignedPerm& w);

// Cycles of the action on {1..n} through absolute values; a cycle whose
// sign product is -1 lands in the plus component. The convention is forced
// by signed_cycle_type(c_A) = lambda(A) and re-validated at startup.
DoublePartition signed_cycle_type(const SignedPerm& w);

int fixed_space_dim(const SignedPerm& w);  // = number of positive cycles
std::vector<std::vector<Rational>> fixed_space(const SignedPerm& w);

struct WindowHash {
  size_t operator()(const std::vector<int>& w) const noexcept;
};

// Sorted element list plus membership index; shared by the full group and
// by reflection subgroups.
struct ElementList {
  std::vector<SignedPerm> elems;
  std::unordered_map<std::vector<int>, int, WindowHash> index;

  void build_index();
  int size() const { return static_cast<int>(elems.size()); }
  int index_of(const SignedPerm& w) const;  // -1 when absent
  bool contains(const SignedPerm& w) const { return index_of(w) >= 0; }
};

class GroupTable {
 public:
  static constexpr int kDefaultMaxRank = 6;

  explicit GroupTable(int n, int max_rank = kDefaultMaxRank);

  int n() const { return n_; }
  int size() const { return list_.size(); }
  const SignedPerm& at(int i) const { return list_.elems[i]; }
  const ElementList& list() const { return list_; }
  int index_of(const SignedPerm& w) const;  // throws when absent
  int identity_index() const { return identity_; }
  int inverse_index(int i) const { return inverse_[i]; }
  int product_index(int i, int j) const { return index_of(list_.elems[i] * list_.elems[j]); }
  int length_of(int i) const { return lengths_[i]; }
  const std::vector<int>& lengths() const { return lengths_; }

 private:
  int n_ = 0;
  ElementList list_;
  std::vector<int> inverse_;
  std::vector<int> lengths_;
  int identity_ = -1;
};

}  // namespace hyperoct
