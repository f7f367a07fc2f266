#pragma once

// Signed compositions SC(n) and double partitions DP(n), the maps between
// them, the order-formula for the reflection subgroup attached to a
// composition, and the canonical DP(n) ordering used by every matrix in
// the library.

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hyperoct {

// A finite sequence of nonzero integers; the absolute values sum to the
// ambient rank wherever one is required.
class SignedComposition {
 public:
  SignedComposition() = default;
  explicit SignedComposition(std::vector<int> parts);
  static SignedComposition parse(const std::string& text);  // "2,-1,1" or "(2,-1,1)"

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;  // |A|
  int lg() const { return static_cast<int>(parts_.size()); }
  int lg_plus() const;
  int lg_minus() const;
  bool is_positive() const;
  bool is_parabolic() const;      // a_i < 0 for every i >= 2
  bool is_semi_positive() const;  // a_i >= -1 for every i
  SignedComposition abs() const;  // A+
  SignedComposition concat(const SignedComposition& b) const;
  std::string str() const;  // "(2,-1,1)"

  friend bool operator==(const SignedComposition&, const SignedComposition&) = default;
  friend auto operator<=>(const SignedComposition&, const SignedComposition&) = default;

 private:
  std::vector<int> parts_;
};

// A pair of partitions (stored weakly increasing) with total weight n.
class DoublePartition {
 public:
  DoublePartition() = default;
  DoublePartition(std::vector<int> plus, std::vector<int> minus);

  const std::vector<int>& plus() const { return plus_; }
  const std::vector<int>& minus() const { return minus_; }
  int weight() const;
  int weight_plus() const;
  std::string str() const;  // "(2|1,1)"

  friend bool operator==(const DoublePartition&, const DoublePartition&) = default;
  friend auto operator<=>(const DoublePartition&, const DoublePartition&) = default;

 private:
  std::vector<int> plus_, minus_;
};

// All partitions of n, parts weakly increasing, deterministic order.
std::vector<std::vector<int>> partitions_of(int n);

// Deterministic enumerations. |SC(n)| = 2*3^(n-1).
std::vector<SignedComposition> enumerate_sc(int n);
std::vector<DoublePartition> enumerate_dp(int n);

DoublePartition lambda_of(const SignedComposition& a);
SignedComposition hat(const DoublePartition& mu);

// Product over the parts: 2^a * a! for a > 0 and |a|! for a < 0.
long long subgroup_order_formula(const SignedComposition& a);
long long group_order(int n);  // 2^n * n!
long long double_factorial_odd(int n);  // (2n-1)!!

// The ordering that makes every fixed-point matrix triangular: sort by
// decreasing subgroup order, tie-break by decreasing |plus|, then
// lexicographically.
struct DPOrder {
  int n = 0;
  std::vector<DoublePartition> classes;
  std::map<DoublePartition, int> position;

  int size() const { return static_cast<int>(classes.size()); }
  int index_of(const DoublePartition& dp) const;
};

DPOrder canonical_dp_order(int n);

}  // namespace hyperoct
