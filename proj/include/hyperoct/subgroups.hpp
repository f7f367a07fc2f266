#pragma once

// Reflection subgroups W_A of W_n: generating sets, simple systems,
// element enumeration, distinguished coset representatives of every
// flavor, normalizers, internal length, intersections, the parabolic
// closure, and the per-rank Workspace that caches all of it.

#include "hyperoct/signed_perm.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

struct ReflectionSubgroup {
  int n = 0;
  SignedComposition comp;
  std::vector<std::pair<std::string, SignedPerm>> generators;  // S_A, per block: t first, then s ascending
  std::vector<Root> simple_system;                             // Π_A, parallel to generators
  std::vector<int> block_offsets;                              // 0-based start of each part
  ElementList elements;

  long long order() const { return elements.size(); }
  bool contains(const SignedPerm& w) const { return elements.contains(w); }
};

std::vector<std::pair<std::string, SignedPerm>> subgroup_generators(const SignedComposition& a, int n);
ReflectionSubgroup build_subgroup(const SignedComposition& a, int n);
SignedPerm coxeter_element(const ReflectionSubgroup& g);

inline bool is_type_sn(const SignedPerm& w) { return fixed_space_dim(w) == 0; }

// Left cosets x·H of the subgroup generated by `gens` inside `ambient`,
// computed as orbits of right multiplication. Representatives are the
// lexicographically least member of each coset.
struct CosetPartition {
  int num_cosets = 0;
  std::vector<int> coset_id;  // per ambient element
  std::vector<int> reps;      // one ambient index per coset
};

CosetPartition left_cosets(const ElementList& ambient, const std::vector<SignedPerm>& gens);

struct CosetReps {
  enum class Kind { d_ab, d_ab_subset, d_ab_equiv };
  Kind kind;
  std::vector<int> members;  // indices into the full group table
};

// Per-rank cache of the group table, subgroups and coset data. Lazy: a
// Workspace for large n supports subgroup-only operations (the full table
// is built on first use and bounded by max_enum).
class Workspace {
 public:
  explicit Workspace(int n, int max_enum = GroupTable::kDefaultMaxRank);

  int n() const { return n_; }
  int max_enum() const { return max_enum_; }
  bool table_allowed() const { return n_ <= max_enum_; }

  const GroupTable& table();
  const std::vector<SignedComposition>& all_sc();
  const DPOrder& dp_order();
  const ReflectionSubgroup& subgroup(const SignedComposition& a);
  SignedPerm coxeter(const SignedComposition& a);  // product of S_A, no enumeration

  // D_A by the descent characterization, asserted against the unique
  // minimal-length representative of each coset.
  const std::vector<int>& d_reps(const SignedComposition& a);
  const std::vector<char>& d_flags(const SignedComposition& a);

  CosetReps d_ab(const SignedComposition& a, const SignedComposition& b);
  CosetReps d_ab_subset(const SignedComposition& a, const SignedComposition& b);
  CosetReps d_ab_equiv(const SignedComposition& a, const SignedComposition& b);

  const CosetPartition& cosets(const SignedComposition& a);
  long long fixed_cosets_element(const SignedPerm& c, const SignedComposition& a);
  long long fixed_cosets_subgroup(const SignedComposition& b, const SignedComposition& a);

  // (W(A), N_{W_n}(W_A)) as index sets; N is asserted equal to the
  // brute-force normalizer and to the product set W(A)·W_A.
  std::pair<std::vector<int>, std::vector<int>> normalizer(const SignedComposition& a);
  long long w_of(const SignedComposition& a);  // |W(A)|

  int length_in(const SignedComposition& a, const SignedPerm& w);
  SignedComposition intersection_composition(const SignedPerm& x, const SignedComposition& a,
                                             const SignedComposition& b);

  bool subgroup_contains(const SignedComposition& a, const SignedComposition& b);  // W_B ⊆ W_A
  bool preceq(const SignedComposition& a, const SignedComposition& b);
  const std::vector<SignedComposition>& subcompositions(const SignedComposition& a);
  const std::vector<std::vector<SignedComposition>>& subclasses(const SignedComposition& a);
  std::vector<SignedComposition> subclass_reps(const SignedComposition& a);

  std::vector<int> parabolic_closure(const SignedPerm& w);

  int element_class(int idx);
  const std::vector<long long>& class_sizes_exhaustive();

 private:
  void check_weight(const SignedComposition& a) const;

  int n_;
  int max_enum_;
  std::optional<GroupTable> table_;
  std::optional<std::vector<SignedComposition>> all_sc_;
  std::optional<DPOrder> dp_order_;
  std::map<SignedComposition, std::unique_ptr<ReflectionSubgroup>> subgroups_;
  std::map<SignedComposition, std::vector<int>> dreps_;
  std::map<SignedComposition, std::vector<char>> dflags_;
  std::map<std::pair<SignedComposition, SignedComposition>, std::vector<int>> dab_equiv_;
  std::map<SignedComposition, CosetPartition> cosets_;
  std::map<SignedComposition, std::vector<int>> length_in_;
  std::map<SignedComposition, std::vector<SignedComposition>> subcomps_;
  std::map<SignedComposition, std::vector<std::vector<SignedComposition>>> subclasses_;
  std::map<SignedComposition, long long> w_of_;
  std::optional<std::vector<int>> element_class_;
  std::optional<std::vector<long long>> class_sizes_;
};

// Startup self-check: signed_cycle_type(c_{hat(mu)}) == mu for every
// double partition of every n <= 4. Throws when the cycle-sign convention
// is broken; runs once per process.
void validate_cycle_sign_convention();

}  // namespace hyperoct
