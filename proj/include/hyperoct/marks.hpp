#pragma once

// The signed table of marks of W_n: the fixed-point matrix (phi), the
// mark matrix computed from full subgroup actions, and the exact rational
// inverse (u) that drives the primitive idempotents.

#include "hyperoct/ratmat.hpp"
#include "hyperoct/subgroups.hpp"

#include <json.hpp>

#include <string>

namespace hyperoct {

struct MarkTable {
  DPOrder order;
  IMat phi;    // phi[l][m]: cosets of W_{hat l} fixed by the Coxeter element of class m
  IMat marks;  // mu_{l m}: cosets fixed by all of W_{hat m}; equals phi entrywise
  RatMat u;    // exact two-sided inverse of phi

  int size() const { return order.size(); }
};

// Builds phi row by row, checks triangularity with positive diagonal,
// inverts exactly, and cross-fills the marks from full subgroup actions.
MarkTable build_mark_table(Workspace& ws);

// mu_AB: cosets of W_A fixed by W_B; asserted equal to |D_BA^subset| and
// to the count fixed by the Coxeter element of B alone.
long long mark(Workspace& ws, const SignedComposition& a, const SignedComposition& b);

// |[W_A]| = |D_A| * u_{ll}; asserted equal to |W_n| / |N(W_A)|.
long long conjugate_subgroup_count(Workspace& ws, const MarkTable& t, const SignedComposition& a);

// |{conjugates of W_A containing W_B}| = |D_BA^subset| / |W(A)|.
long long containing_conjugates_count(Workspace& ws, const MarkTable& t, const SignedComposition& b,
                                      const SignedComposition& a);

Rational u_row_sum(const MarkTable& t, int row);

nlohmann::json dp_to_json(const DoublePartition& dp);
DoublePartition dp_from_json(const nlohmann::json& j);
nlohmann::json mark_table_to_json(const MarkTable& t, int n);
MarkTable mark_table_from_json(const nlohmann::json& j);
std::string mark_table_to_csv(const MarkTable& t);

}  // namespace hyperoct
