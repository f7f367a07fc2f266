#include "hyperoct/marks.hpp"

#include <stdexcept>

namespace hyperoct {

MarkTable build_mark_table(Workspace& ws) {
  MarkTable t;
  t.order = ws.dp_order();
  const int k = t.size();
  std::vector<SignedComposition> hats;
  std::vector<SignedPerm> cox;
  hats.reserve(k);
  for (int i = 0; i < k; ++i) {
    hats.push_back(hat(t.order.classes[i]));
    cox.push_back(ws.coxeter(hats.back()));
  }

  t.phi.assign(k, std::vector<long long>(k, 0));
  t.marks.assign(k, std::vector<long long>(k, 0));
  for (int row = 0; row < k; ++row)
    for (int col = 0; col < k; ++col) {
      t.phi[row][col] = ws.fixed_cosets_element(cox[col], hats[row]);
      t.marks[row][col] = ws.fixed_cosets_subgroup(hats[col], hats[row]);
      if (t.marks[row][col] != t.phi[row][col])
        throw std::logic_error("fixed points of c_B and of W_B diverge at " +
                               t.order.classes[row].str() + ", " + t.order.classes[col].str());
    }

  for (int row = 0; row < k; ++row) {
    if (t.phi[row][row] <= 0) throw std::logic_error("mark table diagonal not positive");
    for (int col = 0; col < row; ++col)
      if (t.phi[row][col] != 0)
        throw std::logic_error("mark table not triangular in the canonical order");
  }

  t.u = rat_inverse(rat_from_int(t.phi));
  if (!rat_is_identity(rat_mul(rat_from_int(t.phi), t.u)) ||
      !rat_is_identity(rat_mul(t.u, rat_from_int(t.phi))))
    throw std::logic_error("u is not a two-sided inverse of phi");
  return t;
}

long long mark(Workspace& ws, const SignedComposition& a, const SignedComposition& b) {
  const long long by_subgroup = ws.fixed_cosets_subgroup(b, a);
  const long long by_dba = static_cast<long long>(ws.d_ab_subset(b, a).members.size());
  const long long by_cox = ws.fixed_cosets_element(ws.coxeter(b), a);
  if (by_subgroup != by_dba || by_subgroup != by_cox)
    throw std::logic_error("mark characterizations diverge for " + a.str() + ", " + b.str());
  return by_subgroup;
}

long long conjugate_subgroup_count(Workspace& ws, const MarkTable& t, const SignedComposition& a) {
  const int l = t.order.index_of(lambda_of(a));
  const Rational via_u = Rational(static_cast<long long>(ws.d_reps(a).size())) * t.u[l][l];
  if (!is_integral(via_u)) throw std::logic_error("|D_A| * u_ll not integral for " + a.str());
  const long long count = static_cast<long long>(numerator(via_u));
  const auto [w_a, normal] = ws.normalizer(a);
  const long long via_normalizer = ws.table().size() / static_cast<long long>(normal.size());
  if (count != via_normalizer)
    throw std::logic_error("conjugate count routes disagree for " + a.str());
  return count;
}

long long containing_conjugates_count(Workspace& ws, const MarkTable& t, const SignedComposition& b,
                                      const SignedComposition& a) {
  const int l = t.order.index_of(lambda_of(a));
  const Rational reciprocal = Rational(1) / t.u[l][l];  // = |W(A)| on the diagonal
  if (!is_integral(reciprocal) || reciprocal != Rational(ws.w_of(a)))
    throw std::logic_error("u diagonal does not invert to |W(A)| for " + a.str());
  const long long dba = static_cast<long long>(ws.d_ab_subset(b, a).members.size());
  const long long wa = static_cast<long long>(numerator(reciprocal));
  if (dba % wa != 0)
    throw std::logic_error("|D_BA^subset| not divisible by |W(A)| for " + b.str() + ", " + a.str());
  return dba / wa;
}

Rational u_row_sum(const MarkTable& t, int row) {
  Rational sum(0);
  for (const Rational& v : t.u[row]) sum += v;
  return sum;
}

nlohmann::json dp_to_json(const DoublePartition& dp) {
  return nlohmann::json{{"plus", dp.plus()}, {"minus", dp.minus()}};
}

DoublePartition dp_from_json(const nlohmann::json& j) {
  return DoublePartition(j.at("plus").get<std::vector<int>>(), j.at("minus").get<std::vector<int>>());
}

nlohmann::json mark_table_to_json(const MarkTable& t, int n) {
  nlohmann::json order = nlohmann::json::array();
  for (const auto& dp : t.order.classes) order.push_back(dp_to_json(dp));
  nlohmann::json u = nlohmann::json::array();
  for (const auto& row : t.u) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const Rational& v : row) jrow.push_back(rational_str(v));
    u.push_back(std::move(jrow));
  }
  return nlohmann::json{{"n", n}, {"order", order}, {"phi", t.phi}, {"marks", t.marks}, {"u", u}};
}

MarkTable mark_table_from_json(const nlohmann::json& j) {
  MarkTable t;
  t.order.n = j.at("n").get<int>();
  for (const auto& jdp : j.at("order")) t.order.classes.push_back(dp_from_json(jdp));
  for (int i = 0; i < t.order.size(); ++i) t.order.position[t.order.classes[i]] = i;
  t.phi = j.at("phi").get<IMat>();
  t.marks = j.at("marks").get<IMat>();
  for (const auto& jrow : j.at("u")) {
    std::vector<Rational> row;
    for (const auto& cell : jrow) row.push_back(rational_parse(cell.get<std::string>()));
    t.u.push_back(std::move(row));
  }
  return t;
}

std::string mark_table_to_csv(const MarkTable& t) {
  std::string csv = "class";
  for (const auto& dp : t.order.classes) csv += ",\"" + dp.str() + "\"";
  csv += "\n";
  for (int row = 0; row < t.size(); ++row) {
    csv += "\"" + t.order.classes[row].str() + "\"";
    for (long long v : t.marks[row]) csv += "," + std::to_string(v);
    csv += "\n";
  }
  return csv;
}

}  // namespace hyperoct
