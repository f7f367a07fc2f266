#include "hyperoct/mr_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperoct {

MRElement operator+(const MRElement& x, const MRElement& y) {
  MRElement out = x;
  for (const auto& [comp, v] : y.coords) {
    auto& slot = out.coords[comp];
    slot += v;
    if (slot == 0) out.coords.erase(comp);
  }
  return out;
}

MRElement operator-(const MRElement& x, const MRElement& y) {
  MRElement out = x;
  for (const auto& [comp, v] : y.coords) {
    auto& slot = out.coords[comp];
    slot -= v;
    if (slot == 0) out.coords.erase(comp);
  }
  return out;
}

MRElement operator*(const Rational& c, const MRElement& x) {
  MRElement out;
  if (c == 0) return out;
  for (const auto& [comp, v] : x.coords) out.coords.emplace(comp, c * v);
  return out;
}

bool is_zero(const MRElement& x) { return x.coords.empty(); }

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
  ClassFunction out = f;
  for (size_t i = 0; i < out.values.size(); ++i) out.values[i] *= g.values[i];
  return out;
}

MRAlgebra::MRAlgebra(Workspace& ws) : ws_(ws), comps_(ws.all_sc()) {
  for (int i = 0; i < static_cast<int>(comps_.size()); ++i) comp_idx_[comps_[i]] = i;
}

MRElement MRAlgebra::d(const SignedComposition& a) {
  if (!comp_idx_.count(a)) throw std::invalid_argument(a.str() + " is not a composition of this rank");
  MRElement out;
  out.coords[a] = 1;
  return out;
}

GroupAlgebraVector MRAlgebra::to_group_algebra(const MRElement& x) {
  const GroupTable& t = ws_.table();
  GroupAlgebraVector out(t.size(), Rational(0));
  for (const auto& [comp, coeff] : x.coords)
    for (int idx : ws_.d_reps(comp)) out[idx] += coeff;
  return out;
}

void MRAlgebra::ensure_solver() {
  if (solver_ready_) return;
  const GroupTable& t = ws_.table();
  const int rows = t.size();
  const int cols = static_cast<int>(comps_.size());

  indicator_.assign(cols, std::vector<char>(rows, 0));
  for (int c = 0; c < cols; ++c)
    for (int idx : ws_.d_reps(comps_[c])) indicator_[c][idx] = 1;

  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = indicator_[c][r];
  pivot_rows_ = bareiss_pivot_rows(std::move(m));

  RatMat square(cols, std::vector<Rational>(cols));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) square[i][j] = indicator_[j][pivot_rows_[i]];
  pinv_ = rat_inverse(square);
  solver_ready_ = true;
}

MRElement MRAlgebra::expand(const GroupAlgebraVector& vec) {
  ensure_solver();
  const int cols = static_cast<int>(comps_.size());
  std::vector<Rational> xs(cols, Rational(0));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j)
      if (pinv_[i][j] != 0) xs[i] += pinv_[i][j] * vec[pivot_rows_[j]];

  // the candidate solution must reproduce the vector on every coordinate
  GroupAlgebraVector check(vec.size(), Rational(0));
  for (int c = 0; c < cols; ++c) {
    if (xs[c] == 0) continue;
    for (size_t r = 0; r < vec.size(); ++r)
      if (indicator_[c][r]) check[r] += xs[c];
  }
  if (check != vec)
    throw std::runtime_error("group-algebra vector is not in the span of the d basis");

  MRElement out;
  for (int c = 0; c < cols; ++c)
    if (xs[c] != 0) out.coords[comps_[c]] = xs[c];
  return out;
}

MRElement MRAlgebra::expand_integer(const std::vector<long long>& vec) {
  ensure_solver();
  const int cols = static_cast<int>(comps_.size());
  std::vector<Rational> xs(cols, Rational(0));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j)
      if (pinv_[i][j] != 0) xs[i] += pinv_[i][j] * vec[pivot_rows_[j]];

  const bool integral = std::all_of(xs.begin(), xs.end(), [](const Rational& v) { return is_integral(v); });
  if (integral) {
    std::vector<long long> check(vec.size(), 0);
    for (int c = 0; c < cols; ++c) {
      const long long v = static_cast<long long>(numerator(xs[c]));
      if (v == 0) continue;
      for (size_t r = 0; r < vec.size(); ++r)
        if (indicator_[c][r]) check[r] += v;
    }
    if (check != vec)
      throw std::runtime_error("group-algebra vector is not in the span of the d basis");
  } else {
    GroupAlgebraVector rat(vec.begin(), vec.end());
    GroupAlgebraVector check(vec.size(), Rational(0));
    for (int c = 0; c < cols; ++c) {
      if (xs[c] == 0) continue;
      for (size_t r = 0; r < vec.size(); ++r)
        if (indicator_[c][r]) check[r] += xs[c];
    }
    if (check != rat)
      throw std::runtime_error("group-algebra vector is not in the span of the d basis");
  }

  MRElement out;
  for (int c = 0; c < cols; ++c)
    if (xs[c] != 0) out.coords[comps_[c]] = xs[c];
  return out;
}

MRElement MRAlgebra::multiply(const SignedComposition& a, const SignedComposition& b) {
  const GroupTable& t = ws_.table();
  std::vector<long long> acc(t.size(), 0);
  for (int ui : ws_.d_reps(a)) {
    const SignedPerm& u = t.at(ui);
    for (int vi : ws_.d_reps(b)) ++acc[t.index_of(u * t.at(vi))];
  }
  return expand_integer(acc);
}

MRElement MRAlgebra::multiply(const MRElement& x, const MRElement& y) {
  const GroupTable& t = ws_.table();
  const GroupAlgebraVector xv = to_group_algebra(x);
  const GroupAlgebraVector yv = to_group_algebra(y);
  GroupAlgebraVector acc(t.size(), Rational(0));
  for (int i = 0; i < t.size(); ++i) {
    if (xv[i] == 0) continue;
    for (int j = 0; j < t.size(); ++j) {
      if (yv[j] == 0) continue;
      acc[t.product_index(i, j)] += xv[i] * yv[j];
    }
  }
  return expand(acc);
}

const std::vector<long long>& MRAlgebra::theta_row(const SignedComposition& a) {
  const auto it = theta_rows_.find(a);
  if (it != theta_rows_.end()) return it->second;
  const DPOrder& order = ws_.dp_order();
  std::vector<long long> row(order.size());
  for (int mu = 0; mu < order.size(); ++mu)
    row[mu] = ws_.fixed_cosets_element(ws_.coxeter(hat(order.classes[mu])), a);
  return theta_rows_.emplace(a, std::move(row)).first->second;
}

ClassFunction MRAlgebra::theta(const MRElement& x) {
  const DPOrder& order = ws_.dp_order();
  ClassFunction out{std::vector<Rational>(order.size(), Rational(0))};
  for (const auto& [comp, coeff] : x.coords) {
    const auto& row = theta_row(comp);
    for (int mu = 0; mu < order.size(); ++mu)
      if (row[mu] != 0) out.values[mu] += coeff * row[mu];
  }
  return out;
}

Rational MRAlgebra::tau(int lambda_idx, const MRElement& x) { return theta(x).values[lambda_idx]; }

IMat MRAlgebra::theta_matrix() {
  const DPOrder& order = ws_.dp_order();
  IMat m(order.size(), std::vector<long long>(comps_.size()));
  for (size_t c = 0; c < comps_.size(); ++c) {
    const auto& row = theta_row(comps_[c]);
    for (int mu = 0; mu < order.size(); ++mu) m[mu][c] = row[mu];
  }
  return m;
}

std::vector<MRElement> MRAlgebra::kernel_basis() {
  std::vector<MRElement> out;
  for (const SignedComposition& a : comps_) {
    const SignedComposition rep = hat(lambda_of(a));
    if (a == rep) continue;
    out.push_back(d(a) - d(rep));
  }
  return out;
}

BurnsideElement MRAlgebra::psi(const MRElement& x) {
  const DPOrder& order = ws_.dp_order();
  BurnsideElement out{ws_.n(), std::vector<Rational>(order.size(), Rational(0))};
  for (const auto& [comp, coeff] : x.coords) out.coords[order.index_of(lambda_of(comp))] += coeff;
  return out;
}

int MRAlgebra::d_rank() {
  ensure_solver();
  return static_cast<int>(pivot_rows_.size());
}

}  // namespace hyperoct
