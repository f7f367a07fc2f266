#include "hyperoct/burnside.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperoct {

namespace {

void check_same_ambient(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.n != y.n || x.coords.size() != y.coords.size())
    throw std::invalid_argument("Burnside elements over different ambients");
}

}  // namespace

BurnsideElement operator+(const BurnsideElement& x, const BurnsideElement& y) {
  check_same_ambient(x, y);
  BurnsideElement out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords[i];
  return out;
}

BurnsideElement operator-(const BurnsideElement& x, const BurnsideElement& y) {
  check_same_ambient(x, y);
  BurnsideElement out = x;
  for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= y.coords[i];
  return out;
}

BurnsideElement operator*(const Rational& c, const BurnsideElement& x) {
  BurnsideElement out = x;
  for (auto& v : out.coords) v *= c;
  return out;
}

bool is_zero(const BurnsideElement& x) {
  return std::all_of(x.coords.begin(), x.coords.end(), [](const Rational& v) { return v == 0; });
}

bool is_zero(const SubBurnsideElement& x) {
  return std::all_of(x.coords.begin(), x.coords.end(), [](const Rational& v) { return v == 0; });
}

HBAlgebra::HBAlgebra(Workspace& ws) : ws_(ws), mt_(build_mark_table(ws)) {}

BurnsideElement HBAlgebra::zero() const {
  return BurnsideElement{mt_.order.n, std::vector<Rational>(mt_.size(), Rational(0))};
}

BurnsideElement HBAlgebra::basis(int idx) const {
  BurnsideElement out = zero();
  out.coords[idx] = 1;
  return out;
}

BurnsideElement HBAlgebra::identity() const {
  return basis(mt_.order.index_of(DoublePartition({mt_.order.n}, {})));
}

const std::vector<long long>& HBAlgebra::structure_constants(int i, int j) {
  const auto key = std::make_pair(i, j);
  const auto it = sc_.find(key);
  if (it != sc_.end()) return it->second;

  const SignedComposition a = hat(mt_.order.classes[i]);
  const SignedComposition b = hat(mt_.order.classes[j]);
  std::vector<long long> coeffs(mt_.size(), 0);
  for (int xi : ws_.d_ab(a, b).members) {
    const SignedComposition c = ws_.intersection_composition(ws_.table().at(xi), a, b);
    ++coeffs[mt_.order.index_of(lambda_of(c))];
  }
  return sc_.emplace(key, std::move(coeffs)).first->second;
}

BurnsideElement HBAlgebra::multiply(const BurnsideElement& x, const BurnsideElement& y) {
  check_same_ambient(x, y);
  if (x.n != mt_.order.n) throw std::invalid_argument("element not over this algebra's ambient");
  BurnsideElement out = zero();
  for (int i = 0; i < dim(); ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y.coords[j] == 0) continue;
      const Rational f = x.coords[i] * y.coords[j];
      const auto& coeffs = structure_constants(i, j);
      for (int k = 0; k < dim(); ++k)
        if (coeffs[k] != 0) out.coords[k] += f * coeffs[k];
    }
  }
  return out;
}

Rational HBAlgebra::species(int lambda_idx, const BurnsideElement& x) {
  Rational out(0);
  for (int nu = 0; nu < dim(); ++nu)
    if (x.coords[nu] != 0) out += x.coords[nu] * mt_.marks[nu][lambda_idx];
  return out;
}

Rational HBAlgebra::species_general(const SignedComposition& a, const BurnsideElement& x) {
  Rational out(0);
  for (int nu = 0; nu < dim(); ++nu)
    if (x.coords[nu] != 0)
      out += x.coords[nu] * ws_.fixed_cosets_subgroup(a, hat(mt_.order.classes[nu]));
  return out;
}

BurnsideElement HBAlgebra::idempotent(int lambda_idx) const {
  return BurnsideElement{mt_.order.n, mt_.u[lambda_idx]};
}

std::vector<BurnsideElement> HBAlgebra::idempotents() const {
  std::vector<BurnsideElement> out;
  for (int i = 0; i < dim(); ++i) out.push_back(idempotent(i));
  return out;
}

long long HBAlgebra::class_size(int lambda_idx) {
  const Rational value = Rational(group_order(mt_.order.n)) * u_row_sum(mt_, lambda_idx);
  if (!is_integral(value) || value < 0)
    throw std::logic_error("class size from the u row sum is not a nonnegative integer");
  return static_cast<long long>(numerator(value));
}

std::vector<long long> HBAlgebra::class_sizes() {
  std::vector<long long> out;
  for (int i = 0; i < dim(); ++i) out.push_back(class_size(i));
  return out;
}

long long HBAlgebra::count_type_sn() {
  // distinct classes hit by positive compositions: exactly those with an
  // empty minus component
  long long total = 0;
  for (int i = 0; i < dim(); ++i)
    if (mt_.order.classes[i].minus().empty()) total += class_size(i);
  if (total != double_factorial_odd(mt_.order.n))
    throw std::logic_error("type-S_n count disagrees with the product of exponents");
  return total;
}

std::pair<Rational, Rational> HBAlgebra::theorem35(int lambda_idx, const SignedComposition& a) {
  const int n = mt_.order.n;
  const SignedComposition minus_ones(std::vector<int>(n, -1));
  Rational lhs(0);
  for (int mu = 0; mu < dim(); ++mu) {
    if (mt_.u[lambda_idx][mu] == 0) continue;
    const SignedComposition hm = hat(mt_.order.classes[mu]);
    long long a_count = 0;
    for (int xi : ws_.d_ab(hm, a).members)
      if (ws_.intersection_composition(ws_.table().at(xi), hm, a) == minus_ones) ++a_count;
    lhs += mt_.u[lambda_idx][mu] * a_count;
  }

  const SignedComposition hl = hat(mt_.order.classes[lambda_idx]);
  const int rank_hl = n - hl.lg_minus();  // |S_{hat lambda}|
  long long in_class = 0;
  for (const SignedPerm& w : ws_.subgroup(a).elements.elems)
    if (signed_cycle_type(w) == mt_.order.classes[lambda_idx]) ++in_class;
  Rational rhs = Rational(in_class, ws_.subgroup(a).order());
  if (rank_hl % 2 != 0) rhs = -rhs;
  return {lhs, rhs};
}

SubAlgebra::SubAlgebra(Workspace& ws, const SignedComposition& a) : ws_(ws), a_(a) {
  classes_ = ws.subclasses(a);
  // decreasing subgroup order, then lexicographic on the representative;
  // a linear extension of sub-conjugacy, so the fixed-point matrix below
  // comes out triangular
  std::sort(classes_.begin(), classes_.end(),
            [](const std::vector<SignedComposition>& x, const std::vector<SignedComposition>& y) {
              const long long ox = subgroup_order_formula(x.front());
              const long long oy = subgroup_order_formula(y.front());
              if (ox != oy) return ox > oy;
              return x.front() < y.front();
            });
  for (int i = 0; i < static_cast<int>(classes_.size()); ++i) {
    reps_.push_back(classes_[i].front());
    for (const SignedComposition& c : classes_[i]) class_of_[c] = i;
  }

  const ReflectionSubgroup& ambient = ws_.subgroup(a_);
  ambient_lengths_.reserve(ambient.elements.size());
  for (const SignedPerm& w : ambient.elements.elems) ambient_lengths_.push_back(length(w));

  for (const SignedComposition& rep : reps_) {
    std::vector<SignedPerm> gens;
    for (const auto& [label, g] : ws_.subgroup(rep).generators) gens.push_back(g);
    rep_cosets_.push_back(left_cosets(ambient.elements, gens));
  }

  const int k = dim();
  phi_.assign(k, std::vector<long long>(k, 0));
  for (int col = 0; col < k; ++col) {
    const SignedPerm cox = ws_.coxeter(reps_[col]);
    for (int row = 0; row < k; ++row) {
      const CosetPartition& part = rep_cosets_[row];
      long long count = 0;
      for (int rep : part.reps)
        if (part.coset_id[ambient.elements.index_of(cox * ambient.elements.elems[rep])] ==
            part.coset_id[rep])
          ++count;
      phi_[row][col] = count;
    }
  }
  for (int row = 0; row < k; ++row) {
    if (phi_[row][row] <= 0) throw std::logic_error("subalgebra fixed-point diagonal not positive");
    for (int col = 0; col < row; ++col)
      if (phi_[row][col] != 0) throw std::logic_error("subalgebra fixed-point matrix not triangular");
  }
  u_ = rat_inverse(rat_from_int(phi_));
  if (!rat_is_identity(rat_mul(rat_from_int(phi_), u_)) ||
      !rat_is_identity(rat_mul(u_, rat_from_int(phi_))))
    throw std::logic_error("subalgebra u is not a two-sided inverse");
}

int SubAlgebra::class_index(const SignedComposition& c) const {
  const auto it = class_of_.find(c);
  if (it == class_of_.end())
    throw std::invalid_argument(c.str() + " is not a subcomposition of " + a_.str());
  return it->second;
}

SubBurnsideElement SubAlgebra::zero() const {
  return SubBurnsideElement{a_, std::vector<Rational>(reps_.size(), Rational(0))};
}

SubBurnsideElement SubAlgebra::basis(int idx) const {
  SubBurnsideElement out = zero();
  out.coords[idx] = 1;
  return out;
}

SubBurnsideElement SubAlgebra::identity() const { return basis(class_index(a_)); }

const std::vector<int>& SubAlgebra::d_in_a(const SignedComposition& c) {
  const auto it = d_in_a_.find(c);
  if (it != d_in_a_.end()) return it->second;
  const ReflectionSubgroup& ambient = ws_.subgroup(a_);
  const ReflectionSubgroup& sub = ws_.subgroup(c);
  std::vector<int> out;
  for (int i = 0; i < ambient.elements.size(); ++i) {
    bool ok = true;
    for (const auto& [label, g] : sub.generators) {
      const SignedPerm prod = ambient.elements.elems[i] * g;
      if (length(prod) <= ambient_lengths_[i]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(i);
  }
  if (static_cast<long long>(out.size()) * sub.order() != ambient.order())
    throw std::logic_error("|D^A_C| * |W_C| != |W_A| for " + c.str() + " in " + a_.str());
  return d_in_a_.emplace(c, std::move(out)).first->second;
}

const std::vector<long long>& SubAlgebra::structure_constants(int i, int j) {
  const auto key = std::make_pair(i, j);
  const auto it = sc_.find(key);
  if (it != sc_.end()) return it->second;

  const ReflectionSubgroup& ambient = ws_.subgroup(a_);
  const SignedComposition& c = reps_[i];
  const SignedComposition& d = reps_[j];
  std::vector<char> in_dc(ambient.elements.size(), 0);
  for (int idx : d_in_a(c)) in_dc[idx] = 1;
  std::vector<long long> coeffs(dim(), 0);
  for (int idx : d_in_a(d)) {
    const SignedPerm& x = ambient.elements.elems[idx];
    const int inv_idx = ambient.elements.index_of(x.inverse());
    if (!in_dc[inv_idx]) continue;
    ++coeffs[class_index(ws_.intersection_composition(x, c, d))];
  }
  return sc_.emplace(key, std::move(coeffs)).first->second;
}

SubBurnsideElement SubAlgebra::multiply(const SubBurnsideElement& x, const SubBurnsideElement& y) {
  if (x.ambient != a_ || y.ambient != a_)
    throw std::invalid_argument("subalgebra elements over a different ambient");
  SubBurnsideElement out = zero();
  for (int i = 0; i < dim(); ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y.coords[j] == 0) continue;
      const Rational f = x.coords[i] * y.coords[j];
      const auto& coeffs = structure_constants(i, j);
      for (int k = 0; k < dim(); ++k)
        if (coeffs[k] != 0) out.coords[k] += f * coeffs[k];
    }
  }
  return out;
}

Rational SubAlgebra::species(int class_idx, const SubBurnsideElement& x) {
  if (x.ambient != a_) throw std::invalid_argument("subalgebra element over a different ambient");
  const ReflectionSubgroup& ambient = ws_.subgroup(a_);
  const ReflectionSubgroup& sc = ws_.subgroup(reps_[class_idx]);
  Rational out(0);
  for (int d = 0; d < dim(); ++d) {
    if (x.coords[d] == 0) continue;
    const CosetPartition& part = rep_cosets_[d];
    long long fixed = 0;
    for (int rep : part.reps) {
      bool ok = true;
      for (const auto& [label, g] : sc.generators)
        if (part.coset_id[ambient.elements.index_of(g * ambient.elements.elems[rep])] !=
            part.coset_id[rep]) {
          ok = false;
          break;
        }
      if (ok) ++fixed;
    }
    out += x.coords[d] * fixed;
  }
  return out;
}

SubBurnsideElement SubAlgebra::idempotent(int class_idx) const {
  return SubBurnsideElement{a_, u_[class_idx]};
}

nlohmann::json structure_tensor_to_json(HBAlgebra& hb) {
  const DPOrder& order = hb.table().order;
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& dp : order.classes) classes.push_back(dp_to_json(dp));
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < hb.dim(); ++i)
    for (int j = 0; j < hb.dim(); ++j) {
      const auto& coeffs = hb.structure_constants(i, j);
      for (int k = 0; k < hb.dim(); ++k)
        if (coeffs[k] != 0) entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"coeff", coeffs[k]}});
    }
  return nlohmann::json{{"n", order.n}, {"order", classes}, {"entries", entries}};
}

BurnsideElement induce(Workspace& ws, const SubAlgebra& sub, const SubBurnsideElement& x) {
  const DPOrder& order = ws.dp_order();
  BurnsideElement out{ws.n(), std::vector<Rational>(order.size(), Rational(0))};
  for (int i = 0; i < sub.dim(); ++i)
    if (x.coords[i] != 0) out.coords[order.index_of(lambda_of(sub.reps()[i]))] += x.coords[i];
  return out;
}

SubBurnsideElement restrict_to(Workspace& ws, SubAlgebra& sub, const BurnsideElement& x) {
  const DPOrder& order = ws.dp_order();
  SubBurnsideElement out = sub.zero();
  for (int l = 0; l < order.size(); ++l) {
    if (x.coords[l] == 0) continue;
    const SignedComposition c = hat(order.classes[l]);
    for (int di : ws.d_ab(c, sub.comp()).members) {
      const SignedComposition e = ws.intersection_composition(ws.table().at(di), c, sub.comp());
      out.coords[sub.class_index(e)] += x.coords[l];
    }
  }
  return out;
}

SubBurnsideElement restrict_between(Workspace& ws, SubAlgebra& sub_a, SubAlgebra& sub_b,
                                    const SubBurnsideElement& x) {
  if (!ws.subgroup_contains(sub_a.comp(), sub_b.comp()))
    throw std::invalid_argument("restriction target is not contained in the source");
  if (x.ambient != sub_a.comp()) throw std::invalid_argument("element over a different ambient");
  const ReflectionSubgroup& ambient_a = ws.subgroup(sub_a.comp());
  SubBurnsideElement out = sub_b.zero();
  for (int i = 0; i < sub_a.dim(); ++i) {
    if (x.coords[i] == 0) continue;
    const SignedComposition& c = sub_a.reps()[i];
    for (int di : ws.d_ab(c, sub_b.comp()).members) {
      const SignedPerm& d = ws.table().at(di);
      if (!ambient_a.contains(d)) continue;
      const SignedComposition e = ws.intersection_composition(d, c, sub_b.comp());
      out.coords[sub_b.class_index(e)] += x.coords[i];
    }
  }
  return out;
}

}  // namespace hyperoct
