#include "hyperoct/verify.hpp"

#include "hyperoct/mr_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperoct {

namespace {

struct Collector {
  std::vector<CheckResult> results;

  template <class F>
  void run(const std::string& name, F&& f) {
    try {
      results.push_back({name, true, ""});
      if (!f()) results.back() = {name, false, "predicate failed"};
    } catch (const std::exception& e) {
      results.back() = {name, false, e.what()};
    }
  }
};

std::vector<CheckResult> suite_marks(int n) {
  Collector c;
  Workspace ws(n, std::max(n, GroupTable::kDefaultMaxRank));
  MarkTable t = build_mark_table(ws);  // asserts triangularity, inverses, phi == marks
  c.run("mark table builds with triangularity and exact inverse", [] { return true; });

  if (n == 2) {
    const IMat phi_expected = {{1, 1, 1, 1, 1},
                               {0, 2, 2, 0, 2},
                               {0, 0, 2, 0, 4},
                               {0, 0, 0, 2, 4},
                               {0, 0, 0, 0, 8}};
    const RatMat u_expected = {
        {Rational(1), Rational(-1, 2), Rational(0), Rational(-1, 2), Rational(1, 4)},
        {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(0), Rational(1, 8)},
        {Rational(0), Rational(0), Rational(1, 2), Rational(0), Rational(-1, 4)},
        {Rational(0), Rational(0), Rational(0), Rational(1, 2), Rational(-1, 4)},
        {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1, 8)}};
    c.run("n=2 phi matrix matches the reference table", [&] { return t.phi == phi_expected; });
    c.run("n=2 u matrix matches the reference table", [&] { return t.u == u_expected; });
  }

  c.run("u diagonal equals 1/|W(hat lambda)|", [&] {
    for (int i = 0; i < t.size(); ++i)
      if (t.u[i][i] != Rational(1, ws.w_of(hat(t.order.classes[i])))) return false;
    return true;
  });

  c.run("u_{(n),(-1..-1)} = (-1)^n/(2n)", [&] {
    const int top = t.order.index_of(DoublePartition({n}, {}));
    const int last = t.order.index_of(DoublePartition({}, std::vector<int>(n, 1)));
    Rational expected(1, 2 * n);
    if (n % 2 != 0) expected = -expected;
    return t.u[top][last] == expected;
  });

  c.run("sign column formula for every class below (n)", [&] {
    const int last = t.order.index_of(DoublePartition({}, std::vector<int>(n, 1)));
    for (int l = 0; l < t.size(); ++l) {
      if (t.order.classes[l] == DoublePartition({n}, {})) continue;
      const Rational size_over_group = u_row_sum(t, l);  // |C(lambda)| / |W_n|
      const int rank = n - hat(t.order.classes[l]).lg_minus();
      const Rational expected = (rank % 2 == 0) ? size_over_group : -size_over_group;
      if (t.u[l][last] != expected) return false;
    }
    return true;
  });

  c.run("|S_A| = n - lg^-(A) and |D_A|*|W_A| = |W_n|", [&] {
    std::vector<SignedComposition> comps;
    if (n <= 4)
      comps = ws.all_sc();
    else
      for (const auto& dp : t.order.classes) comps.push_back(hat(dp));
    for (const auto& a : comps) {
      if (static_cast<int>(subgroup_generators(a, n).size()) != n - a.lg_minus()) return false;
      const long long d = static_cast<long long>(ws.d_reps(a).size());
      if (d * ws.subgroup(a).order() != ws.table().size()) return false;
    }
    return true;
  });
  return c.results;
}

std::vector<CheckResult> suite_idempotents(int n) {
  Collector c;
  Workspace ws(n);
  HBAlgebra hb(ws);
  const int k = hb.dim();

  c.run("e_l e_m = delta_lm e_l for every pair", [&] {
    for (int l = 0; l < k; ++l)
      for (int m = 0; m < k; ++m) {
        const BurnsideElement prod = hb.multiply(hb.idempotent(l), hb.idempotent(m));
        if (l == m && prod != hb.idempotent(l)) return false;
        if (l != m && !is_zero(prod)) return false;
      }
    return true;
  });

  c.run("the idempotents sum to the identity", [&] {
    BurnsideElement sum = hb.zero();
    for (int l = 0; l < k; ++l) sum = sum + hb.idempotent(l);
    return sum == hb.identity();
  });

  c.run("s_l(e_m) = delta_lm", [&] {
    for (int l = 0; l < k; ++l)
      for (int m = 0; m < k; ++m)
        if (hb.species(l, hb.idempotent(m)) != Rational(l == m ? 1 : 0)) return false;
    return true;
  });

  c.run("x = sum of s_l(x) e_l on the basis", [&] {
    for (int i = 0; i < k; ++i) {
      BurnsideElement sum = hb.zero();
      for (int l = 0; l < k; ++l) sum = sum + hb.species(l, hb.basis(i)) * hb.idempotent(l);
      if (sum != hb.basis(i)) return false;
    }
    return true;
  });
  return c.results;
}

std::vector<CheckResult> suite_counting(int n) {
  Collector c;
  Workspace ws(n, std::max(n, GroupTable::kDefaultMaxRank));
  HBAlgebra hb(ws);

  c.run("class sizes from row sums are integers summing to |W_n|", [&] {
    long long total = 0;
    for (long long s : hb.class_sizes()) total += s;
    return total == group_order(n);
  });

  if (n <= 4) {
    c.run("class sizes match the exhaustive classification", [&] {
      return hb.class_sizes() == ws.class_sizes_exhaustive();
    });
    c.run("type-S_n count equals the number of fixed-space-free elements", [&] {
      long long fix_free = 0;
      for (int i = 0; i < ws.table().size(); ++i)
        if (fixed_space_dim(ws.table().at(i)) == 0) ++fix_free;
      return hb.count_type_sn() == fix_free;
    });
    c.run("the Coxeter class has |W_n|/(2n) elements", [&] {
      return hb.class_size(hb.table().order.index_of(DoublePartition({n}, {}))) ==
             group_order(n) / (2LL * n);
    });
    c.run("|[W_A]| via |D_A| u_{ll} equals the normalizer index", [&] {
      for (const auto& a : ws.all_sc())
        if (conjugate_subgroup_count(ws, hb.table(), a) <= 0) return false;
      return true;
    });
  }

  c.run("type-S_n count equals the product of exponents", [&] {
    return hb.count_type_sn() == double_factorial_odd(n);
  });

  if (n <= 3) {
    c.run("mark(A,B) = #containing-conjugates * |W(A)|", [&] {
      for (const auto& a : ws.all_sc())
        for (const auto& b : ws.all_sc())
          if (mark(ws, a, b) != containing_conjugates_count(ws, hb.table(), b, a) * ws.w_of(a))
            return false;
      return true;
    });
  }
  return c.results;
}

std::vector<CheckResult> suite_parity(int n) {
  Collector c;
  Workspace ws(n);

  c.run("generator relations hold", [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (gen_t(n, i) * gen_t(n, j) != gen_t(n, j) * gen_t(n, i)) return false;
    for (int i = 1; i <= n; ++i)
      if (!(gen_t(n, i) * gen_t(n, i)).is_identity()) return false;
    for (int i = 1; i < n; ++i)
      if (!(gen_s(n, i) * gen_s(n, i)).is_identity()) return false;
    if (n >= 2) {
      const SignedPerm t1 = gen_t(n, 1), s1 = gen_s(n, 1);
      if (t1 * s1 * t1 * s1 != s1 * t1 * s1 * t1) return false;
      for (int i = 2; i < n; ++i)
        if (t1 * gen_s(n, i) != gen_s(n, i) * t1) return false;
    }
    for (int i = 1; i + 1 < n; ++i) {
      const SignedPerm a = gen_s(n, i), b = gen_s(n, i + 1);
      if (a * b * a != b * a * b) return false;
    }
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        if (gen_s(n, i) * gen_s(n, j) != gen_s(n, j) * gen_s(n, i)) return false;
    for (int i = 2; i <= n; ++i)
      if (gen_t(n, i) != gen_s(n, i - 1) * gen_t(n, i - 1) * gen_s(n, i - 1)) return false;
    return true;
  });

  c.run("l(w) = l_A(w) mod 2 and the sign restricts, for every A and w", [&] {
    for (const auto& a : ws.all_sc())
      for (const SignedPerm& w : ws.subgroup(a).elements.elems) {
        const int la = ws.length_in(a, w);
        if ((length(w) - la) % 2 != 0) return false;
        if (sign_of(w) != (la % 2 == 0 ? 1 : -1)) return false;
      }
    return true;
  });
  return c.results;
}

std::vector<CheckResult> suite_mr(int n) {
  Collector c;
  Workspace ws(n);
  HBAlgebra hb(ws);
  MRAlgebra mr(ws);
  const auto& comps = mr.comps();
  const int dp = ws.dp_order().size();

  c.run("the d_A are linearly independent", [&] {
    return mr.d_rank() == static_cast<int>(comps.size());
  });

  c.run("every d_A d_B expands in the d basis with theta multiplicative", [&] {
    for (const auto& a : comps)
      for (const auto& b : comps) {
        const MRElement prod = mr.multiply(a, b);
        if (mr.theta(prod) != pointwise_product(mr.theta(mr.d(a)), mr.theta(mr.d(b)))) return false;
      }
    return true;
  });

  c.run("psi is multiplicative", [&] {
    for (const auto& a : comps)
      for (const auto& b : comps)
        if (mr.psi(mr.multiply(a, b)) != hb.multiply(mr.psi(mr.d(a)), mr.psi(mr.d(b)))) return false;
    return true;
  });

  c.run("coefficients match intersections when A parabolic or B semi-positive", [&] {
    for (const auto& a : comps)
      for (const auto& b : comps) {
        if (!a.is_parabolic() && !b.is_semi_positive()) continue;
        std::map<SignedComposition, Rational> expected;
        for (int xi : ws.d_ab(a, b).members) expected[ws.intersection_composition(ws.table().at(xi), a, b)] += 1;
        if (mr.multiply(a, b).coords != expected) return false;
      }
    return true;
  });

  c.run("tau_{lambda(A)}(d_B) = |D_AB^subset|", [&] {
    for (const auto& a : comps)
      for (const auto& b : comps) {
        const int l = ws.dp_order().index_of(lambda_of(a));
        if (mr.tau(l, mr.d(b)) !=
            Rational(static_cast<long long>(ws.d_ab_subset(a, b).members.size())))
          return false;
      }
    return true;
  });

  c.run("the tau functionals are linearly independent", [&] {
    return rat_rank(rat_from_int(mr.theta_matrix())) == dp;
  });

  c.run("dim ker theta = dim ker psi = |SC(n)| - |DP(n)|", [&] {
    const auto kernel = mr.kernel_basis();
    if (static_cast<int>(kernel.size()) != static_cast<int>(comps.size()) - dp) return false;
    const ClassFunction zero{std::vector<Rational>(dp, Rational(0))};
    for (const auto& k : kernel)
      if (mr.theta(k) != zero || !is_zero(mr.psi(k))) return false;
    RatMat psim(dp, std::vector<Rational>(comps.size(), Rational(0)));
    for (size_t j = 0; j < comps.size(); ++j)
      psim[ws.dp_order().index_of(lambda_of(comps[j]))][j] = 1;
    return rat_rank(psim) == dp;
  });

  c.run("theta on class representatives reproduces phi", [&] {
    for (int l = 0; l < dp; ++l) {
      const ClassFunction row = mr.theta(mr.d(hat(ws.dp_order().classes[l])));
      for (int m = 0; m < dp; ++m)
        if (row.values[m] != Rational(hb.table().phi[l][m])) return false;
    }
    return true;
  });
  return c.results;
}

std::vector<CheckResult> suite_resind(int n) {
  Collector c;
  Workspace ws(n);
  HBAlgebra hb(ws);
  const DPOrder& order = ws.dp_order();

  c.run("sub-idempotent laws and resolution of identity in HB(W_A)", [&] {
    for (const auto& a : ws.all_sc()) {
      SubAlgebra sub(ws, a);
      SubBurnsideElement sum = sub.zero();
      for (int i = 0; i < sub.dim(); ++i) {
        for (int j = 0; j < sub.dim(); ++j) {
          const SubBurnsideElement prod = sub.multiply(sub.idempotent(i), sub.idempotent(j));
          if (i == j && prod != sub.idempotent(i)) return false;
          if (i != j && !is_zero(prod)) return false;
        }
        for (size_t k = 0; k < sum.coords.size(); ++k) sum.coords[k] += sub.idempotent(i).coords[k];
        if (sub.species(i, sub.idempotent(i)) != 1) return false;
      }
      if (sum != sub.identity()) return false;
    }
    return true;
  });

  c.run("res e_B = sum of e_{B_i}^A, zero when no subset matches", [&] {
    for (const auto& a : ws.all_sc()) {
      SubAlgebra sub(ws, a);
      for (int l = 0; l < order.size(); ++l) {
        const SubBurnsideElement res = restrict_to(ws, sub, hb.idempotent(l));
        SubBurnsideElement expected = sub.zero();
        for (int i = 0; i < sub.dim(); ++i)
          if (lambda_of(sub.reps()[i]) == order.classes[l])
            for (size_t k = 0; k < expected.coords.size(); ++k)
              expected.coords[k] += sub.idempotent(i).coords[k];
        if (res != expected) return false;
      }
    }
    return true;
  });

  c.run("ind e_B^A = (|W(B)| / |W_A ∩ W(B)|) e_B, both normalizer forms", [&] {
    for (const auto& a : ws.all_sc()) {
      SubAlgebra sub(ws, a);
      const ReflectionSubgroup& wa = ws.subgroup(a);
      for (int i = 0; i < sub.dim(); ++i) {
        const SignedComposition& b = sub.reps()[i];
        const auto [wb, nb] = ws.normalizer(b);
        long long wb_in_a = 0, nb_in_a = 0;
        for (int idx : wb)
          if (wa.contains(ws.table().at(idx))) ++wb_in_a;
        for (int idx : nb)
          if (wa.contains(ws.table().at(idx))) ++nb_in_a;
        const Rational factor(static_cast<long long>(wb.size()), wb_in_a);
        const Rational factor2(static_cast<long long>(nb.size()), nb_in_a);
        if (factor != factor2) return false;
        const BurnsideElement expected =
            factor * hb.idempotent(order.index_of(lambda_of(b)));
        if (induce(ws, sub, sub.idempotent(i)) != expected) return false;
      }
    }
    return true;
  });

  c.run("Theorem 3.3 evaluated both ways agrees", [&] {
    for (const auto& a : ws.all_sc()) {
      SubAlgebra sub(ws, a);
      for (int m = 0; m < order.size(); ++m) {
        const SignedComposition b = hat(order.classes[m]);
        const long long lhs = ws.fixed_cosets_element(ws.coxeter(b), a);
        Rational rhs(0);
        for (int i = 0; i < sub.dim(); ++i) {
          if (lambda_of(sub.reps()[i]) != order.classes[m]) continue;
          const auto [wbi, nbi] = ws.normalizer(sub.reps()[i]);
          long long in_a = 0;
          for (int idx : wbi)
            if (ws.subgroup(a).contains(ws.table().at(idx))) ++in_a;
          rhs += Rational(ws.w_of(b), in_a);
        }
        if (Rational(lhs) != rhs) return false;
      }
    }
    return true;
  });

  c.run("species compatibility s_B(x) = s_B^A(res x)", [&] {
    for (const auto& a : ws.all_sc()) {
      SubAlgebra sub(ws, a);
      for (const auto& b : ws.subcompositions(a))
        for (int i = 0; i < hb.dim(); ++i) {
          const BurnsideElement x = hb.basis(i);
          if (hb.species_general(b, x) != sub.species(sub.class_index(b), restrict_to(ws, sub, x)))
            return false;
        }
    }
    return true;
  });
  return c.results;
}

std::vector<CheckResult> suite_thm35(int n) {
  Collector c;
  Workspace ws(n);
  HBAlgebra hb(ws);

  c.run("Theorem 3.5 identity for every lambda and A", [&] {
    for (int l = 0; l < hb.dim(); ++l)
      for (const auto& a : ws.all_sc()) {
        const auto [lhs, rhs] = hb.theorem35(l, a);
        if (lhs != rhs) return false;
      }
    return true;
  });
  return c.results;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"marks",    "idempotents", "mr",   "res-ind",
                                                 "counting", "parity",      "thm35"};
  return names;
}

int verify_suite_max_n(const std::string& suite, bool long_tests) {
  if (suite == "marks") return 6;
  if (suite == "idempotents") return 4;
  if (suite == "mr") return long_tests ? 4 : 3;
  if (suite == "res-ind") return 3;
  if (suite == "counting") return 5;
  if (suite == "parity") return 3;
  if (suite == "thm35") return 3;
  throw std::invalid_argument("unknown verify suite: " + suite);
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, int n, bool long_tests) {
  if (n < 1 || n > verify_suite_max_n(suite, long_tests))
    throw std::invalid_argument("n out of bounds for suite " + suite);
  if (suite == "marks") return suite_marks(n);
  if (suite == "idempotents") return suite_idempotents(n);
  if (suite == "mr") return suite_mr(n);
  if (suite == "res-ind") return suite_resind(n);
  if (suite == "counting") return suite_counting(n);
  if (suite == "parity") return suite_parity(n);
  if (suite == "thm35") return suite_thm35(n);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace hyperoct
