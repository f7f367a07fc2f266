#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <set>

using namespace hyperoct;
using oracle::dp;
using oracle::sc;

TEST_CASE("signed composition basics and validation") {
  CHECK_THROWS_AS(SignedComposition({2, 0, 1}), std::invalid_argument);
  CHECK(sc({-2, 3, -1}).weight() == 6);
  CHECK(sc({-2, 3, -1}).str() == "(-2,3,-1)");
  CHECK(SignedComposition::parse("(-2,3,-1)") == sc({-2, 3, -1}));
  CHECK(SignedComposition::parse("2,-1") == sc({2, -1}));
  CHECK_THROWS_AS(SignedComposition::parse("2,x"), std::invalid_argument);
  CHECK(sc({1, 2}).concat(sc({-3})) == sc({1, 2, -3}));
}

TEST_CASE("predicates") {
  CHECK(sc({3}).is_positive());
  CHECK(sc({3}).is_parabolic());
  CHECK(sc({3}).is_semi_positive());
  CHECK(sc({3, -2}).is_parabolic());
  CHECK_FALSE(sc({3, -2}).is_positive());
  CHECK_FALSE(sc({3, -2}).is_semi_positive());
  CHECK(sc({-1, 2, -1}).is_semi_positive());
  CHECK_FALSE(sc({-2, 3}).is_parabolic());

  const SignedComposition a = sc({-2, 3, -1, -3, 1});
  CHECK(a.lg() == 5);
  CHECK(a.lg_minus() == 3);
  CHECK(a.lg_plus() == 2);
  CHECK(a.abs() == sc({2, 3, 1, 3, 1}));
}

TEST_CASE("enumeration counts") {
  for (int n = 1; n <= 8; ++n)
    CHECK(static_cast<long long>(enumerate_sc(n).size()) == 2 * [](int k) {
            long long p = 1;
            for (int i = 1; i < k; ++i) p *= 3;
            return p;
          }(n));
  CHECK(enumerate_sc(1) == std::vector<SignedComposition>{sc({1}), sc({-1})});

  const auto sc2 = enumerate_sc(2);
  const std::set<SignedComposition> got(sc2.begin(), sc2.end());
  const std::set<SignedComposition> expected = {sc({2}),     sc({1, 1}), sc({1, -1}),
                                                sc({-1, 1}), sc({-2}),   sc({-1, -1})};
  CHECK(got == expected);
  CHECK(sc2.size() == 6);
  CHECK(enumerate_sc(3).size() == 18);
}

TEST_CASE("double partition enumeration against the pair-counting oracle") {
  CHECK(enumerate_dp(1).size() == 2);
  const auto dp2 = enumerate_dp(2);
  const std::set<DoublePartition> got(dp2.begin(), dp2.end());
  const std::set<DoublePartition> expected = {dp({2}, {}), dp({1, 1}, {}), dp({1}, {1}),
                                              dp({}, {2}), dp({}, {1, 1})};
  CHECK(got == expected);

  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    for (int k = 0; k <= n; ++k) count += oracle::count_partitions(k) * oracle::count_partitions(n - k);
    CHECK(static_cast<long long>(enumerate_dp(n).size()) == count);
  }
  CHECK(enumerate_dp(3).size() == 10);
}

TEST_CASE("lambda and hat") {
  CHECK(lambda_of(sc({-2, 3, -1})) == dp({3}, {1, 2}));
  CHECK(lambda_of(sc({4})) == dp({4}, {}));
  CHECK(hat(dp({2}, {1, 1})) == sc({2, -1, -1}));
  CHECK(hat(dp({}, {1, 1, 1})) == sc({-1, -1, -1}));
  for (int n = 1; n <= 5; ++n)
    for (const DoublePartition& mu : enumerate_dp(n)) CHECK(lambda_of(hat(mu)) == mu);
}

TEST_CASE("lambda is surjective") {
  for (int n = 1; n <= 6; ++n) {
    std::set<DoublePartition> image;
    for (const SignedComposition& a : enumerate_sc(n)) image.insert(lambda_of(a));
    CHECK(image.size() == enumerate_dp(n).size());
  }
}

TEST_CASE("lambda of a concatenation merges the parts") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; m + k <= 4; ++k)
      for (const SignedComposition& a : enumerate_sc(m))
        for (const SignedComposition& b : enumerate_sc(k)) {
          const DoublePartition whole = lambda_of(a.concat(b));
          const DoublePartition la = lambda_of(a), lb = lambda_of(b);
          std::vector<int> plus = la.plus(), minus = la.minus();
          plus.insert(plus.end(), lb.plus().begin(), lb.plus().end());
          minus.insert(minus.end(), lb.minus().begin(), lb.minus().end());
          CHECK(whole == DoublePartition(plus, minus));
        }
}

TEST_CASE("order formulas") {
  CHECK(group_order(2) == 8);
  CHECK(group_order(3) == 48);
  CHECK(group_order(6) == 46080);
  CHECK(subgroup_order_formula(sc({2})) == 8);
  CHECK(subgroup_order_formula(sc({-3})) == 6);
  CHECK(subgroup_order_formula(sc({-2, 3, -1, -3, 1})) == 2 * 48 * 1 * 6 * 2);
  CHECK(double_factorial_odd(5) == 945);
}

TEST_CASE("canonical DP order") {
  const DPOrder o2 = canonical_dp_order(2);
  const std::vector<DoublePartition> expected = {dp({2}, {}), dp({1, 1}, {}), dp({1}, {1}),
                                                 dp({}, {2}), dp({}, {1, 1})};
  CHECK(o2.classes == expected);

  for (int n = 1; n <= 5; ++n) {
    const DPOrder o = canonical_dp_order(n);
    CHECK(o.classes.front() == dp({n}, {}));
    CHECK(o.classes.back() == dp({}, std::vector<int>(n, 1)));
    CHECK(o.index_of(o.classes[1]) == 1);
    CHECK_THROWS_AS(o.index_of(dp({n + 1}, {})), std::out_of_range);
  }
}

TEST_CASE("double partition canonical form") {
  CHECK(dp({2, 1}, {}) == dp({1, 2}, {}));
  CHECK(dp({2, 1}, {}).plus() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(DoublePartition({0}, {}), std::invalid_argument);
  CHECK(dp({1, 2}, {3}).str() == "(1,2|3)");
}
