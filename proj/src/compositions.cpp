#include "hyperoct/compositions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperoct {

SignedComposition::SignedComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p == 0) throw std::invalid_argument("signed composition with a zero part");
}

SignedComposition SignedComposition::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<int> parts;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw std::invalid_argument("bad composition token: '" + tok + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw std::invalid_argument("empty composition: '" + text + "'");
  return SignedComposition(std::move(parts));
}

int SignedComposition::weight() const {
  int w = 0;
  for (int p : parts_) w += std::abs(p);
  return w;
}

int SignedComposition::lg_plus() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

int SignedComposition::lg_minus() const { return lg() - lg_plus(); }

bool SignedComposition::is_positive() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

bool SignedComposition::is_parabolic() const {
  for (size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > 0) return false;
  return true;
}

bool SignedComposition::is_semi_positive() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p >= -1; });
}

SignedComposition SignedComposition::abs() const {
  std::vector<int> out(parts_);
  for (int& p : out) p = std::abs(p);
  return SignedComposition(std::move(out));
}

SignedComposition SignedComposition::concat(const SignedComposition& b) const {
  std::vector<int> out(parts_);
  out.insert(out.end(), b.parts_.begin(), b.parts_.end());
  return SignedComposition(std::move(out));
}

std::string SignedComposition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

DoublePartition::DoublePartition(std::vector<int> plus, std::vector<int> minus)
    : plus_(std::move(plus)), minus_(std::move(minus)) {
  for (int p : plus_)
    if (p <= 0) throw std::invalid_argument("double partition with a nonpositive part");
  for (int p : minus_)
    if (p <= 0) throw std::invalid_argument("double partition with a nonpositive part");
  std::sort(plus_.begin(), plus_.end());
  std::sort(minus_.begin(), minus_.end());
}

int DoublePartition::weight() const {
  return std::accumulate(plus_.begin(), plus_.end(), 0) +
         std::accumulate(minus_.begin(), minus_.end(), 0);
}

int DoublePartition::weight_plus() const {
  return std::accumulate(plus_.begin(), plus_.end(), 0);
}

std::string DoublePartition::str() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "(" + join(plus_) + "|" + join(minus_) + ")";
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // parts weakly decreasing while building, reversed to increasing on emit
  auto rec = [&](auto&& self, int rem, int max_part) -> void {
    if (rem == 0) {
      std::vector<int> p(cur.rbegin(), cur.rend());
      out.push_back(std::move(p));
      return;
    }
    for (int p = std::min(rem, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

namespace {

// Ordered compositions of n into positive parts, lexicographic.
std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      self(self, rem - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace

std::vector<SignedComposition> enumerate_sc(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_sc: n must be positive");
  std::vector<SignedComposition> out;
  for (const auto& comp : compositions_of(n)) {
    const int k = static_cast<int>(comp.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> parts(comp);
      for (int i = 0; i < k; ++i)
        if (mask & (1u << (k - 1 - i))) parts[i] = -parts[i];
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

std::vector<DoublePartition> enumerate_dp(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_dp: n must be positive");
  std::vector<DoublePartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& plus : partitions_of(k))
      for (const auto& minus : partitions_of(n - k)) out.emplace_back(plus, minus);
  return out;
}

DoublePartition lambda_of(const SignedComposition& a) {
  std::vector<int> plus, minus;
  for (int p : a.parts()) (p > 0 ? plus : minus).push_back(std::abs(p));
  return DoublePartition(std::move(plus), std::move(minus));
}

SignedComposition hat(const DoublePartition& mu) {
  std::vector<int> parts(mu.plus());
  for (int p : mu.minus()) parts.push_back(-p);
  return SignedComposition(std::move(parts));
}

long long subgroup_order_formula(const SignedComposition& a) {
  long long order = 1;
  for (int p : a.parts()) {
    if (p > 0) {
      for (int i = 1; i <= p; ++i) order *= 2LL * i;
    } else {
      for (int i = 2; i <= -p; ++i) order *= i;
    }
  }
  return order;
}

long long group_order(int n) {
  long long order = 1;
  for (int i = 1; i <= n; ++i) order *= 2LL * i;
  return order;
}

long long double_factorial_odd(int n) {
  long long v = 1;
  for (int i = 1; i <= n; ++i) v *= 2LL * i - 1;
  return v;
}

int DPOrder::index_of(const DoublePartition& dp) const {
  const auto it = position.find(dp);
  if (it == position.end()) throw std::out_of_range("double partition not of rank " + std::to_string(n));
  return it->second;
}

DPOrder canonical_dp_order(int n) {
  DPOrder order;
  order.n = n;
  order.classes = enumerate_dp(n);
  std::sort(order.classes.begin(), order.classes.end(),
            [](const DoublePartition& a, const DoublePartition& b) {
              const long long oa = subgroup_order_formula(hat(a));
              const long long ob = subgroup_order_formula(hat(b));
              if (oa != ob) return oa > ob;
              if (a.weight_plus() != b.weight_plus()) return a.weight_plus() > b.weight_plus();
              return a < b;
            });
  for (int i = 0; i < order.size(); ++i) order.position[order.classes[i]] = i;
  return order;
}

}  // namespace hyperoct
