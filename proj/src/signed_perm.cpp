#include "hyperoct/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace hyperoct {

SignedPerm::SignedPerm(std::vector<int> window) : win_(std::move(window)) {
  const int n = static_cast<int>(win_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : win_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("invalid window for a signed permutation");
    seen[a] = 1;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w));
}

int SignedPerm::image(int i) const {
  if (i > 0) return win_[i - 1];
  return -win_[-i - 1];
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> w(win_.size());
  for (int i = 1; i <= n(); ++i) {
    const int v = win_[i - 1];
    if (v > 0)
      w[v - 1] = i;
    else
      w[-v - 1] = -i;
  }
  return SignedPerm(std::move(w));
}

bool SignedPerm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (win_[i - 1] != i) return false;
  return true;
}

std::string SignedPerm::str() const {
  std::string s = "[";
  for (size_t i = 0; i < win_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(win_[i]);
  }
  return s + "]";
}

SignedPerm operator*(const SignedPerm& u, const SignedPerm& v) {
  if (u.n() != v.n()) throw std::invalid_argument("rank mismatch in signed permutation product");
  std::vector<int> w(u.n());
  for (int i = 1; i <= u.n(); ++i) w[i - 1] = u.image(v.image(i));
  return SignedPerm(std::move(w));
}

SignedPerm conjugate(const SignedPerm& x, const SignedPerm& w) { return x * w * x.inverse(); }

SignedPerm gen_t(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("generator t index out of range");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  w[i - 1] = -i;
  return SignedPerm(std::move(w));
}

SignedPerm gen_s(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator s index out of range");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return SignedPerm(std::move(w));
}

SignedPerm generator(int n, const std::string& name) {
  if (name == "t") return gen_t(n, 1);
  if (name.size() > 1 && (name[0] == 't' || name[0] == 's')) {
    size_t pos = 0;
    int idx = 0;
    try {
      idx = std::stoi(name.substr(1), &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator name: '" + name + "'");
    }
    if (pos + 1 != name.size()) throw std::invalid_argument("bad generator name: '" + name + "'");
    return name[0] == 't' ? gen_t(n, idx) : gen_s(n, idx);
  }
  throw std::invalid_argument("bad generator name: '" + name + "'");
}

bool Root::is_positive() const {
  for (int i = static_cast<int>(coeff.size()) - 1; i >= 0; --i)
    if (coeff[i] != 0) return coeff[i] > 0;
  return false;
}

std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    Root r{std::vector<int>(n, 0)};
    r.coeff[i - 1] = 1;
    out.push_back(std::move(r));
  }
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (int lam : {1, -1}) {
        Root r{std::vector<int>(n, 0)};
        r.coeff[j - 1] = 1;
        r.coeff[i - 1] = lam;
        out.push_back(std::move(r));
      }
  return out;
}

Root root_image(const SignedPerm& w, const Root& a) {
  Root out{std::vector<int>(a.coeff.size(), 0)};
  for (int i = 1; i <= w.n(); ++i) {
    const int c = a.coeff[i - 1];
    if (c == 0) continue;
    const int v = w.image(i);
    out.coeff[std::abs(v) - 1] += (v > 0 ? c : -c);
  }
  return out;
}

int length(const SignedPerm& w) {
  int count = 0;
  for (const Root& a : positive_roots(w.n()))
    if (!root_image(w, a).is_positive()) ++count;
  return count;
}

int sign_of(const SignedPerm& w) { return length(w) % 2 == 0 ? 1 : -1; }

DoublePartition signed_cycle_type(const SignedPerm& w) {
  const int n = w.n();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> plus, minus;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int len = 0, sign = 1, i = start;
    do {
      seen[i] = 1;
      const int v = w.image(i);
      if (v < 0) sign = -sign;
      i = std::abs(v);
      ++len;
    } while (i != start);
    (sign < 0 ? plus : minus).push_back(len);
  }
  return DoublePartition(std::move(plus), std::move(minus));
}

int fixed_space_dim(const SignedPerm& w) {
  return static_cast<int>(signed_cycle_type(w).minus().size());
}

std::vector<std::vector<Rational>> fixed_space(const SignedPerm& w) {
  const int n = w.n();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<Rational>> basis;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    // walk the cycle, recording the sign-propagated coefficients
    std::vector<std::pair<int, int>> coeffs;  // (coordinate, ±1)
    int i = start, c = 1, sign = 1;
    do {
      seen[i] = 1;
      coeffs.emplace_back(i, c);
      const int v = w.image(i);
      if (v < 0) sign = -sign;
      c = (v < 0 ? -c : c);
      i = std::abs(v);
    } while (i != start);
    if (sign != 1) continue;  // negative cycle: only the zero vector
    std::vector<Rational> vec(n, Rational(0));
    for (auto [coord, val] : coeffs) vec[coord - 1] = val;
    basis.push_back(std::move(vec));
  }
  return basis;
}

size_t WindowHash::operator()(const std::vector<int>& w) const noexcept {
  size_t h = 1469598103934665603ull;
  for (int v : w) {
    h ^= static_cast<size_t>(static_cast<unsigned>(v));
    h *= 1099511628211ull;
  }
  return h;
}

void ElementList::build_index() {
  index.clear();
  index.reserve(elems.size() * 2);
  for (int i = 0; i < size(); ++i) index.emplace(elems[i].window(), i);
}

int ElementList::index_of(const SignedPerm& w) const {
  const auto it = index.find(w.window());
  return it == index.end() ? -1 : it->second;
}

GroupTable::GroupTable(int n, int max_rank) : n_(n) {
  if (n < 1) throw std::invalid_argument("group rank must be positive");
  if (n > max_rank)
    throw std::invalid_argument("rank " + std::to_string(n) + " above configured maximum " +
                                std::to_string(max_rank));
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w(base);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w[i] = -w[i];
      list_.elems.emplace_back(std::move(w));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(list_.elems.begin(), list_.elems.end());
  list_.build_index();
  if (list_.size() != group_order(n)) throw std::logic_error("group enumeration miscounted");

  inverse_.resize(list_.size());
  lengths_.resize(list_.size());
  const auto roots = positive_roots(n);
  for (int i = 0; i < list_.size(); ++i) {
    inverse_[i] = index_of(list_.elems[i].inverse());
    int len = 0;
    for (const Root& a : roots)
      if (!root_image(list_.elems[i], a).is_positive()) ++len;
    lengths_[i] = len;
  }
  identity_ = index_of(SignedPerm::identity(n));
}

int GroupTable::index_of(const SignedPerm& w) const {
  const int i = list_.index_of(w);
  if (i < 0) throw std::logic_error("element not in group table");
  return i;
}

}  // namespace hyperoct
