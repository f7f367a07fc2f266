#include "hyperoct/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hyperoct {

std::vector<std::pair<std::string, SignedPerm>> subgroup_generators(const SignedComposition& a, int n) {
  if (a.weight() != n) throw std::invalid_argument("composition weight differs from ambient rank");
  std::vector<std::pair<std::string, SignedPerm>> gens;
  int offset = 0;
  for (int part : a.parts()) {
    const int size = std::abs(part);
    if (part > 0) gens.emplace_back("t" + std::to_string(offset + 1), gen_t(n, offset + 1));
    for (int p = offset + 1; p <= offset + size - 1; ++p)
      gens.emplace_back("s" + std::to_string(p), gen_s(n, p));
    offset += size;
  }
  return gens;
}

ReflectionSubgroup build_subgroup(const SignedComposition& a, int n) {
  ReflectionSubgroup g;
  g.n = n;
  g.comp = a;
  g.generators = subgroup_generators(a, n);
  for (const auto& [label, perm] : g.generators) {
    Root r{std::vector<int>(n, 0)};
    if (label[0] == 't') {
      r.coeff[std::stoi(label.substr(1)) - 1] = 1;
    } else {
      const int p = std::stoi(label.substr(1));
      r.coeff[p] = 1;
      r.coeff[p - 1] = -1;
    }
    g.simple_system.push_back(std::move(r));
  }
  int offset = 0;
  for (int part : a.parts()) {
    g.block_offsets.push_back(offset);
    offset += std::abs(part);
  }

  // closure under the generators
  std::unordered_map<std::vector<int>, int, WindowHash> seen;
  std::deque<SignedPerm> todo;
  const SignedPerm id = SignedPerm::identity(n);
  seen.emplace(id.window(), 0);
  todo.push_back(id);
  while (!todo.empty()) {
    const SignedPerm cur = todo.front();
    todo.pop_front();
    for (const auto& [label, gen] : g.generators) {
      SignedPerm next = cur * gen;
      if (seen.emplace(next.window(), 0).second) todo.push_back(next);
    }
  }
  g.elements.elems.reserve(seen.size());
  for (const auto& [win, unused] : seen) g.elements.elems.emplace_back(win);
  std::sort(g.elements.elems.begin(), g.elements.elems.end());
  g.elements.build_index();
  if (g.order() != subgroup_order_formula(a))
    throw std::logic_error("subgroup closure disagrees with the block order formula for " + a.str());
  return g;
}

SignedPerm coxeter_element(const ReflectionSubgroup& g) {
  SignedPerm c = SignedPerm::identity(g.n);
  for (const auto& [label, gen] : g.generators) c = c * gen;
  return c;
}

CosetPartition left_cosets(const ElementList& ambient, const std::vector<SignedPerm>& gens) {
  const int size = ambient.size();
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int i = 0; i < size; ++i)
    for (const SignedPerm& g : gens) {
      const int j = ambient.index_of(ambient.elems[i] * g);
      const int ri = find(i), rj = find(j);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  CosetPartition part;
  part.coset_id.assign(size, -1);
  for (int i = 0; i < size; ++i) {
    const int root = find(i);
    if (part.coset_id[root] < 0) {
      part.coset_id[root] = part.num_cosets++;
      part.reps.push_back(root);  // ambient is sorted, so the root is the lex-min member
    }
    part.coset_id[i] = part.coset_id[root];
  }
  return part;
}

Workspace::Workspace(int n, int max_enum) : n_(n), max_enum_(max_enum) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  validate_cycle_sign_convention();
}

void Workspace::check_weight(const SignedComposition& a) const {
  if (a.weight() != n_)
    throw std::invalid_argument("composition " + a.str() + " has weight != " + std::to_string(n_));
}

const GroupTable& Workspace::table() {
  if (!table_) table_.emplace(n_, max_enum_);
  return *table_;
}

const std::vector<SignedComposition>& Workspace::all_sc() {
  if (!all_sc_) all_sc_ = enumerate_sc(n_);
  return *all_sc_;
}

const DPOrder& Workspace::dp_order() {
  if (!dp_order_) dp_order_ = canonical_dp_order(n_);
  return *dp_order_;
}

const ReflectionSubgroup& Workspace::subgroup(const SignedComposition& a) {
  check_weight(a);
  auto it = subgroups_.find(a);
  if (it == subgroups_.end())
    it = subgroups_.emplace(a, std::make_unique<ReflectionSubgroup>(build_subgroup(a, n_))).first;
  return *it->second;
}

SignedPerm Workspace::coxeter(const SignedComposition& a) {
  check_weight(a);
  SignedPerm c = SignedPerm::identity(n_);
  for (const auto& [label, gen] : subgroup_generators(a, n_)) c = c * gen;
  return c;
}

const std::vector<int>& Workspace::d_reps(const SignedComposition& a) {
  const auto it = dreps_.find(a);
  if (it != dreps_.end()) return it->second;

  const GroupTable& t = table();
  const ReflectionSubgroup& sub = subgroup(a);
  std::vector<int> by_descent;
  std::vector<char> flags(t.size(), 0);
  for (int i = 0; i < t.size(); ++i) {
    bool ok = true;
    for (const auto& [label, g] : sub.generators)
      if (t.length_of(t.index_of(t.at(i) * g)) <= t.length_of(i)) {
        ok = false;
        break;
      }
    if (ok) {
      by_descent.push_back(i);
      flags[i] = 1;
    }
  }

  // second characterization: the unique minimal-length member of each coset
  const CosetPartition& part = cosets(a);
  std::vector<int> best(part.num_cosets, -1), ties(part.num_cosets, 0);
  for (int i = 0; i < t.size(); ++i) {
    const int c = part.coset_id[i];
    if (best[c] < 0 || t.length_of(i) < t.length_of(best[c])) {
      best[c] = i;
      ties[c] = 1;
    } else if (t.length_of(i) == t.length_of(best[c])) {
      ++ties[c];
    }
  }
  for (int c = 0; c < part.num_cosets; ++c)
    if (ties[c] != 1) throw std::logic_error("coset of " + a.str() + " has no unique minimal-length element");
  std::vector<int> by_min(best);
  std::sort(by_min.begin(), by_min.end());
  if (by_min != by_descent)
    throw std::logic_error("the two characterizations of D_A diverge for " + a.str());
  if (static_cast<long long>(by_descent.size()) * sub.order() != t.size())
    throw std::logic_error("|D_A|*|W_A| != |W_n| for " + a.str());

  dflags_[a] = std::move(flags);
  return dreps_.emplace(a, std::move(by_descent)).first->second;
}

const std::vector<char>& Workspace::d_flags(const SignedComposition& a) {
  d_reps(a);
  return dflags_[a];
}

CosetReps Workspace::d_ab(const SignedComposition& a, const SignedComposition& b) {
  const GroupTable& t = table();
  const std::vector<char>& fa = d_flags(a);
  CosetReps out{CosetReps::Kind::d_ab, {}};
  for (int x : d_reps(b))
    if (fa[t.inverse_index(x)]) out.members.push_back(x);
  return out;
}

CosetReps Workspace::d_ab_subset(const SignedComposition& a, const SignedComposition& b) {
  const GroupTable& t = table();
  const ReflectionSubgroup& sa = subgroup(a);
  const ReflectionSubgroup& sb = subgroup(b);
  CosetReps out{CosetReps::Kind::d_ab_subset, {}};
  for (int xi : d_ab(a, b).members) {
    const SignedPerm& x = t.at(xi);
    const SignedPerm xinv = x.inverse();
    bool ok = true;
    for (const auto& [label, g] : sa.generators)
      if (!sb.contains(xinv * g * x)) {
        ok = false;
        break;
      }
    if (ok) out.members.push_back(xi);
  }
  return out;
}

CosetReps Workspace::d_ab_equiv(const SignedComposition& a, const SignedComposition& b) {
  const auto key = std::make_pair(a, b);
  const auto cached = dab_equiv_.find(key);
  if (cached != dab_equiv_.end()) return {CosetReps::Kind::d_ab_equiv, cached->second};

  const GroupTable& t = table();
  const ReflectionSubgroup& sa = subgroup(a);
  const ReflectionSubgroup& sb = subgroup(b);
  std::vector<int> members;
  if (sa.order() == sb.order()) {
    for (int xi : d_ab(a, b).members) {
      const SignedPerm& x = t.at(xi);
      bool ok = true;
      for (const auto& [label, g] : sb.generators)
        if (!sa.contains(x * g * x.inverse())) {
          ok = false;
          break;
        }
      if (ok) members.push_back(xi);
    }
  }

  // the root-system characterization: x with Π_A = x(Π_B)
  std::vector<Root> pa = sa.simple_system;
  std::sort(pa.begin(), pa.end());
  std::vector<int> transporter;
  for (int i = 0; i < t.size(); ++i) {
    std::vector<Root> img;
    img.reserve(sb.simple_system.size());
    for (const Root& r : sb.simple_system) img.push_back(root_image(t.at(i), r));
    std::sort(img.begin(), img.end());
    if (img == pa) transporter.push_back(i);
  }
  if (transporter != members)
    throw std::logic_error("D_AB^equiv disagrees with the simple-system transporter for " + a.str() +
                           ", " + b.str());
  dab_equiv_[key] = members;
  return {CosetReps::Kind::d_ab_equiv, std::move(members)};
}

const CosetPartition& Workspace::cosets(const SignedComposition& a) {
  const auto it = cosets_.find(a);
  if (it != cosets_.end()) return it->second;
  const ReflectionSubgroup& sub = subgroup(a);
  std::vector<SignedPerm> gens;
  for (const auto& [label, g] : sub.generators) gens.push_back(g);
  return cosets_.emplace(a, left_cosets(table().list(), gens)).first->second;
}

long long Workspace::fixed_cosets_element(const SignedPerm& c, const SignedComposition& a) {
  const GroupTable& t = table();
  const CosetPartition& part = cosets(a);
  long long count = 0;
  for (int rep : part.reps)
    if (part.coset_id[t.index_of(c * t.at(rep))] == part.coset_id[rep]) ++count;
  return count;
}

long long Workspace::fixed_cosets_subgroup(const SignedComposition& b, const SignedComposition& a) {
  const GroupTable& t = table();
  const CosetPartition& part = cosets(a);
  const ReflectionSubgroup& sb = subgroup(b);
  long long count = 0;
  for (int rep : part.reps) {
    bool fixed = true;
    for (const auto& [label, g] : sb.generators)
      if (part.coset_id[t.index_of(g * t.at(rep))] != part.coset_id[rep]) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

std::pair<std::vector<int>, std::vector<int>> Workspace::normalizer(const SignedComposition& a) {
  const GroupTable& t = table();
  const ReflectionSubgroup& sub = subgroup(a);

  std::vector<Root> pa = sub.simple_system;
  std::sort(pa.begin(), pa.end());
  std::vector<int> stabilizer;
  for (int i = 0; i < t.size(); ++i) {
    std::vector<Root> img;
    img.reserve(pa.size());
    for (const Root& r : sub.simple_system) img.push_back(root_image(t.at(i), r));
    std::sort(img.begin(), img.end());
    if (img == pa) stabilizer.push_back(i);
  }
  if (stabilizer != d_ab_subset(a, a).members)
    throw std::logic_error("W(A) by simple-system stabilizer disagrees with D_AA^subset for " + a.str());

  std::vector<int> product;
  product.reserve(stabilizer.size() * sub.elements.size());
  for (int wi : stabilizer)
    for (const SignedPerm& h : sub.elements.elems) product.push_back(t.index_of(t.at(wi) * h));
  std::sort(product.begin(), product.end());
  product.erase(std::unique(product.begin(), product.end()), product.end());
  if (product.size() != stabilizer.size() * sub.elements.elems.size())
    throw std::logic_error("W(A) x W_A product set collapsed for " + a.str());

  std::vector<int> brute;
  for (int i = 0; i < t.size(); ++i) {
    const SignedPerm& x = t.at(i);
    const SignedPerm xinv = x.inverse();
    bool ok = true;
    for (const auto& [label, g] : sub.generators)
      if (!sub.contains(x * g * xinv)) {
        ok = false;
        break;
      }
    if (ok) brute.push_back(i);
  }
  if (product != brute)
    throw std::logic_error("normalizer decomposition disagrees with brute force for " + a.str());
  return {std::move(stabilizer), std::move(product)};
}

long long Workspace::w_of(const SignedComposition& a) {
  const auto it = w_of_.find(a);
  if (it != w_of_.end()) return it->second;
  const long long value = static_cast<long long>(d_ab_subset(a, a).members.size());
  w_of_[a] = value;
  return value;
}

int Workspace::length_in(const SignedComposition& a, const SignedPerm& w) {
  const ReflectionSubgroup& sub = subgroup(a);
  const int target = sub.elements.index_of(w);
  if (target < 0) throw std::invalid_argument("element is not a member of W_" + a.str());
  auto it = length_in_.find(a);
  if (it == length_in_.end()) {
    std::vector<int> dist(sub.elements.size(), -1);
    std::deque<int> todo;
    const int id = sub.elements.index_of(SignedPerm::identity(n_));
    dist[id] = 0;
    todo.push_back(id);
    while (!todo.empty()) {
      const int cur = todo.front();
      todo.pop_front();
      for (const auto& [label, g] : sub.generators) {
        const int next = sub.elements.index_of(sub.elements.elems[cur] * g);
        if (dist[next] < 0) {
          dist[next] = dist[cur] + 1;
          todo.push_back(next);
        }
      }
    }
    it = length_in_.emplace(a, std::move(dist)).first;
  }
  return it->second[target];
}

SignedComposition Workspace::intersection_composition(const SignedPerm& x, const SignedComposition& a,
                                                      const SignedComposition& b) {
  const ReflectionSubgroup& sa = subgroup(a);
  const ReflectionSubgroup& sb = subgroup(b);
  const SignedPerm xinv = x.inverse();
  std::vector<SignedPerm> inter;
  for (const SignedPerm& w : sa.elements.elems) {
    SignedPerm y = xinv * w * x;
    if (sb.contains(y)) inter.push_back(std::move(y));
  }
  std::sort(inter.begin(), inter.end());
  for (const SignedComposition& c : subcompositions(b)) {
    if (subgroup_order_formula(c) != static_cast<long long>(inter.size())) continue;
    if (subgroup(c).elements.elems == inter) return c;
  }
  throw std::runtime_error("x^-1 W_A x ∩ W_B is not of the W_C family; x outside D_AB?");
}

bool Workspace::subgroup_contains(const SignedComposition& a, const SignedComposition& b) {
  check_weight(a);
  check_weight(b);
  const ReflectionSubgroup& sa = subgroup(a);
  for (const auto& [label, g] : subgroup_generators(b, n_))
    if (!sa.contains(g)) return false;
  return true;
}

bool Workspace::preceq(const SignedComposition& a, const SignedComposition& b) {
  if (a.weight() != b.weight()) throw std::invalid_argument("preceq needs equal weights");
  if (subgroup_contains(b, a)) return true;
  return subgroup_contains(b.abs(), a) && a.lg() > b.lg() && a.lg_minus() >= b.lg_minus();
}

const std::vector<SignedComposition>& Workspace::subcompositions(const SignedComposition& a) {
  const auto it = subcomps_.find(a);
  if (it != subcomps_.end()) return it->second;
  std::vector<SignedComposition> out;
  for (const SignedComposition& c : all_sc())
    if (subgroup_contains(a, c)) out.push_back(c);
  return subcomps_.emplace(a, std::move(out)).first->second;
}

const std::vector<std::vector<SignedComposition>>& Workspace::subclasses(const SignedComposition& a) {
  const auto it = subclasses_.find(a);
  if (it != subclasses_.end()) return it->second;

  const std::vector<SignedComposition>& comps = subcompositions(a);
  const int count = static_cast<int>(comps.size());
  std::map<long long, std::vector<int>> by_order;
  for (int i = 0; i < count; ++i) by_order[subgroup_order_formula(comps[i])].push_back(i);

  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  const ReflectionSubgroup& ambient = subgroup(a);
  for (int ci = 0; ci < count; ++ci) {
    const auto gens = subgroup_generators(comps[ci], n_);
    const auto& candidates = by_order[subgroup_order_formula(comps[ci])];
    for (const SignedPerm& w : ambient.elements.elems) {
      const SignedPerm winv = w.inverse();
      std::vector<SignedPerm> imgs;
      imgs.reserve(gens.size());
      for (const auto& [label, g] : gens) imgs.push_back(w * g * winv);
      for (int dj : candidates) {
        const ReflectionSubgroup& sd = subgroup(comps[dj]);
        bool inside = true;
        for (const SignedPerm& im : imgs)
          if (!sd.contains(im)) {
            inside = false;
            break;
          }
        if (inside) {  // equal orders + containment of a generating set
          const int ra = find(ci), rb = find(dj);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
          break;
        }
      }
    }
  }

  std::map<int, std::vector<SignedComposition>> grouped;
  for (int i = 0; i < count; ++i) grouped[find(i)].push_back(comps[i]);
  std::vector<std::vector<SignedComposition>> classes;
  for (auto& [root, members] : grouped) classes.push_back(std::move(members));
  return subclasses_.emplace(a, std::move(classes)).first->second;
}

std::vector<SignedComposition> Workspace::subclass_reps(const SignedComposition& a) {
  std::vector<SignedComposition> reps;
  for (const auto& cls : subclasses(a)) reps.push_back(cls.front());
  return reps;
}

std::vector<int> Workspace::parabolic_closure(const SignedPerm& w) {
  const GroupTable& t = table();
  const auto basis = fixed_space(w);
  std::vector<int> out;
  for (int i = 0; i < t.size(); ++i) {
    const SignedPerm& g = t.at(i);
    bool fixes_all = true;
    for (const auto& vec : basis) {
      std::vector<Rational> img(vec.size(), Rational(0));
      for (int p = 1; p <= n_; ++p) {
        const int v = g.image(p);
        img[std::abs(v) - 1] = (v > 0 ? vec[p - 1] : -vec[p - 1]);
      }
      if (img != vec) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) out.push_back(i);
  }
  return out;
}

int Workspace::element_class(int idx) {
  if (!element_class_) {
    const GroupTable& t = table();
    std::vector<int> classes(t.size());
    for (int i = 0; i < t.size(); ++i) classes[i] = dp_order().index_of(signed_cycle_type(t.at(i)));
    element_class_ = std::move(classes);
  }
  return (*element_class_)[idx];
}

const std::vector<long long>& Workspace::class_sizes_exhaustive() {
  if (!class_sizes_) {
    std::vector<long long> sizes(dp_order().size(), 0);
    for (int i = 0; i < table().size(); ++i) ++sizes[element_class(i)];
    class_sizes_ = std::move(sizes);
  }
  return *class_sizes_;
}

void validate_cycle_sign_convention() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (int n = 1; n <= 4; ++n)
      for (const DoublePartition& mu : enumerate_dp(n)) {
        SignedPerm c = SignedPerm::identity(n);
        for (const auto& [label, g] : subgroup_generators(hat(mu), n)) c = c * g;
        if (signed_cycle_type(c) != mu)
          throw std::logic_error("cycle-sign convention self-check failed at " + mu.str());
      }
  });
}

}  // namespace hyperoct
