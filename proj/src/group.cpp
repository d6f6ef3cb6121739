#include "fitset/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fitset/error.hpp"

namespace fitset {

void FiniteGroup::finish() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0)
      throw InputError("element " + std::to_string(a) +
                       " has no two-sided inverse");
  }
  elem_order_.assign(n_, 1);
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    elem_order_[a] = k;
  }
}

GroupPtr FiniteGroup::from_generators(int degree, const std::vector<Perm>& gens,
                                      int order_bound, std::string name) {
  if (degree <= 0) throw InputError("degree must be positive");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw InputError("generators do not share one degree");

  std::map<Perm, int> index;
  std::vector<Perm> elems;
  elems.emplace_back(degree);
  index.emplace(elems[0], 0);
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const Perm& g : gens) {
      Perm prod = elems[qi] * g;
      auto [it, fresh] = index.emplace(prod, static_cast<int>(elems.size()));
      if (fresh) {
        elems.push_back(std::move(prod));
        if (static_cast<int>(elems.size()) > order_bound)
          throw InputError(
              "order bound " + std::to_string(order_bound) +
              " exceeded: closure reached " + std::to_string(elems.size()) +
              " elements and is still growing");
      }
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = static_cast<int>(elems.size());
  g->mul_.resize(static_cast<size_t>(g->n_) * g->n_);
  for (int a = 0; a < g->n_; ++a)
    for (int b = 0; b < g->n_; ++b)
      g->mul_[a * g->n_ + b] = index.at(elems[a] * elems[b]);
  g->perms_ = std::move(elems);
  g->name_ = std::move(name);
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>>& rows,
                                 int order_bound, std::string name) {
  int n = static_cast<int>(rows.size());
  if (n == 0) throw InputError("empty Cayley table");
  if (n > order_bound)
    throw InputError("order bound " + std::to_string(order_bound) +
                     " exceeded: table has " + std::to_string(n) + " rows");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw InputError("Cayley table is not square");
    for (int x : row)
      if (x < 0 || x >= n)
        throw InputError("Cayley table entry " + std::to_string(x) +
                         " out of range 0.." + std::to_string(n - 1));
  }

  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = rows[cand][a] == a && rows[a][cand] == a;
    if (ok) e = cand;
  }
  if (e < 0) throw InputError("not a group table: no two-sided identity");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rows[rows[a][b]][c] != rows[a][rows[b][c]])
          throw InputError("not a group table: associativity fails at (" +
                           std::to_string(a) + ", " + std::to_string(b) +
                           ", " + std::to_string(c) + ")");

  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n && !has_inv; ++b)
      has_inv = rows[a][b] == e && rows[b][a] == e;
    if (!has_inv)
      throw InputError("not a group table: element " + std::to_string(a) +
                       " has no two-sided inverse");
  }

  // The stored representation keeps the identity at index 0; relabel by
  // swapping 0 and e when needed.
  auto relab = [&](int x) { return x == 0 ? e : (x == e ? 0 : x); };
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->mul_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g->mul_[a * n + b] = relab(rows[relab(a)][relab(b)]);
  g->name_ = std::move(name);
  g->finish();
  return g;
}

GroupPtr FiniteGroup::trivial() {
  return from_table({{0}}, 1, "1");
}

GroupPtr FiniteGroup::direct_product(const GroupPtr& a, const GroupPtr& b,
                                     int order_bound, std::string name) {
  int n1 = a->order(), n2 = b->order();
  if (n1 * n2 > order_bound)
    throw InputError("order bound " + std::to_string(order_bound) +
                     " exceeded: direct product has order " +
                     std::to_string(n1 * n2));
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n1 * n2;
  g->mul_.resize(static_cast<size_t>(g->n_) * g->n_);
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2)
      for (int y1 = 0; y1 < n1; ++y1)
        for (int y2 = 0; y2 < n2; ++y2)
          g->mul_[(x1 * n2 + x2) * g->n_ + (y1 * n2 + y2)] =
              a->mul(x1, y1) * n2 + b->mul(x2, y2);
  if (a->has_perms() && b->has_perms()) {
    int d1 = a->degree(), d2 = b->degree();
    g->perms_.reserve(g->n_);
    for (int x1 = 0; x1 < n1; ++x1)
      for (int x2 = 0; x2 < n2; ++x2) {
        std::vector<int> img(d1 + d2);
        for (int p = 0; p < d1; ++p) img[p] = a->perm_of(x1)[p];
        for (int p = 0; p < d2; ++p) img[d1 + p] = d1 + b->perm_of(x2)[p];
        g->perms_.emplace_back(d1 + d2, std::move(img));
      }
  }
  g->name_ = name.empty() ? a->name() + "x" + b->name() : std::move(name);
  g->finish();
  return g;
}

void FiniteGroup::check_table() const {
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw ConsistencyError("identity is not two-sided");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw ConsistencyError("associativity fails");
  for (int a = 0; a < n_; ++a)
    if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0)
      throw ConsistencyError("inverse table is wrong");
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    if (k != elem_order_[a]) throw ConsistencyError("element order is wrong");
  }
}

// --- quotient -------------------------------------------------------------

namespace {

// projection[x] = target index of x's coset, section = sorted minimal
// coset representatives
void coset_structure(const FiniteGroup& G, const ElemMask& N,
                     std::vector<int>& projection, std::vector<int>& reps) {
  if (!is_subgroup_mask(G, N))
    throw InputError("quotient kernel is not a subgroup");
  if (!is_normal_mask(G, N))
    throw InputError("quotient kernel is not normal");

  int n = G.order();
  std::vector<int> rep(n, -1);
  reps.clear();
  for (int x = 0; x < n; ++x) {
    if (rep[x] >= 0) continue;
    std::vector<int> coset;
    int least = x;
    for (int k = N.first(); k >= 0; k = N.next(k)) {
      int y = G.mul(x, k);
      coset.push_back(y);
      least = std::min(least, y);
    }
    for (int y : coset) rep[y] = least;
    reps.push_back(least);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> rep_index(n, -1);
  for (size_t i = 0; i < reps.size(); ++i)
    rep_index[reps[i]] = static_cast<int>(i);
  projection.resize(n);
  for (int x = 0; x < n; ++x) projection[x] = rep_index[rep[x]];
}

}  // namespace

namespace detail {

GroupPtr quotient_table(const FiniteGroup& G, const std::vector<int>& projection,
                        const std::vector<int>& reps, int kernel_order) {
  int m = static_cast<int>(reps.size());
  auto t = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  t->n_ = m;
  t->mul_.resize(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t->mul_[i * m + j] = projection[G.mul(reps[i], reps[j])];
  t->name_ = G.name().empty() ? ""
                              : G.name() + "/N" + std::to_string(kernel_order);
  t->finish();
  return t;
}

}  // namespace detail

GroupPtr quotient_target(const FiniteGroup& G, const ElemMask& N) {
  std::vector<int> projection, reps;
  coset_structure(G, N, projection, reps);
  return detail::quotient_table(G, projection, reps, N.count());
}

QuotientMap quotient(const GroupPtr& G, const ElemMask& N) {
  QuotientMap q;
  q.source = G;
  q.kernel = N;
  coset_structure(*G, N, q.projection, q.section);
  q.target = detail::quotient_table(*G, q.projection, q.section, N.count());
  return q;
}

ElemMask QuotientMap::preimage(const ElemMask& sub_of_target) const {
  ElemMask m(source->order());
  for (int x = 0; x < source->order(); ++x)
    if (sub_of_target.test(projection[x])) m.set(x);
  return m;
}

ElemMask QuotientMap::image(const ElemMask& sub_of_source) const {
  ElemMask m(target->order());
  for (int x = sub_of_source.first(); x >= 0; x = sub_of_source.next(x))
    m.set(projection[x]);
  return m;
}

// --- element-mask machinery -----------------------------------------------

ElemMask subgroup_closure(const FiniteGroup& G, const ElemMask& seed) {
  ElemMask mask(G.order());
  std::vector<int> members;
  auto add = [&](int x) {
    if (!mask.test(x)) {
      mask.set(x);
      members.push_back(x);
    }
  };
  add(0);
  for (int s = seed.first(); s >= 0; s = seed.next(s)) add(s);
  // pairing member i with every j <= i covers all pairs once both sides
  // have been appended
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      add(G.mul(members[i], members[j]));
      add(G.mul(members[j], members[i]));
    }
  }
  return mask;
}

bool is_subgroup_mask(const FiniteGroup& G, const ElemMask& m) {
  if (m.capacity() != G.order() || !m.test(0)) return false;
  for (int a = m.first(); a >= 0; a = m.next(a))
    for (int b = m.first(); b >= 0; b = m.next(b))
      if (!m.test(G.mul(a, b))) return false;
  return true;
}

ElemMask conjugate_mask(const FiniteGroup& G, const ElemMask& S, int g) {
  ElemMask r(G.order());
  for (int x = S.first(); x >= 0; x = S.next(x)) r.set(G.conj(x, g));
  return r;
}

bool is_normal_mask(const FiniteGroup& G, const ElemMask& S) {
  for (int g = 0; g < G.order(); ++g)
    for (int x = S.first(); x >= 0; x = S.next(x))
      if (!S.test(G.conj(x, g))) return false;
  return true;
}

bool is_normal_in_mask(const FiniteGroup& G, const ElemMask& S,
                       const ElemMask& K) {
  for (int g = K.first(); g >= 0; g = K.next(g))
    for (int x = S.first(); x >= 0; x = S.next(x))
      if (!S.test(G.conj(x, g))) return false;
  return true;
}

ElemMask normal_closure(const FiniteGroup& G, const ElemMask& S) {
  ElemMask u(G.order());
  for (int g = 0; g < G.order(); ++g)
    for (int x = S.first(); x >= 0; x = S.next(x)) u.set(G.conj(x, g));
  return subgroup_closure(G, u);
}

bool is_subnormal_in_mask(const FiniteGroup& G, const ElemMask& H,
                          const ElemMask& K) {
  ElemMask N = K;
  for (;;) {
    ElemMask u(G.order());
    for (int g = N.first(); g >= 0; g = N.next(g))
      for (int x = H.first(); x >= 0; x = H.next(x)) u.set(G.conj(x, g));
    ElemMask next = subgroup_closure(G, u);
    if (next == H) return true;
    if (next == N) return false;
    N = next;
  }
}

std::vector<ElemMask> normal_subgroup_masks(const FiniteGroup& G) {
  int n = G.order();
  // normal closures of cyclic subgroups, one per element conjugacy class
  std::set<ElemMask> seeds;
  std::vector<char> seen(n, 0);
  for (int x = 1; x < n; ++x) {
    if (seen[x]) continue;
    ElemMask cls(n);
    for (int g = 0; g < n; ++g) {
      int y = G.conj(x, g);
      cls.set(y);
      seen[y] = 1;
    }
    seeds.insert(subgroup_closure(G, cls));
  }

  ElemMask triv(n);
  triv.set(0);
  std::set<ElemMask> found{triv};
  std::vector<ElemMask> list{triv};
  for (const ElemMask& s : seeds)
    if (found.insert(s).second) list.push_back(s);
  // every normal subgroup is a join of the seed closures
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      ElemMask join = subgroup_closure(G, list[i] | list[j]);
      if (found.insert(join).second) list.push_back(join);
    }
  }
  std::sort(list.begin(), list.end(),
            [](const ElemMask& a, const ElemMask& b) {
              int ca = a.count(), cb = b.count();
              return ca != cb ? ca < cb : a < b;
            });
  return list;
}

ElemMask centralizer_mask(const FiniteGroup& G, const ElemMask& S) {
  ElemMask r(G.order());
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int s = S.first(); ok && s >= 0; s = S.next(s))
      ok = G.mul(g, s) == G.mul(s, g);
    if (ok) r.set(g);
  }
  return r;
}

ElemMask normalizer_mask(const FiniteGroup& G, const ElemMask& S) {
  ElemMask r(G.order());
  for (int g = 0; g < G.order(); ++g)
    if (conjugate_mask(G, S, g) == S) r.set(g);
  return r;
}

ElemMask commutator_subgroup(const FiniteGroup& G, const ElemMask& A,
                             const ElemMask& B) {
  ElemMask comms(G.order());
  for (int a = A.first(); a >= 0; a = A.next(a))
    for (int b = B.first(); b >= 0; b = B.next(b))
      comms.set(G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)));
  return subgroup_closure(G, comms);
}

StructuralSeries structural_series(const FiniteGroup& G) {
  StructuralSeries s;
  ElemMask full = Bitset::all(G.order());
  ElemMask triv(G.order());
  triv.set(0);

  s.derived.push_back(full);
  for (;;) {
    ElemMask next = commutator_subgroup(G, s.derived.back(), s.derived.back());
    if (next == s.derived.back()) break;
    s.derived.push_back(next);
  }
  s.lower_central.push_back(full);
  for (;;) {
    ElemMask next = commutator_subgroup(G, s.lower_central.back(), full);
    if (next == s.lower_central.back()) break;
    s.lower_central.push_back(next);
  }
  s.soluble = s.derived.back() == triv;
  s.nilpotent = s.lower_central.back() == triv;
  return s;
}

bool is_soluble(const FiniteGroup& G) { return structural_series(G).soluble; }
bool is_nilpotent(const FiniteGroup& G) { return structural_series(G).nilpotent; }

ElemMask sylow_mask(const FiniteGroup& G, int p) {
  int target = p_part(G.order(), p);
  ElemMask P(G.order());
  P.set(0);
  while (P.count() < target) {
    ElemMask N = normalizer_mask(G, P);
    bool grown = false;
    for (int y = N.first(); y >= 0 && !grown; y = N.next(y)) {
      if (P.test(y)) continue;
      // order of y modulo P
      int x = y, k = 1;
      while (!P.test(x)) {
        x = G.mul(x, y);
        ++k;
      }
      if (k % p == 0) {
        // y^(k/p) has order exactly p modulo P
        int z = y;
        for (int i = 1; i < k / p; ++i) z = G.mul(z, y);
        ElemMask seed = P;
        seed.set(z);
        P = subgroup_closure(G, seed);
        grown = true;
      }
    }
    if (!grown) throw ConsistencyError("Sylow construction stalled");
  }
  return P;
}

std::vector<ElemMask> all_sylow_masks(const FiniteGroup& G, int p) {
  ElemMask P = sylow_mask(G, p);
  std::set<ElemMask> cls;
  for (int g = 0; g < G.order(); ++g) cls.insert(conjugate_mask(G, P, g));
  return {cls.begin(), cls.end()};
}

ElemMask p_core_mask(const FiniteGroup& G, int p) {
  ElemMask core = Bitset::all(G.order());
  for (const ElemMask& P : all_sylow_masks(G, p)) core &= P;
  return core;
}

ElemMask fitting_mask(const FiniteGroup& G) {
  ElemMask u(G.order());
  u.set(0);
  for (int p : prime_factors(G.order())) u |= p_core_mask(G, p);
  return subgroup_closure(G, u);
}

GroupPtr subgroup_as_group(const FiniteGroup& G, const ElemMask& H,
                           std::vector<int>* elem_map) {
  if (!is_subgroup_mask(G, H))
    throw ConsistencyError("mask is not a subgroup");
  std::vector<int> elems = H.to_vector();  // ascending; identity first
  std::vector<int> local(G.order(), -1);
  for (size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = static_cast<int>(elems.size());
  g->mul_.resize(static_cast<size_t>(g->n_) * g->n_);
  for (int a = 0; a < g->n_; ++a)
    for (int b = 0; b < g->n_; ++b)
      g->mul_[a * g->n_ + b] = local[G.mul(elems[a], elems[b])];
  if (G.has_perms()) {
    g->perms_.reserve(g->n_);
    for (int x : elems) g->perms_.push_back(G.perm_of(x));
  }
  g->finish();
  if (elem_map) *elem_map = std::move(elems);
  return g;
}

std::vector<int> generating_elements(const FiniteGroup& G, const ElemMask& H) {
  std::vector<int> gens;
  ElemMask cur(G.order());
  cur.set(0);
  for (int x = H.first(); x >= 0; x = H.next(x)) {
    if (x == 0 || cur.test(x)) continue;
    gens.push_back(x);
    ElemMask seed = cur;
    seed.set(x);
    cur = subgroup_closure(G, seed);
    if (cur == H) break;
  }
  return gens;
}

// --- arithmetic helpers ----------------------------------------------------

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

int p_part(int n, int p) {
  int q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace fitset
