#include "fitset/catalog.hpp"

#include <algorithm>
#include <array>

#include "fitset/error.hpp"

namespace fitset {

GroupPtr cyclic_group(int n, int order_bound) {
  if (n < 1) throw InputError("cyclic group needs n >= 1");
  std::string name = "C" + std::to_string(n);
  if (n == 1) return FiniteGroup::from_generators(1, {}, order_bound, name);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return FiniteGroup::from_generators(n, {Perm(n, img)}, order_bound, name);
}

GroupPtr dihedral_group(int order, int order_bound) {
  if (order < 6 || order % 2 != 0)
    throw InputError("dihedral constructor expects an even order >= 6");
  int n = order / 2;
  std::vector<int> rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;  // reflection fixing vertex 1
  }
  return FiniteGroup::from_generators(n, {Perm(n, rot), Perm(n, ref)},
                                      order_bound,
                                      "D" + std::to_string(order));
}

GroupPtr symmetric_group(int n, int order_bound) {
  if (n < 1 || n > 5) throw InputError("symmetric constructor expects 1 <= n <= 5");
  std::string name = "S" + std::to_string(n);
  if (n == 1) return FiniteGroup::from_generators(1, {}, order_bound, name);
  std::vector<int> cyc(n), swp(n);
  for (int i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % n;
    swp[i] = i;
  }
  std::swap(swp[0], swp[1]);
  return FiniteGroup::from_generators(n, {Perm(n, swp), Perm(n, cyc)},
                                      order_bound, name);
}

GroupPtr alternating_group(int n, int order_bound) {
  if (n < 1 || n > 5)
    throw InputError("alternating constructor expects 1 <= n <= 5");
  std::string name = "A" + std::to_string(n);
  if (n <= 2)
    return FiniteGroup::from_generators(std::max(n, 1), {}, order_bound, name);
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < n; ++i) {  // consecutive 3-cycles
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = j;
    img[i] = i + 1;
    img[i + 1] = i + 2;
    img[i + 2] = i;
    gens.emplace_back(n, img);
  }
  return FiniteGroup::from_generators(n, gens, order_bound, name);
}

GroupPtr quaternion_group() {
  // units encoded basis*2 + sign: 0=+1, 1=-1, 2=+i, 3=-i, 4=+j, 5=-j, 6=+k, 7=-k
  auto qmul = [](int x, int y) {
    int bx = x >> 1, sx = x & 1, by = y >> 1, sy = y & 1;
    int sign = sx ^ sy, basis;
    if (bx == 0)
      basis = by;
    else if (by == 0)
      basis = bx;
    else if (bx == by) {
      basis = 0;
      sign ^= 1;
    } else {
      basis = 6 - bx - by;  // i,j,k are 1,2,3
      if ((by - bx + 3) % 3 != 1) sign ^= 1;  // i*j=k, j*k=i, k*i=j
    }
    return basis * 2 + sign;
  };
  // right-regular permutations of the generators i and j
  auto reg = [&](int g) {
    std::vector<int> img(8);
    for (int x = 0; x < 8; ++x) img[x] = qmul(x, g);
    return Perm(8, img);
  };
  return FiniteGroup::from_generators(8, {reg(2), reg(4)}, 8, "Q8");
}

GroupPtr sl23_group() {
  // nonzero vectors of F3^2, in lexicographic order
  std::array<std::pair<int, int>, 8> vecs;
  int k = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs[k++] = {a, b};
  auto vec_index = [&](int a, int b) {
    for (int i = 0; i < 8; ++i)
      if (vecs[i] == std::make_pair(a, b)) return i;
    throw ConsistencyError("vector lookup failed");
  };
  auto action = [&](std::array<int, 4> m) {
    std::vector<int> img(8);
    for (int i = 0; i < 8; ++i) {
      auto [a, b] = vecs[i];
      img[i] = vec_index((m[0] * a + m[1] * b) % 3, (m[2] * a + m[3] * b) % 3);
    }
    return Perm(8, img);
  };
  // the standard transvection and rotation generators
  return FiniteGroup::from_generators(
      8, {action({1, 1, 0, 1}), action({0, 2, 1, 0})}, 24, "SL23");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    for (int n = 1; n <= 12; ++n)
      v.push_back({"C" + std::to_string(n), n,
                   [n] { return cyclic_group(n); }});
    v.push_back({"S3", 6, [] { return symmetric_group(3); }});
    v.push_back({"S4", 24, [] { return symmetric_group(4); }});
    v.push_back({"A4", 12, [] { return alternating_group(4); }});
    v.push_back({"A5", 60, [] { return alternating_group(5); }});
    v.push_back({"D8", 8, [] { return dihedral_group(8); }});
    v.push_back({"D10", 10, [] { return dihedral_group(10); }});
    v.push_back({"D12", 12, [] { return dihedral_group(12); }});
    v.push_back({"Q8", 8, [] { return quaternion_group(); }});
    v.push_back({"SL23", 24, [] { return sl23_group(); }});
    v.push_back({"C2xS3", 12, [] {
                   return FiniteGroup::direct_product(
                       cyclic_group(2), symmetric_group(3), kDefaultOrderBound,
                       "C2xS3");
                 }});
    v.push_back({"C3xS3", 18, [] {
                   return FiniteGroup::direct_product(
                       cyclic_group(3), symmetric_group(3), kDefaultOrderBound,
                       "C3xS3");
                 }});
    std::sort(v.begin(), v.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
      return a.expected_order != b.expected_order
                 ? a.expected_order < b.expected_order
                 : a.name < b.name;
    });
    return v;
  }();
  return entries;
}

GroupPtr catalog_group(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) {
      GroupPtr g = e.build();
      if (g->order() != e.expected_order)
        throw ConsistencyError("catalog entry " + name + " built order " +
                               std::to_string(g->order()) + ", expected " +
                               std::to_string(e.expected_order));
      return g;
    }
  }
  throw InputError("unknown catalog group \"" + name + "\"");
}

std::vector<GroupPtr> build_catalog(int max_order) {
  std::vector<GroupPtr> out;
  for (const CatalogEntry& e : catalog())
    if (e.expected_order <= max_order) out.push_back(catalog_group(e.name));
  return out;
}

}  // namespace fitset
