#include "fitset/subgroup_lattice.hpp"

#include <algorithm>
#include <sstream>

#include "fitset/error.hpp"

namespace fitset {

LatticePtr SubgroupLattice::build(GroupPtr G, int max_subgroups,
                                  int dense_limit) {
  auto lat = std::shared_ptr<SubgroupLattice>(new SubgroupLattice());
  lat->group_ = G;
  int n = G->order();

  std::vector<ElemMask> masks;
  std::unordered_map<ElemMask, int, BitsetHash> seen;
  auto add = [&](const ElemMask& m) {
    if (seen.emplace(m, static_cast<int>(masks.size())).second) {
      masks.push_back(m);
      if (static_cast<int>(masks.size()) > max_subgroups)
        throw InputError("subgroup cap " + std::to_string(max_subgroups) +
                         " exceeded while enumerating subgroups of a group "
                         "of order " +
                         std::to_string(n));
    }
  };

  ElemMask triv(n);
  triv.set(0);
  add(triv);
  for (int x = 1; x < n; ++x) {
    ElemMask seed(n);
    seed.set(x);
    add(subgroup_closure(*G, seed));
  }
  // join pairs until fixpoint; pairing i with j < i covers every pair
  // once both members exist
  for (size_t i = 1; i < masks.size(); ++i) {
    for (size_t j = 1; j < i; ++j) {
      if (masks[j].subset_of(masks[i]) || masks[i].subset_of(masks[j]))
        continue;
      add(subgroup_closure(*G, masks[i] | masks[j]));
    }
  }

  std::sort(masks.begin(), masks.end(),
            [](const ElemMask& a, const ElemMask& b) {
              int ca = a.count(), cb = b.count();
              return ca != cb ? ca < cb : a < b;
            });
  lat->subs_.reserve(masks.size());
  for (size_t i = 0; i < masks.size(); ++i) {
    int id = static_cast<int>(i);
    lat->subs_.push_back(Subgroup{G, masks[i], id, masks[i].count()});
    lat->index_.emplace(masks[i], id);
  }
  lat->trivial_id_ = 0;
  lat->top_id_ = static_cast<int>(masks.size()) - 1;

  lat->build_relations(dense_limit);
  return lat;
}

void SubgroupLattice::build_relations(int dense_limit) {
  const FiniteGroup& G = *group_;
  int m = size();
  int n = G.order();

  conj_.assign(m, std::vector<int>(n, -1));
  for (int id = 0; id < m; ++id) {
    for (int g = 0; g < n; ++g) {
      auto it = index_.find(conjugate_mask(G, subs_[id].elems, g));
      if (it == index_.end())
        throw ConsistencyError("conjugate of a subgroup missing from lattice");
      conj_[id][g] = it->second;
    }
  }

  class_of_.assign(m, -1);
  for (int id = 0; id < m; ++id) {
    if (class_of_[id] >= 0) continue;
    int ci = static_cast<int>(classes_.size());
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) {
      int c = conj_[id][g];
      if (class_of_[c] < 0) {
        class_of_[c] = ci;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }

  normal_ = IdSet(m);
  for (int id = 0; id < m; ++id)
    if (classes_[class_of_[id]].size() == 1) normal_.set(id);

  subnormal_ = IdSet(m);
  ElemMask full = subs_[top_id_].elems;
  for (int id = 0; id < m; ++id)
    if (is_subnormal_in_mask(G, subs_[id].elems, full)) subnormal_.set(id);

  maximal_normal_ = IdSet(m);
  for (int a = normal_.first(); a >= 0; a = normal_.next(a)) {
    if (a == top_id_) continue;
    bool maximal = true;
    for (int b = normal_.first(); maximal && b >= 0; b = normal_.next(b)) {
      if (b == a || b == top_id_) continue;
      if (subs_[a].elems.subset_of(subs_[b].elems)) maximal = false;
    }
    if (maximal) maximal_normal_.set(a);
  }

  dense_ = m <= dense_limit;
  if (!dense_) return;

  below_.assign(m, Bitset(m));
  for (int sup = 0; sup < m; ++sup)
    for (int sub = 0; sub < m; ++sub)
      if (subs_[sub].elems.subset_of(subs_[sup].elems)) below_[sup].set(sub);

  normal_sub_.assign(m, Bitset(m));
  for (int sup = 0; sup < m; ++sup) {
    const ElemMask& S = subs_[sup].elems;
    for (int sub = below_[sup].first(); sub >= 0; sub = below_[sup].next(sub)) {
      bool norm = true;
      for (int g = S.first(); norm && g >= 0; g = S.next(g))
        norm = conj_[sub][g] == sub;
      if (norm) normal_sub_[sup].set(sub);
    }
  }

  join_.assign(static_cast<size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a) {
    join_[a * m + a] = a;
    for (int b = 0; b < a; ++b) {
      int j;
      if (below_[a].test(b))
        j = a;
      else if (below_[b].test(a))
        j = b;
      else
        j = index_.at(subgroup_closure(G, subs_[a].elems | subs_[b].elems));
      join_[a * m + b] = join_[b * m + a] = j;
    }
  }
}

int SubgroupLattice::id_of(const ElemMask& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

bool SubgroupLattice::includes(int sup, int sub) const {
  if (dense_) return below_[sup].test(sub);
  return subs_[sub].elems.subset_of(subs_[sup].elems);
}

int SubgroupLattice::join_of(int a, int b) const {
  if (dense_) return join_[static_cast<size_t>(a) * size() + b];
  if (subs_[a].elems.subset_of(subs_[b].elems)) return b;
  if (subs_[b].elems.subset_of(subs_[a].elems)) return a;
  return index_.at(subgroup_closure(*group_, subs_[a].elems | subs_[b].elems));
}

int SubgroupLattice::meet_of(int a, int b) const {
  return index_.at(subs_[a].elems & subs_[b].elems);
}

int SubgroupLattice::generated(ElemMask seed) const {
  int id = id_of(subgroup_closure(*group_, seed));
  if (id < 0) throw ConsistencyError("generated subgroup missing from lattice");
  return id;
}

bool SubgroupLattice::normal_in(int sub, int sup) const {
  if (dense_) return normal_sub_[sup].test(sub);
  if (!includes(sup, sub)) return false;
  const ElemMask& S = subs_[sup].elems;
  for (int g = S.first(); g >= 0; g = S.next(g))
    if (conj_[sub][g] != sub) return false;
  return true;
}

bool SubgroupLattice::subnormal_in(int sub, int sup) const {
  if (sup == top_id_) return subnormal_.test(sub);
  if (!includes(sup, sub)) return false;
  return is_subnormal_in_mask(*group_, subs_[sub].elems, subs_[sup].elems);
}

IdSet SubgroupLattice::ids_below(int sup) const {
  if (dense_) return below_[sup];
  IdSet r(size());
  for (int id = 0; id < size(); ++id)
    if (subs_[id].elems.subset_of(subs_[sup].elems)) r.set(id);
  return r;
}

int SubgroupLattice::conjugate(int id, int g) const { return conj_[id][g]; }

std::optional<int> SubgroupLattice::conjugating_element(int a, int b) const {
  for (int g = 0; g < group_->order(); ++g)
    if (conj_[a][g] == b) return g;
  return std::nullopt;
}

int SubgroupLattice::normalizer_of(int id) const {
  ElemMask nm(group_->order());
  for (int g = 0; g < group_->order(); ++g)
    if (conj_[id][g] == id) nm.set(g);
  int nid = id_of(nm);
  if (nid < 0) throw ConsistencyError("normalizer missing from lattice");
  return nid;
}

std::vector<int> SubgroupLattice::generators_of(int id) const {
  return generating_elements(*group_, subs_[id].elems);
}

std::vector<std::string> SubgroupLattice::generator_strings(int id) const {
  std::vector<std::string> out;
  std::vector<int> gens = generators_of(id);
  if (gens.empty()) {
    out.push_back(group_->has_perms() ? "()" : "0");
    return out;
  }
  for (int g : gens) {
    if (group_->has_perms())
      out.push_back(group_->perm_of(g).cycle_string());
    else
      out.push_back(std::to_string(g));
  }
  return out;
}

GroupPtr SubgroupLattice::as_group(int id, std::vector<int>* elem_map) const {
  return subgroup_as_group(*group_, subs_[id].elems, elem_map);
}

}  // namespace fitset
