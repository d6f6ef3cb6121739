#include "fitset/fitting_set.hpp"

#include <sstream>

#include "fitset/error.hpp"

namespace fitset {

std::string to_string(FitsetOrigin o) {
  switch (o) {
    case FitsetOrigin::Trace: return "trace";
    case FitsetOrigin::Explicit: return "explicit";
    case FitsetOrigin::Closure: return "closure";
    case FitsetOrigin::Product: return "product";
    case FitsetOrigin::Intersection: return "intersection";
    case FitsetOrigin::Hartley: return "hartley";
  }
  return "?";
}

FittingSet::FittingSet(LatticePtr lat, IdSet members, FitsetOrigin origin,
                       std::string desc)
    : lat_(std::move(lat)),
      members_(std::move(members)),
      origin_(origin),
      desc_(std::move(desc)) {
  if (members_.capacity() != lat_->size())
    throw ConsistencyError("member id-set does not match the lattice");
}

std::optional<FitsetViolation> verify_fitting_set(const SubgroupLattice& lat,
                                                  const IdSet& members) {
  if (members.none())
    return FitsetViolation{0, -1, -1, -1, "candidate set is empty"};

  // (iii) closure under conjugation
  for (int s = members.first(); s >= 0; s = members.next(s)) {
    for (int c : lat.conj_class_of(s)) {
      if (!members.test(c)) {
        int g = *lat.conjugating_element(s, c);
        return FitsetViolation{3, s, c, g,
                               "member " + std::to_string(s) +
                                   " has conjugate " + std::to_string(c) +
                                   " outside the set"};
      }
    }
  }

  // (i) normal subgroups of members
  for (int s = members.first(); s >= 0; s = members.next(s)) {
    IdSet below = lat.ids_below(s);
    for (int t = below.first(); t >= 0; t = below.next(t)) {
      if (members.test(t) || !lat.normal_in(t, s)) continue;
      return FitsetViolation{1, s, t, -1,
                             "subgroup " + std::to_string(t) +
                                 " is normal in member " + std::to_string(s) +
                                 " but outside the set"};
    }
  }

  // (ii) products of members both normal in their join
  for (int s = members.first(); s >= 0; s = members.next(s)) {
    for (int t = members.first(); t <= s && t >= 0; t = members.next(t)) {
      int j = lat.join_of(s, t);
      if (members.test(j)) continue;
      if (lat.normal_in(s, j) && lat.normal_in(t, j))
        return FitsetViolation{2, s, t, -1,
                               "members " + std::to_string(s) + " and " +
                                   std::to_string(t) +
                                   " are normal in their join " +
                                   std::to_string(j) +
                                   " which is outside the set"};
    }
  }
  return std::nullopt;
}

FittingSet trivial_fitset(LatticePtr lat) {
  IdSet m(lat->size());
  m.set(lat->trivial_id());
  return FittingSet(std::move(lat), std::move(m), FitsetOrigin::Explicit,
                    "trivial");
}

FittingSet trace(LatticePtr lat, const ClassExprPtr& X) {
  if (!X->fitting)
    throw InputError("trace refused: " + X->text +
                     " is not flagged as a Fitting class");
  IdSet m(lat->size());
  for (int id = 0; id < lat->size(); ++id)
    if (class_member(*lat->as_group(id), *X)) m.set(id);
  return FittingSet(std::move(lat), std::move(m), FitsetOrigin::Trace,
                    "trace(" + X->text + ")");
}

static std::string closure_desc(const SubgroupLattice& lat, const IdSet& seed) {
  if (seed.none()) return "trivial";
  std::ostringstream out;
  out << "closure{";
  bool first_seed = true;
  for (int id = seed.first(); id >= 0; id = seed.next(id)) {
    if (!first_seed) out << ";";
    first_seed = false;
    bool first_gen = true;
    for (const std::string& g : lat.generator_strings(id)) {
      if (!first_gen) out << ",";
      first_gen = false;
      out << g;
    }
  }
  out << "}";
  return out.str();
}

FittingSet fitset_closure(LatticePtr lat, const IdSet& seed) {
  return fitset_closure(lat, seed, closure_desc(*lat, seed));
}

FittingSet fitset_closure(LatticePtr lat, const IdSet& seed, std::string desc) {
  IdSet m = seed;
  if (m.capacity() != lat->size())
    throw ConsistencyError("closure seed does not match the lattice");
  m.set(lat->trivial_id());
  for (bool changed = true; changed;) {
    changed = false;
    auto add = [&](int id) {
      if (!m.test(id)) {
        m.set(id);
        changed = true;
      }
    };
    for (int s = m.first(); s >= 0; s = m.next(s))
      for (int c : lat->conj_class_of(s)) add(c);
    for (int s = m.first(); s >= 0; s = m.next(s)) {
      IdSet below = lat->ids_below(s);
      for (int t = below.first(); t >= 0; t = below.next(t))
        if (lat->normal_in(t, s)) add(t);
    }
    for (int s = m.first(); s >= 0; s = m.next(s))
      for (int t = m.first(); t <= s && t >= 0; t = m.next(t)) {
        int j = lat->join_of(s, t);
        if (lat->normal_in(s, j) && lat->normal_in(t, j)) add(j);
      }
  }
  return FittingSet(std::move(lat), std::move(m), FitsetOrigin::Closure,
                    std::move(desc));
}

int set_radical(const FittingSet& F, int sub) {
  const SubgroupLattice& lat = *F.lattice();
  int r = lat.trivial_id();
  IdSet below = lat.ids_below(sub);
  for (int t = below.first(); t >= 0; t = below.next(t))
    if (F.contains(t) && lat.normal_in(t, sub)) r = lat.join_of(r, t);
  if (!F.contains(r))
    throw ConsistencyError(
        "set radical escaped the set (Fitting axioms do not hold for " +
        F.desc() + ")");
  return r;
}

/// Local mask of an ambient subgroup inside the materialized group of `sub`.
static ElemMask localize(const std::vector<int>& elem_map, int local_order,
                         const ElemMask& ambient_sub) {
  ElemMask k(local_order);
  for (int i = 0; i < local_order; ++i)
    if (ambient_sub.test(elem_map[i])) k.set(i);
  return k;
}

FittingSet set_product(const FittingSet& F, const ClassExprPtr& X) {
  if (!X->fitting)
    throw InputError("set product refused: " + X->text +
                     " is not flagged as a Fitting class");
  const SubgroupLattice& lat = *F.lattice();
  IdSet m(lat.size());
  for (int h = 0; h < lat.size(); ++h) {
    int rid = set_radical(F, h);
    std::vector<int> elem_map;
    GroupPtr hg = lat.as_group(h, &elem_map);
    ElemMask kernel = localize(elem_map, hg->order(), lat.elems(rid));
    if (class_member(*quotient_target(*hg, kernel), *X)) m.set(h);
  }
  return FittingSet(F.lattice(), std::move(m), FitsetOrigin::Product,
                    "oprod(" + F.desc() + "," + X->text + ")");
}

FittingSet set_intersection(const FittingSet& a, const FittingSet& b) {
  if (a.lattice() != b.lattice())
    throw InputError("Fitting sets live over different groups");
  return FittingSet(a.lattice(), a.members() & b.members(),
                    FitsetOrigin::Intersection,
                    "meet(" + a.desc() + "," + b.desc() + ")");
}

IdSet loose_product(const SubgroupLattice& lat, const IdSet& members,
                    const ClassExprPtr& X) {
  if (!X->fitting)
    throw InputError("loose product refused: " + X->text +
                     " is not flagged as a Fitting class");
  IdSet m(lat.size());
  for (int h = 0; h < lat.size(); ++h) {
    std::vector<int> elem_map;
    GroupPtr hg;
    IdSet below = lat.ids_below(h);
    for (int l = below.first(); l >= 0; l = below.next(l)) {
      if (!members.test(l) || !lat.normal_in(l, h)) continue;
      if (!hg) hg = lat.as_group(h, &elem_map);
      ElemMask kernel = localize(elem_map, hg->order(), lat.elems(l));
      if (class_member(*quotient_target(*hg, kernel), *X)) {
        m.set(h);
        break;
      }
    }
  }
  return m;
}

}  // namespace fitset
