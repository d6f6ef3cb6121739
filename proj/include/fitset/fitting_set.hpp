#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fitset/classes.hpp"
#include "fitset/subgroup_lattice.hpp"

namespace fitset {

enum class FitsetOrigin { Trace, Explicit, Closure, Product, Intersection, Hartley };

std::string to_string(FitsetOrigin o);

/// An explicit Fitting set of one ambient group: a set of subgroup ids
/// over a completed lattice. Construction does not verify the axioms;
/// verify_fitting_set does.
class FittingSet {
 public:
  FittingSet(LatticePtr lat, IdSet members, FitsetOrigin origin,
             std::string desc);

  const LatticePtr& lattice() const { return lat_; }
  const IdSet& members() const { return members_; }
  bool contains(int id) const { return members_.test(id); }
  int count() const { return members_.count(); }
  FitsetOrigin origin() const { return origin_; }
  const std::string& desc() const { return desc_; }

  bool subset_of(const FittingSet& o) const {
    return members_.subset_of(o.members_);
  }
  bool same_members(const FittingSet& o) const { return members_ == o.members_; }

 private:
  LatticePtr lat_;
  IdSet members_;
  FitsetOrigin origin_;
  std::string desc_;
};

/// First violation found when checking the three Fitting-set axioms:
///   1: T normal in S, S a member, T not a member
///   2: S, T members both normal in their join, join not a member
///   3: S a member, S^g not a member
struct FitsetViolation {
  int axiom = 0;
  int id_a = -1;
  int id_b = -1;
  int witness_elem = -1;  // conjugating element for axiom 3
  std::string what;
};

/// nullopt = the candidate satisfies all three axioms (and is nonempty).
std::optional<FitsetViolation> verify_fitting_set(const SubgroupLattice& lat,
                                                  const IdSet& members);

/// {1}.
FittingSet trivial_fitset(LatticePtr lat);

/// Trace of a class in G: all subgroups belonging to X. Refuses
/// non-Fitting shapes.
FittingSet trace(LatticePtr lat, const ClassExprPtr& X);

/// Least Fitting set containing the seed ids (fixpoint of the three
/// closure rules). An empty seed yields {1}.
FittingSet fitset_closure(LatticePtr lat, const IdSet& seed);
FittingSet fitset_closure(LatticePtr lat, const IdSet& seed, std::string desc);

/// H_F: join of the members of F that are normal in the subgroup `sub`.
/// ConsistencyError tripwire if the join is not a member (impossible for
/// verified Fitting sets).
int set_radical(const FittingSet& F, int sub);

/// F o X = {H : H/H_F in X}. Refuses non-Fitting X.
FittingSet set_product(const FittingSet& F, const ClassExprPtr& X);

FittingSet set_intersection(const FittingSet& a, const FittingSet& b);

/// {H : some L normal in H, L in members, H/L in X} - no closure
/// guarantee (the loose product of an arbitrary subgroup set).
IdSet loose_product(const SubgroupLattice& lat, const IdSet& members,
                    const ClassExprPtr& X);

}  // namespace fitset
