#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "fitset/fitting_set.hpp"
#include "fitset/hartley.hpp"

namespace fitset {

enum class InjectorMethod { BruteForce, Theorem15 };

std::string to_string(InjectorMethod m);

/// Outcome of one injector computation. `injectors` is sorted by id and
/// closed under conjugation; `witnesses` holds one conjugating element
/// per ordered pair when the set is a single conjugacy class.
struct InjectorReport {
  LatticePtr lattice;
  std::string fitset_desc;
  InjectorMethod method = InjectorMethod::BruteForce;
  std::vector<int> injectors;
  std::vector<std::tuple<int, int, int>> witnesses;  // (from, to, g)
  bool single_class = false;
  bool constrained_quotient = false;
  // Theorem-route provenance: flags of the h-function as given, before
  // the automatic conversion.
  bool given_h_integrated = false;
  bool given_h_full = false;
};

/// Members of F maximal under inclusion among members.
std::vector<int> f_maximal_subgroups(const FittingSet& F);

/// Members of F contained in `within` and maximal among those.
std::vector<int> f_maximal_in(const FittingSet& F, int within);

/// Definition scan: all V such that V meet N is F-maximal in N for every
/// subnormal N. The default candidate space is the F-maximal members
/// containing the F-radical (sound: every injector is such); audit mode
/// scans every subgroup. An empty result is data, not an error.
InjectorReport injectors_bruteforce(const FittingSet& F, bool audit = false);

/// C_G(F(G)) <= F(G).
bool is_n_constrained(const FiniteGroup& G);

/// Constrained groups only (HypothesisError otherwise): the nilpotent-
/// maximal subgroups containing F(G); cross-checked against the
/// definition scan (ConsistencyError on mismatch).
InjectorReport nilpotent_injectors(const LatticePtr& lat);

/// HS(h)-injectors via the quotient route: h is converted to a full
/// integrated function, G_h computed, and the nilpotent injectors of
/// G/G_h are pulled back. Refuses (HypothesisError) when G/G_h is not
/// constrained.
InjectorReport hartley_injectors(const LatticePtr& lat, const HFunction& h);

struct CheckResult {
  bool ok = false;
  std::string witness;
};

/// The theorem-route injector set equals the HS(h)-maximal subgroups
/// containing the HS(h)-radical.
CheckResult characterization_check(const LatticePtr& lat, const HFunction& h);

/// (a) V meet K is an injector of K for subnormal K; (b) radical
/// containment and F-maximality of V; (c) maximal-normal lifting;
/// (d) the injector set is closed under conjugation.
struct InjectorPropertyVerdicts {
  CheckResult a, b, c, d;
};
InjectorPropertyVerdicts lemma_2_8_checks(const FittingSet& F, int V_id);

}  // namespace fitset
