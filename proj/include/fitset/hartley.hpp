#pragma once

#include <map>
#include <string>

#include "fitset/fitting_set.hpp"

namespace fitset {

/// Map from primes to Fitting sets of one ambient group. Only primes
/// dividing the group order carry assignments; every other prime is
/// fixed to the trivial Fitting set and imposes no constraint.
class HFunction {
 public:
  /// Throws InputError when an assigned prime does not divide |G| or an
  /// assignment lives over a different lattice.
  static HFunction make(LatticePtr lat, std::map<int, FittingSet> assignments);

  /// Same Fitting set at every prime dividing |G|.
  static HFunction uniform(LatticePtr lat, const FittingSet& F);

  const LatticePtr& lattice() const { return lat_; }
  const std::map<int, FittingSet>& assignments() const { return assign_; }

  /// h(p); the trivial Fitting set for unassigned primes.
  FittingSet at(int p) const;

  /// "2:=trace(nil);3:=trivial" style, ascending primes.
  std::string desc() const;

 private:
  HFunction(LatticePtr lat, std::map<int, FittingSet> assign);
  LatticePtr lat_;
  std::map<int, FittingSet> assign_;
};

/// HS(h): intersection over primes p dividing |G| of
/// h(p) o (p'(p) * p-groups). With no dividing primes (trivial group)
/// this is the full subgroup set.
FittingSet hs(const HFunction& h);

/// h(p) subset of HS(h) for every assigned prime.
bool is_integrated(const HFunction& h);

/// h(p) subset of h(q) o q'-groups for all assigned pairs p != q.
bool is_full(const HFunction& h);

/// Pointwise intersection with HS(h). Integrated; preserves HS.
HFunction integrate(const HFunction& h);

/// Which residual the full-integrated construction collects per member:
/// the p'-group residual or the soluble-p'-group residual.
enum class ResidualVariant { PPrimeAll, PPrimeSoluble };

/// For each assigned p: residuals of all members of h(p), closed under
/// conjugacy, then Fitting-set closure. Integrates first when needed.
/// Result is full, integrated, and defines the same Hartley set.
HFunction make_full_integrated(const HFunction& h,
                               ResidualVariant variant = ResidualVariant::PPrimeAll);

/// G_h: join over assigned primes of the h(p)-radical of G. Refused
/// (HypothesisError) unless h is full and integrated.
int h_radical(const HFunction& h);

/// A Hartley set bundled with its defining H-function and flags.
struct HartleySet {
  FittingSet set;
  bool integrated = false;
  bool full = false;
};
HartleySet hartley_set(const HFunction& h);

struct LemmaVerdict {
  bool ok = false;
  std::string witness;  // set when ok is false
};

/// h full integrated; H a subgroup id with G_h <= H and H/G_h nilpotent.
/// Verdict: H is a member of HS(h). Precondition violations throw
/// HypothesisError; a false verdict means an implementation bug.
LemmaVerdict check_lemma_3_5(const HFunction& h, int H_id);

/// h full integrated. Verdict: the HS(h)-radical of G equals the
/// preimage of F(G/G_h).
LemmaVerdict check_lemma_3_6(const HFunction& h);

/// h full integrated, G/G_h constrained, HS-radical <= H. Verdict:
/// H in HS(h) iff H/G_h nilpotent.
LemmaVerdict check_cor_3_8(const HFunction& h, int H_id);

}  // namespace fitset
