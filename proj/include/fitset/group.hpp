#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fitset/bitset.hpp"
#include "fitset/perm.hpp"

namespace fitset {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;
struct QuotientMap;

/// Element set of a group, as a bitset over element indices.
using ElemMask = Bitset;

inline constexpr int kDefaultOrderBound = 200;

namespace detail {
GroupPtr quotient_table(const FiniteGroup& G, const std::vector<int>& projection,
                        const std::vector<int>& reps, int kernel_order);
}

/// A concrete finite group backed by a Cayley table over dense element
/// indices 0..order-1. Element 0 is the identity. Immutable once built.
/// A permutation image per element is kept when the group was built
/// from permutations (construction provenance only).
class FiniteGroup {
 public:
  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const { return elem_order_[a]; }

  /// a^g = g^-1 * a * g
  int conj(int a, int g) const { return mul(mul(inv(g), a), g); }

  bool has_perms() const { return !perms_.empty(); }
  const Perm& perm_of(int a) const { return perms_[a]; }
  int degree() const { return has_perms() ? perms_[0].degree() : 0; }

  const std::string& name() const { return name_; }

  /// Closure of permutation generators under composition (worklist BFS).
  /// Throws InputError when the closure exceeds order_bound.
  static GroupPtr from_generators(int degree, const std::vector<Perm>& gens,
                                  int order_bound = kDefaultOrderBound,
                                  std::string name = "");

  /// Validated group from a Cayley table (associativity, identity and
  /// inverses are checked exhaustively; the first failing triple is
  /// reported). If the identity is not element 0, elements are relabeled
  /// by swapping so that it is.
  static GroupPtr from_table(const std::vector<std::vector<int>>& rows,
                             int order_bound = kDefaultOrderBound,
                             std::string name = "");

  static GroupPtr trivial();

  static GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                                 int order_bound = kDefaultOrderBound,
                                 std::string name = "");

  /// Full structural re-check (associativity, identity, inverses,
  /// element orders). Throws ConsistencyError on violation.
  void check_table() const;

 private:
  friend GroupPtr subgroup_as_group(const FiniteGroup&, const ElemMask&,
                                    std::vector<int>*);
  friend GroupPtr detail::quotient_table(const FiniteGroup&,
                                         const std::vector<int>&,
                                         const std::vector<int>&, int);

  FiniteGroup() = default;
  void finish();  // inv_ and elem_order_ from mul_

  int n_ = 0;
  std::vector<int> mul_;  // row-major n x n
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  std::vector<Perm> perms_;  // empty or one per element
  std::string name_;
};

/// Surjective homomorphism source -> target with the given normal kernel.
/// Coset representatives are the minimal element index of each coset,
/// which makes the construction deterministic.
struct QuotientMap {
  GroupPtr source;
  ElemMask kernel;
  GroupPtr target;
  std::vector<int> projection;  // source elem -> target elem
  std::vector<int> section;     // target elem -> coset representative

  ElemMask preimage(const ElemMask& sub_of_target) const;
  ElemMask image(const ElemMask& sub_of_source) const;
};

/// Quotient of G by a normal subgroup. Throws InputError if N is not
/// a normal subgroup of G.
QuotientMap quotient(const GroupPtr& G, const ElemMask& N);

/// Just the quotient group, when the projection maps are not needed.
GroupPtr quotient_target(const FiniteGroup& G, const ElemMask& N);

// --- element-mask subgroup machinery -------------------------------------

/// Least subgroup containing the seed (identity always included).
ElemMask subgroup_closure(const FiniteGroup& G, const ElemMask& seed);

bool is_subgroup_mask(const FiniteGroup& G, const ElemMask& m);

/// S^g elementwise.
ElemMask conjugate_mask(const FiniteGroup& G, const ElemMask& S, int g);

/// True iff S^g = S for all g in G.
bool is_normal_mask(const FiniteGroup& G, const ElemMask& S);

/// True iff S^k = S for all k in K.
bool is_normal_in_mask(const FiniteGroup& G, const ElemMask& S,
                       const ElemMask& K);

/// Smallest normal subgroup of G containing S.
ElemMask normal_closure(const FiniteGroup& G, const ElemMask& S);

/// Descending chain N0 = K, N_{i+1} = normal closure of H in N_i;
/// true iff it stabilizes at H. (H <= K required.)
bool is_subnormal_in_mask(const FiniteGroup& G, const ElemMask& H,
                          const ElemMask& K);

/// All normal subgroups of G, enumerated as joins of normal closures of
/// cyclic subgroups (no subgroup lattice needed). Sorted deterministically.
std::vector<ElemMask> normal_subgroup_masks(const FiniteGroup& G);

ElemMask centralizer_mask(const FiniteGroup& G, const ElemMask& S);
ElemMask normalizer_mask(const FiniteGroup& G, const ElemMask& S);

/// [A, B] = closure of all commutators a^-1 b^-1 a b.
ElemMask commutator_subgroup(const FiniteGroup& G, const ElemMask& A,
                             const ElemMask& B);

/// Derived and lower central series, descending until stabilization
/// (the stable term is included once).
struct StructuralSeries {
  std::vector<ElemMask> derived;
  std::vector<ElemMask> lower_central;
  bool soluble = false;
  bool nilpotent = false;
};
StructuralSeries structural_series(const FiniteGroup& G);

bool is_soluble(const FiniteGroup& G);
bool is_nilpotent(const FiniteGroup& G);

/// One Sylow p-subgroup (normalizer-growth construction); the trivial
/// subgroup when p does not divide |G|.
ElemMask sylow_mask(const FiniteGroup& G, int p);

/// The full conjugacy class of sylow_mask(G, p), sorted.
std::vector<ElemMask> all_sylow_masks(const FiniteGroup& G, int p);

/// O_p(G): intersection of all Sylow p-subgroups.
ElemMask p_core_mask(const FiniteGroup& G, int p);

/// F(G): join of the p-cores over primes dividing |G|.
ElemMask fitting_mask(const FiniteGroup& G);

/// The subgroup H as a standalone group; elements are reindexed in
/// ascending order of their ambient index (so the identity stays 0).
/// elem_map, when given, receives local index -> ambient index.
GroupPtr subgroup_as_group(const FiniteGroup& G, const ElemMask& H,
                           std::vector<int>* elem_map = nullptr);

/// Deterministic small generating set: scan elements ascending, keep
/// those that enlarge the closure.
std::vector<int> generating_elements(const FiniteGroup& G, const ElemMask& H);

// --- arithmetic helpers ---------------------------------------------------

std::vector<int> prime_factors(int n);   // distinct primes, ascending
int p_part(int n, int p);                // largest power of p dividing n
bool is_prime(int n);

}  // namespace fitset
