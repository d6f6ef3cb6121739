#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fitset/bitset.hpp"
#include "fitset/group.hpp"

namespace fitset {

class SubgroupLattice;
using LatticePtr = std::shared_ptr<const SubgroupLattice>;

/// Subgroup-id set over one lattice.
using IdSet = Bitset;

inline constexpr int kDefaultSubgroupCap = 20000;

/// One subgroup of the ambient group, interned in the lattice.
struct Subgroup {
  GroupPtr ambient;
  ElemMask elems;
  int id = -1;
  int order = 0;
};

/// The complete subgroup lattice of a finite group, with inclusion,
/// normality, subnormality and conjugacy structure. Enumeration seeds
/// with all cyclic subgroups and joins pairs to fixpoint. Immutable
/// once built; all queries are const.
class SubgroupLattice {
 public:
  /// Throws InputError when more than max_subgroups subgroups appear.
  /// dense_limit caps the precomputed join/normality/inclusion tables;
  /// above it the same queries are answered by direct computation.
  static LatticePtr build(GroupPtr G, int max_subgroups = kDefaultSubgroupCap,
                          int dense_limit = 2048);

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(subs_.size()); }

  const Subgroup& at(int id) const { return subs_[id]; }
  const ElemMask& elems(int id) const { return subs_[id].elems; }
  int order_of(int id) const { return subs_[id].order; }

  /// -1 when the mask is not a subgroup of the lattice.
  int id_of(const ElemMask& m) const;

  int trivial_id() const { return trivial_id_; }
  int top_id() const { return top_id_; }

  bool includes(int sup, int sub) const;  // sub <= sup
  int join_of(int a, int b) const;
  int meet_of(int a, int b) const;
  int generated(ElemMask seed) const;

  bool is_normal(int id) const { return normal_.test(id); }
  bool is_subnormal(int id) const { return subnormal_.test(id); }
  bool normal_in(int sub, int sup) const;
  bool subnormal_in(int sub, int sup) const;

  const IdSet& normal_ids() const { return normal_; }
  const IdSet& subnormal_ids() const { return subnormal_; }
  const IdSet& maximal_normal_ids() const { return maximal_normal_; }

  /// Ids of all subgroups contained in `sup`.
  IdSet ids_below(int sup) const;

  int conjugate(int id, int g) const;
  int conj_class_index(int id) const { return class_of_[id]; }
  const std::vector<std::vector<int>>& conj_classes() const { return classes_; }
  const std::vector<int>& conj_class_of(int id) const {
    return classes_[class_of_[id]];
  }

  /// A g with a^g = b, when a and b are conjugate.
  std::optional<int> conjugating_element(int a, int b) const;

  int normalizer_of(int id) const;

  std::vector<int> generators_of(int id) const;

  /// Generator cycle strings when the ambient group has a permutation
  /// representation, otherwise decimal element indices.
  std::vector<std::string> generator_strings(int id) const;

  GroupPtr as_group(int id, std::vector<int>* elem_map = nullptr) const;

 private:
  SubgroupLattice() = default;
  void build_relations(int dense_limit);

  GroupPtr group_;
  std::vector<Subgroup> subs_;
  std::unordered_map<ElemMask, int, BitsetHash> index_;
  int trivial_id_ = -1;
  int top_id_ = -1;

  bool dense_ = false;
  std::vector<int> join_;            // dense: size n*n
  std::vector<Bitset> below_;        // dense: below_[sup] = ids included in sup
  std::vector<Bitset> normal_sub_;   // dense: normal_sub_[sup] = ids normal in sup
  std::vector<std::vector<int>> conj_;  // conj_[id][g] (always built)

  IdSet normal_, subnormal_, maximal_normal_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
};

}  // namespace fitset
