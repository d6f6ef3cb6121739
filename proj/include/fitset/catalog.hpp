#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fitset/group.hpp"

namespace fitset {

struct CatalogEntry {
  std::string name;
  int expected_order;
  std::function<GroupPtr()> build;
};

/// Named desk-scale groups, ordered by (order, name):
/// C1..C12, S3, S4, A4, A5, D8, D10, D12, Q8, SL23, C2xS3, C3xS3.
const std::vector<CatalogEntry>& catalog();

/// Throws InputError for unknown names. The constructed group's order is
/// checked against the entry (ConsistencyError on mismatch).
GroupPtr catalog_group(const std::string& name);

std::vector<GroupPtr> build_catalog(int max_order);

// Individual constructors (degree-minimal permutation realizations).
GroupPtr cyclic_group(int n, int order_bound = kDefaultOrderBound);
GroupPtr dihedral_group(int order, int order_bound = kDefaultOrderBound);  // order = 2n, n >= 3
GroupPtr symmetric_group(int n, int order_bound = kDefaultOrderBound);     // n <= 5
GroupPtr alternating_group(int n, int order_bound = kDefaultOrderBound);   // n <= 5
GroupPtr quaternion_group();          // regular representation on 8 points
GroupPtr sl23_group();                // action on the 8 nonzero vectors of F3^2

}  // namespace fitset
