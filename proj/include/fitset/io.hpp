#pragma once

#include <string>
#include <string_view>

#include "fitset/fitting_set.hpp"
#include "fitset/hartley.hpp"
#include "fitset/subgroup_lattice.hpp"

namespace fitset {

/// Group file (UTF-8, '#' comments). Either
///   degree <n>
///   gen <cycle-notation>     (one or more, 1-based points)
/// or
///   order <n>
///   row <i0> <i1> ...        (one per element, 0-based indices)
/// Exactly one of the two forms per file.
GroupPtr load_group_file(const std::string& path,
                         int order_bound = kDefaultOrderBound);

/// "catalog:<Name>" or "file:<path>".
GroupPtr resolve_group(const std::string& ref,
                       int order_bound = kDefaultOrderBound);

/// Fitting-set spec grammar:
///   fitset := "trace(" classexpr ")" | "trivial"
///           | "closure{" gen-list (";" gen-list)* "}"
///           | "meet(" fitset "," fitset ")"
///           | "oprod(" fitset "," classexpr ")"
/// where each gen-list is a comma-separated list of cycle strings
/// resolved against the ambient group's permutation representation.
FittingSet parse_fitset_spec(std::string_view text, LatticePtr lat);

/// H-function file: lines "p <prime> := <fitset-spec>", '#' comments;
/// unlisted primes stay trivial.
HFunction parse_hfunction_file(const std::string& path, LatticePtr lat);

/// Inline form: "2:=trace(nil);3:=trivial".
HFunction parse_hfunction_inline(std::string_view text, LatticePtr lat);

}  // namespace fitset
