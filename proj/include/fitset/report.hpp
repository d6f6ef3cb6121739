#pragma once

#include <string>

#include "json.hpp"

#include "fitset/injectors.hpp"
#include "fitset/subgroup_lattice.hpp"
#include "fitset/verify.hpp"

namespace fitset {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json group_info_json(const LatticePtr& lat);
Json lattice_json(const SubgroupLattice& lat);
Json injector_report_json(const InjectorReport& rep);
Json verification_run_json(const VerificationRun& run);

/// Canonical dump: two-space indent plus trailing newline, so identical
/// runs produce byte-identical files.
std::string dump_report(const Json& j);

}  // namespace fitset
