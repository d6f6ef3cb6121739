#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fitset/hartley.hpp"
#include "fitset/subgroup_lattice.hpp"

namespace fitset {

/// Verification suites sweeping the library's theorem claims over the
/// catalog. Failures are data (collected, never thrown); any failure
/// indicates an implementation bug.
enum class Suite { Axioms, ProductAlgebra, HartleyConversions, Injectors, Corollaries };

std::string to_string(Suite s);
Suite suite_from_string(const std::string& name);  // InputError on unknown

enum class ClaimStatus { Pass, Fail, Skipped };

struct ClaimResult {
  std::string claim;    // e.g. "T1.5(1)", "L2.2a", "C4.6(k=2)"
  std::string subject;  // group / h-function / fitting-set instance
  ClaimStatus status = ClaimStatus::Pass;
  std::string witness;  // populated on failure or skip
};

struct VerificationRun {
  Suite suite;
  int max_order = 0;
  std::vector<ClaimResult> results;
  double wall_ms = 0.0;  // not serialized: reports must be byte-identical
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

VerificationRun run_suite(Suite suite, int max_order);

/// The standard h-function battery used by the sweeps: h=trivial,
/// h=trace(nil), h=trace(p(2)), h=trace(p(3)), h=trace(sol), and two
/// mixed per-prime assignments.
std::vector<std::pair<std::string, HFunction>> standard_hfunctions(LatticePtr lat);

// Granular sweeps (the acceptance suite calls these directly).
std::vector<ClaimResult> sweep_fitset_axioms(int max_order);       // D1.2 / L2.1
std::vector<ClaimResult> sweep_product_algebra(int max_order);     // L2.2-L2.5, R3.3
std::vector<ClaimResult> sweep_conversions(int max_order);         // L3.2, L3.4, L3.5, L3.6, C3.8
std::vector<ClaimResult> sweep_theorem_1_5(int max_order);         // T1.5(1)-(3)
std::vector<ClaimResult> sweep_sylow_recovery(int max_order);
std::vector<ClaimResult> sweep_corollaries(int max_order);         // C4.1-C4.7
std::vector<ClaimResult> spot_checks();                            // named injector values
std::vector<ClaimResult> refusal_checks();                         // unconstrained handling
std::vector<ClaimResult> constrained_exhibit();                    // L2.6 witness group

}  // namespace fitset
