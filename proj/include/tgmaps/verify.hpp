#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgmaps/group.hpp"
#include "tgmaps/maps.hpp"
#include "tgmaps/tuples.hpp"

namespace tgmaps {

struct VerifyOptions {
  int ell_lo{2};
  int ell_hi{5};
  bool oracle{false};
  std::uint64_t seed{0};
  std::optional<Family> family;  // restrict to one family when set
};

struct CheckResult {
  std::string name;
  bool pass{false};
  std::string detail;
};

// Expected Euler characteristics for every (transversal member, admissible
// map type) cell, from the closed-form expressions in ell; independent of
// the subgroup-closure path used by the classifier.
struct ChiCell {
  GenTuple tuple;
  MapType type{MapType::Type1};
  std::int64_t expected{0};
};
std::vector<ChiCell> expected_chi_cells(const GroupInstance& g);

// Closed-form involution / center / commutator-subgroup orders per family.
std::uint64_t expected_involution_count(const FamilyDescriptor& d);
std::uint64_t expected_center_order(const FamilyDescriptor& d);
std::uint64_t expected_commutator_order(const FamilyDescriptor& d);

namespace checks {

CheckResult engine_normal_forms(const std::vector<GroupInstance>& gs);
CheckResult engine_axioms(const std::vector<GroupInstance>& gs, std::uint64_t seed);
CheckResult engine_involutions(const std::vector<GroupInstance>& gs);
CheckResult engine_center(const std::vector<GroupInstance>& gs);
CheckResult engine_commutator(const std::vector<GroupInstance>& gs);
CheckResult engine_maximal_subgroup(const std::vector<GroupInstance>& gs);
CheckResult engine_frattini_quotient(const std::vector<GroupInstance>& gs);
CheckResult engine_two_generation(const std::vector<GroupInstance>& gs);
CheckResult engine_parity_rule(const std::vector<GroupInstance>& gs);
CheckResult catalog_completeness();
CheckResult catalog_subgroup_types(const std::vector<GroupInstance>& gs);
CheckResult catalog_feature_flags(const std::vector<GroupInstance>& gs);
CheckResult aut_orders(const std::vector<GroupInstance>& gs);
CheckResult aut_closure_counts(const std::vector<GroupInstance>& gs);
CheckResult aut_oracle(const std::vector<GroupInstance>& gs);
CheckResult aut_class_separation(const std::vector<GroupInstance>& gs);
CheckResult tuples_counts(const std::vector<GroupInstance>& gs);
CheckResult tuples_semiregularity(const std::vector<GroupInstance>& gs);
CheckResult tuples_orbit_counts(const std::vector<GroupInstance>& gs);
CheckResult tuples_transversals(const std::vector<GroupInstance>& gs);
CheckResult tuples_regular_subset(const std::vector<GroupInstance>& gs);
CheckResult tuples_noncommuting(const std::vector<GroupInstance>& gs);
CheckResult tuples_no_rotary(const std::vector<GroupInstance>& gs);
CheckResult maps_euler(const std::vector<GroupInstance>& gs);
CheckResult maps_chi_tables(const std::vector<GroupInstance>& gs);
CheckResult maps_chi_form(const std::vector<GroupInstance>& gs);
CheckResult maps_aut_invariance(const std::vector<GroupInstance>& gs, std::uint64_t seed);
CheckResult maps_excluded_divisibility(const std::vector<GroupInstance>& gs);
CheckResult maps_stab_routes(const std::vector<GroupInstance>& gs);
CheckResult maps_edge_faithfulness(const std::vector<GroupInstance>& gs);
CheckResult charfree_witnesses();
CheckResult charfree_multiples();
CheckResult charfree_oracle();

}  // namespace checks

// The full verification run; deterministic order and content given the seed.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

// Groups for one family over the clamped ell range [lo, hi].
std::vector<GroupInstance> family_range(Family f, int lo, int hi);

// All families over the range, plus the parameterless small groups
// (Z_2^2 and Z_2^3) that sit below the default range.
std::vector<GroupInstance> groups_in_scope(const VerifyOptions& opts);

}  // namespace tgmaps
