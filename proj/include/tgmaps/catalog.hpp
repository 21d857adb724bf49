#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgmaps/group.hpp"

namespace tgmaps {

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Smallest admissible ell for a family (1 for the parameterless Z_2^3).
int min_ell(Family f);

// Applies the degenerate identifications (Dihedral(1) -> CyclicTimesZ2(1),
// Modular(2) -> Dihedral(2)) and validates the parameter range.
FamilyDescriptor normalized(FamilyDescriptor desc);

std::uint64_t group_order(const FamilyDescriptor& desc);

// Human-readable name such as "D16xZ2" or "Q8oZ4".
std::string group_label(const FamilyDescriptor& desc);

// Constructs the group: generator sequence, collection rules, relation
// self-test. Throws parameter_error for out-of-range descriptors.
GroupInstance build(FamilyDescriptor desc);

// Every catalog group of order <= max_order, one per normalized descriptor,
// ordered by (order, family, ell).
std::vector<GroupInstance> catalog_all(std::uint64_t max_order);

struct FeatureFlags {
  bool has_reversing{false};
  bool has_regular{false};
  bool has_rotary{false};
  friend bool operator==(const FeatureFlags&, const FeatureFlags&) = default;
};

// The verified feature table (which tuple kinds exist for the family).
FeatureFlags feature_flags(const GroupInstance& g);

// Distinguishing invariants (order, involution count, center order,
// exponent); distinct per order across the catalog. Gated scan.
struct InvariantVector {
  std::uint64_t order{0};
  std::uint64_t involution_count{0};
  std::uint64_t center_order{0};
  std::uint64_t exponent{0};
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};
InvariantVector invariant_vector(const GroupInstance& g);

}  // namespace tgmaps
