#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgmaps/group.hpp"
#include "tgmaps/tuples.hpp"

namespace tgmaps {

// The five arc-transitive map types. Type 1 is regular; 2* and 2^P are
// vertex-reversing; 2*ex and 2^Pex are vertex-rotary.
enum class MapType { Type1, Type2Star, Type2P, Type2StarEx, Type2PEx };

std::string_view map_type_name(MapType t);
std::optional<MapType> parse_map_type(std::string_view name);

// Which tuple kind feeds each map type.
TupleKind admissible_kind(MapType t);

// Subgroup orders entering the Euler characteristic: vertex / edge / face
// stabilizers; face2 is the second face orbit of type 2* (0 otherwise).
struct StabOrders {
  std::uint64_t vertex{0};
  std::uint64_t edge{0};
  std::uint64_t face{0};
  std::uint64_t face2{0};
  friend bool operator==(const StabOrders&, const StabOrders&) = default;
};

struct MapRecord {
  MapType map_type{MapType::Type1};
  FamilyDescriptor group;
  GenTuple tuple;
  StabOrders stab_orders;
  std::int64_t chi{0};
  std::uint64_t vertices{0};
  std::uint64_t edges{0};
  std::uint64_t faces{0};
  bool passes_filter{false};  // true iff 4 does not divide chi
};

bool four_divides(std::int64_t chi);

std::int64_t chi(const GroupInstance& g, const GenTuple& t, MapType mt);

// Full V/E/F realization as coset counts; V - E + F = chi is checked at
// construction.
MapRecord realize(const GroupInstance& g, const GenTuple& t, MapType mt);

// One MapRecord per (orbit representative, admissible map type), all three
// tuple kinds, annotated with passes_filter. Gated to ell <= 6.
std::vector<MapRecord> classify(const GroupInstance& g);

// Classification of a characteristic value into the closed forms
// 1, 2, 2 - 2^l, 2 - 2^l + 2^s (l >= s > 1), or none of these.
struct ChiForm {
  enum class Tag { One, Two, TwoMinusPow, TwoMinusPowPlusPow, Other };
  Tag tag{Tag::Other};
  int ell{0};
  int s{0};
  friend bool operator==(const ChiForm&, const ChiForm&) = default;
};

// Smallest-parameter witness, scanning the pure form before the mixed one.
ChiForm chi_form(std::int64_t chi);
std::string chi_form_label(const ChiForm& f);

}  // namespace tgmaps
