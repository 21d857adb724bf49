#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgmaps/aut.hpp"
#include "tgmaps/group.hpp"

namespace tgmaps {

enum class TupleKind { Reversing, Regular, RotaryPair };

std::string_view tuple_kind_name(TupleKind k);
std::optional<TupleKind> parse_tuple_kind(std::string_view name);
inline int tuple_arity(TupleKind k) { return k == TupleKind::RotaryPair ? 2 : 3; }

// An ordered generating tuple: a reversing triple, a regular triple, or a
// rotary pair. Triples are ordered; no symmetrization is applied.
struct GenTuple {
  TupleKind kind{TupleKind::Reversing};
  std::array<Element, 3> parts{};  // parts[2] unused for pairs
  friend bool operator==(const GenTuple&, const GenTuple&) = default;
  friend auto operator<=>(const GenTuple&, const GenTuple&) = default;
};

struct GenTupleHash {
  std::size_t operator()(const GenTuple& t) const noexcept;
};

GenTuple make_triple(TupleKind kind, const Element& x, const Element& y,
                     const Element& z);
GenTuple make_pair(const Element& alpha, const Element& z);

// Validity per kind: Reversing = three involutions generating G; Regular =
// reversing with <x,z> = Z_2^2 (i.e. [x,z]=1, x != z); RotaryPair = |z| = 2
// and <alpha,z> = G.
bool is_valid_tuple(const GroupInstance& g, const GenTuple& t);

std::string tuple_word(const GroupInstance& g, const GenTuple& t);

// Exhaustive, duplicate-free, lexicographically ordered. Gated to ell <= 6.
std::vector<GenTuple> enumerate(const GroupInstance& g, TupleKind kind);

struct OrbitClass {
  GenTuple representative;  // lexicographic minimum of the class
  std::uint64_t size{0};
};

struct OrbitPartition {
  std::vector<OrbitClass> classes;
  std::uint64_t total{0};
};

// Partition of the tuples into orbits under the explicit Aut generators,
// applied coordinate-wise. Classes are found from unvisited tuples in
// lexicographic order, so representatives are lex-minimal.
OrbitPartition orbit_partition(const GroupInstance& g,
                               const std::vector<GenTuple>& tuples);

// Same Aut(G)-orbit test (breadth-first search from t1, early exit on t2).
bool equivalent(const GroupInstance& g, const GenTuple& t1, const GenTuple& t2);

// The hard-coded representative transversal for the family and kind,
// instantiated at the group's ell; empty when the kind does not occur.
std::vector<GenTuple> delta_representatives(const GroupInstance& g, TupleKind kind);

struct MatchReport {
  bool ok{false};
  std::uint64_t orbit_count{0};
  std::uint64_t delta_size{0};
  std::vector<std::string> issues;
};

// Checks that delta_representatives is an exact transversal of the computed
// orbit partition: one member per orbit, no two equivalent.
MatchReport match_representatives(const GroupInstance& g, TupleKind kind);

// Closed-form orbit counts used by the verification suites.
std::uint64_t expected_orbit_count(const FamilyDescriptor& desc, TupleKind kind);

// Closed-form tuple totals (|Aut(G)| times the orbit count, by semiregularity).
std::uint64_t expected_tuple_count(const FamilyDescriptor& desc, TupleKind kind);

}  // namespace tgmaps
