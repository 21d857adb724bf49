#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tgmaps/errors.hpp"

namespace tgmaps {

// The group families: the six with a cyclic maximal subgroup, the three with
// a dihedral (but no cyclic) maximal subgroup, and Z_2^3.
enum class Family {
  Cyclic,               // Z_{2^l}
  CyclicTimesZ2,        // Z_{2^l} x Z_2
  Dihedral,             // D_{2^{l+1}}
  SemiDihedral,         // SD_{2^{l+1}}
  Modular,              // Z_{2^l} : Z_2 with a^b = a^{2^{l-1}+1}
  Quaternion,           // Q_{2^{l+1}}
  QuaternionCentralZ4,  // Q_{2^{l+1}} o Z_4
  DihedralTimesZ2,      // D_{2^{l+1}} x Z_2
  DihedralSemiZ2,       // D_{2^{l+1}} : Z_2 with a^c = a^{2^{l-1}+1}, b^c = b
  ElementaryAbelian8,   // Z_2^3
};

struct FamilyDescriptor {
  Family family{Family::Cyclic};
  int ell{0};  // 0 for ElementaryAbelian8
  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

// Normal form: e[0] is the exponent of the distinguished generator a, reduced
// mod 2^ell; e[1], e[2] are bits for the tail generators. Unused slots stay 0.
struct Element {
  std::array<std::uint32_t, 3> e{0, 0, 0};
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Packs an element into a single integer whose numeric order is the
// lexicographic order on (e[0], e[1], e[2]).
inline std::uint64_t element_key(const Element& u) {
  return (static_cast<std::uint64_t>(u.e[0]) << 2) |
         (static_cast<std::uint64_t>(u.e[1]) << 1) | u.e[2];
}

struct ElementHash {
  std::size_t operator()(const Element& u) const noexcept {
    std::uint64_t k = element_key(u);
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

// One tail generator t: its conjugation action a^t = a^lambda and its square
// t^2 = a^square. Tail generators commute with each other in every family.
struct TailGenerator {
  char name{'?'};
  std::uint32_t lambda{1};
  std::uint32_t square{0};
};

// Formula-level operations accept 2 <= ell <= 30; element scans and oracles
// are gated separately (see kExhaustiveMaxEll and friends).
inline constexpr int kMaxEll = 30;
inline constexpr int kExhaustiveMaxEll = 6;
inline constexpr std::uint64_t kBruteForceAutMaxOrder = 64;
inline constexpr std::uint64_t kClosureCap = std::uint64_t{1} << 20;

// A concrete group with normal-form collection arithmetic. Immutable after
// construction; every operation is a pure function of its arguments.
class GroupInstance {
 public:
  GroupInstance(FamilyDescriptor desc, int ell, std::vector<TailGenerator> tails);

  const FamilyDescriptor& descriptor() const { return desc_; }
  int ell() const { return ell_; }
  std::uint64_t order() const { return order_; }
  int tail_count() const { return static_cast<int>(tails_.size()); }
  int generator_count() const { return 1 + tail_count(); }
  const TailGenerator& tail(int i) const { return tails_[static_cast<std::size_t>(i)]; }
  std::uint32_t a_modulus() const { return a_mod_; }
  std::uint32_t a0_exponent() const { return a0_; }

  Element identity() const { return Element{}; }
  Element gen_a() const { return elem(1); }
  Element generator(int i) const;  // 0 = a, 1.. = tails
  std::vector<Element> generator_sequence() const;
  std::string generator_name(int i) const;

  // Builds a^x * t1^b1 * t2^b2 (x reduced mod 2^ell).
  Element elem(std::uint64_t x, std::uint32_t b1 = 0, std::uint32_t b2 = 0) const;

  bool valid(const Element& u) const;
  void validate(const Element& u) const;  // throws malformed_element_error

  Element multiply(const Element& u, const Element& v) const;
  Element inverse(const Element& u) const;
  Element power(const Element& u, std::int64_t k) const;
  Element conjugate(const Element& u, const Element& v) const;   // v^-1 u v
  Element commutator(const Element& u, const Element& v) const;  // u^-1 v^-1 u v

  std::uint64_t element_order(const Element& u) const;
  bool is_involution(const Element& u) const {
    return u != identity() && multiply(u, u) == identity();
  }
  bool commute(const Element& u, const Element& v) const {
    return multiply(u, v) == multiply(v, u);
  }

  // True iff the given elements generate the whole group. Exact at every ell:
  // in a 2-group, a set generates G iff it spans G modulo the Frattini
  // subgroup, which is <a^2> for every family here (trivial for Z_2^2/Z_2^3).
  bool generates(std::span<const Element> gens) const;

  // All |G| normal forms in lexicographic order. Gated.
  std::vector<Element> all_elements() const;

  // Word in the named generators, e.g. "a^3*b"; "1" for the identity.
  std::string word(const Element& u) const;

  bool exhaustive_ok() const { return ell_ <= kExhaustiveMaxEll; }
  void require_exhaustive(const char* what) const;

 private:
  FamilyDescriptor desc_;
  int ell_;
  std::vector<TailGenerator> tails_;
  std::uint32_t a_mod_;  // 2^ell
  std::uint32_t a0_;     // 2^{ell-1}
  std::uint64_t order_;
};

// Materialized subgroup closure: elements sorted lexicographically.
struct SubgroupClosure {
  std::vector<Element> elements;
  std::vector<Element> generator_list;
  std::uint64_t order{0};
  bool contains(const Element& u) const;
};

// Breadth-first product closure of the given generators. Throws scale_error
// if the closure would exceed `cap` elements.
SubgroupClosure closure(const GroupInstance& g, std::span<const Element> gens,
                        std::uint64_t cap = kClosureCap);

// Order of <u, v> without materializing when the ambient group is too large
// to enumerate: falls back to the dihedral order formula 2|uv| for a pair of
// distinct involutions (and |<w>| = |w| for the degenerate shapes).
std::uint64_t pair_subgroup_order(const GroupInstance& g, const Element& u,
                                  const Element& v);

// Exhaustive element scans; each is gated to ell <= kExhaustiveMaxEll.
std::vector<Element> involutions(const GroupInstance& g);
SubgroupClosure center(const GroupInstance& g);
SubgroupClosure commutator_subgroup(const GroupInstance& g);

// An index-2 subgroup that is cyclic or dihedral. Every catalog group has
// one; failure to find it is an internal invariant violation.
SubgroupClosure maximal_subgroup_witness(const GroupInstance& g);

// Isomorphism-type predicates for materialized subgroups, implemented with
// order statistics and conjugation tests (no general isomorphism machinery).
bool is_cyclic_subgroup(const GroupInstance& g, const SubgroupClosure& h);
bool is_klein_four(const GroupInstance& g, const SubgroupClosure& h);
bool is_dihedral_subgroup(const GroupInstance& g, const SubgroupClosure& h);
bool is_semidihedral_subgroup(const GroupInstance& g, const SubgroupClosure& h);
bool is_modular_subgroup(const GroupInstance& g, const SubgroupClosure& h);
bool is_quaternion_subgroup(const GroupInstance& g, const SubgroupClosure& h);

}  // namespace tgmaps
