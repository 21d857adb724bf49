#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tgmaps/group.hpp"

namespace tgmaps {

// An automorphism, stored as the images of the distinguished generators and
// evaluated homomorphically on normal forms.
struct Automorphism {
  std::array<Element, 3> images{};
  int n{0};  // number of distinguished generators
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

// Lexicographic key on the image tuple; canonical since generators are fixed.
std::array<std::uint64_t, 3> aut_key(const Automorphism& f);

struct AutHash {
  std::size_t operator()(const Automorphism& f) const noexcept;
};

inline bool aut_less(const Automorphism& x, const Automorphism& y) {
  return aut_key(x) < aut_key(y);
}

Automorphism identity_aut(const GroupInstance& g);

// Homomorphic evaluation of u's normal-form word under the generator images.
Element apply_aut(const GroupInstance& g, const Automorphism& f, const Element& u);

// Right-action composition: (u)(f*h) = ((u)f)h, i.e. f first, then h.
Automorphism compose(const GroupInstance& g, const Automorphism& f,
                     const Automorphism& h);

// True iff the images satisfy every defining relation of the presentation.
bool preserves_relations(const GroupInstance& g, const Automorphism& f);

// Relations plus generation: the images extend to a bijective endomorphism.
bool is_automorphism(const GroupInstance& g, const Automorphism& f);

inline constexpr std::uint64_t kAutMaterializeCap = std::uint64_t{1} << 16;

// Closure of the generators under composition. Throws scale_error above cap.
std::vector<Automorphism> aut_closure(const GroupInstance& g,
                                      const std::vector<Automorphism>& gens,
                                      std::uint64_t cap = kAutMaterializeCap);

struct AutGroup {
  std::vector<Automorphism> generators;
  std::vector<Automorphism> elements;  // materialized only at exhaustive scale
  std::uint64_t order{0};
  bool materialized{false};
};

// Closed form for |Aut(G)|, including the degenerate small groups
// (Z_2^2 -> 6, Q_8 -> 24, Q_8 o Z_4 -> 48, Z_2^3 -> 168).
std::uint64_t aut_order_closed_form(const FamilyDescriptor& desc);

// The explicit generating set per family; for the four degenerate small
// groups the brute-force enumeration is the production path.
AutGroup explicit_aut(const GroupInstance& g);

// Independent oracle: enumerate all generator-image assignments over G^k,
// keep those that preserve the relations and generate G. Gated to |G| <= 64.
AutGroup brute_force_aut(const GroupInstance& g);

}  // namespace tgmaps
