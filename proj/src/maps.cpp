#include "tgmaps/maps.hpp"

#include <stdexcept>

namespace tgmaps {

std::string_view map_type_name(MapType t) {
  switch (t) {
    case MapType::Type1: return "1";
    case MapType::Type2Star: return "2*";
    case MapType::Type2P: return "2^P";
    case MapType::Type2StarEx: return "2*ex";
    case MapType::Type2PEx: return "2^Pex";
  }
  return "?";
}

std::optional<MapType> parse_map_type(std::string_view name) {
  if (name == "1") return MapType::Type1;
  if (name == "2*") return MapType::Type2Star;
  if (name == "2^P" || name == "2P") return MapType::Type2P;
  if (name == "2*ex") return MapType::Type2StarEx;
  if (name == "2^Pex" || name == "2Pex") return MapType::Type2PEx;
  return std::nullopt;
}

TupleKind admissible_kind(MapType t) {
  switch (t) {
    case MapType::Type1: return TupleKind::Regular;
    case MapType::Type2Star:
    case MapType::Type2P: return TupleKind::Reversing;
    case MapType::Type2StarEx:
    case MapType::Type2PEx: return TupleKind::RotaryPair;
  }
  throw parameter_error("unknown map type");
}

bool four_divides(std::int64_t chi) { return ((chi % 4) + 4) % 4 == 0; }

namespace {

StabOrders stabilizer_orders(const GroupInstance& g, const GenTuple& t, MapType mt) {
  if (t.kind != admissible_kind(mt))
    throw mismatch_error(std::string("tuple kind '") +
                         std::string(tuple_kind_name(t.kind)) +
                         "' is not admissible for map type '" +
                         std::string(map_type_name(mt)) + "'");
  StabOrders s;
  const Element& x = t.parts[0];
  const Element& y = t.parts[1];
  const Element& z = t.parts[2];
  switch (mt) {
    case MapType::Type1:
      s.vertex = pair_subgroup_order(g, x, y);
      s.edge = pair_subgroup_order(g, x, z);
      s.face = pair_subgroup_order(g, y, z);
      break;
    case MapType::Type2Star:
      s.vertex = pair_subgroup_order(g, x, y);
      s.edge = 2;  // <z>
      s.face = pair_subgroup_order(g, x, z);
      s.face2 = pair_subgroup_order(g, y, z);
      break;
    case MapType::Type2P:
      s.vertex = pair_subgroup_order(g, x, y);
      s.edge = 2;
      s.face = pair_subgroup_order(g, x, g.conjugate(y, z));
      break;
    case MapType::Type2StarEx: {
      const Element& alpha = t.parts[0];
      const Element& zz = t.parts[1];
      s.vertex = g.element_order(alpha);
      s.edge = 2;
      s.face = pair_subgroup_order(g, zz, g.conjugate(zz, alpha));
      break;
    }
    case MapType::Type2PEx: {
      const Element& alpha = t.parts[0];
      const Element& zz = t.parts[1];
      s.vertex = g.element_order(alpha);
      s.edge = 2;
      s.face = g.element_order(g.multiply(alpha, zz));
      break;
    }
  }
  return s;
}

}  // namespace

std::int64_t chi(const GroupInstance& g, const GenTuple& t, MapType mt) {
  return realize(g, t, mt).chi;
}

MapRecord realize(const GroupInstance& g, const GenTuple& t, MapType mt) {
  const StabOrders s = stabilizer_orders(g, t, mt);
  const std::uint64_t n = g.order();
  MapRecord rec;
  rec.map_type = mt;
  rec.group = g.descriptor();
  rec.tuple = t;
  rec.stab_orders = s;
  rec.vertices = n / s.vertex;
  rec.edges = n / s.edge;
  rec.faces = n / s.face + (s.face2 ? n / s.face2 : 0);
  rec.chi = static_cast<std::int64_t>(rec.vertices) -
            static_cast<std::int64_t>(rec.edges) +
            static_cast<std::int64_t>(rec.faces);
  rec.passes_filter = !four_divides(rec.chi);
  return rec;
}

std::vector<MapRecord> classify(const GroupInstance& g) {
  std::vector<MapRecord> out;
  static constexpr TupleKind kKinds[] = {TupleKind::Reversing, TupleKind::Regular,
                                         TupleKind::RotaryPair};
  for (const TupleKind kind : kKinds) {
    const OrbitPartition part = orbit_partition(g, enumerate(g, kind));
    for (const OrbitClass& cls : part.classes) {
      if (kind == TupleKind::Reversing) {
        out.push_back(realize(g, cls.representative, MapType::Type2Star));
        out.push_back(realize(g, cls.representative, MapType::Type2P));
      } else if (kind == TupleKind::Regular) {
        out.push_back(realize(g, cls.representative, MapType::Type1));
      } else {
        out.push_back(realize(g, cls.representative, MapType::Type2StarEx));
        out.push_back(realize(g, cls.representative, MapType::Type2PEx));
      }
    }
  }
  return out;
}

ChiForm chi_form(std::int64_t chi) {
  if (chi == 1) return {ChiForm::Tag::One, 0, 0};
  if (chi == 2) return {ChiForm::Tag::Two, 0, 0};
  for (int l = 2; l <= 62; ++l) {
    if (2 - (std::int64_t{1} << l) == chi) return {ChiForm::Tag::TwoMinusPow, l, 0};
  }
  for (int l = 2; l <= 62; ++l) {
    const std::int64_t base = 2 - (std::int64_t{1} << l);
    for (int s = 2; s <= l; ++s) {
      if (base + (std::int64_t{1} << s) == chi)
        return {ChiForm::Tag::TwoMinusPowPlusPow, l, s};
    }
  }
  return {ChiForm::Tag::Other, 0, 0};
}

std::string chi_form_label(const ChiForm& f) {
  switch (f.tag) {
    case ChiForm::Tag::One: return "1";
    case ChiForm::Tag::Two: return "2";
    case ChiForm::Tag::TwoMinusPow: return "2-2^" + std::to_string(f.ell);
    case ChiForm::Tag::TwoMinusPowPlusPow:
      return "2-2^" + std::to_string(f.ell) + "+2^" + std::to_string(f.s);
    case ChiForm::Tag::Other: return "other";
  }
  return "?";
}

}  // namespace tgmaps
