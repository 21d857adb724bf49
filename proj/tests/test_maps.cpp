#include "tgmaps/maps.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tgmaps/catalog.hpp"
#include "tgmaps/verify.hpp"

using namespace tgmaps;
using tgmaps::testing::make;

namespace {

GenTuple rev3(const Element& x, const Element& y, const Element& z) {
  return make_triple(TupleKind::Reversing, x, y, z);
}

}  // namespace

TEST_CASE("characteristic values from the tables") {
  const GroupInstance d16 = make(Family::Dihedral, 3);
  const Element b = d16.elem(0, 1);
  const Element ab = d16.elem(1, 1);
  const Element a0 = d16.elem(4);
  CHECK(chi(d16, rev3(b, ab, a0), MapType::Type2Star) == 1);

  const GroupInstance q8z4 = make(Family::QuaternionCentralZ4, 2);
  const GenTuple t = rev3(q8z4.elem(1, 0, 1), q8z4.elem(1, 1, 1), q8z4.elem(0, 1, 1));
  CHECK(chi(q8z4, t, MapType::Type2Star) == -2);

  const GroupInstance z8 = make(Family::Cyclic, 3);
  const GenTuple rot = make_pair(z8.gen_a(), z8.elem(4));
  CHECK(chi(z8, rot, MapType::Type2PEx) == -2);
  CHECK(chi(z8, rot, MapType::Type2StarEx) == 1);
}

TEST_CASE("realize computes coset counts") {
  const GroupInstance d8 = make(Family::Dihedral, 2);
  const GenTuple t8 = make_triple(TupleKind::Regular, d8.elem(0, 1), d8.elem(1, 1),
                                  d8.elem(2, 1));
  const MapRecord r8 = realize(d8, t8, MapType::Type1);
  CHECK(r8.chi == 0);
  CHECK(r8.stab_orders.edge == 4);
  CHECK(!r8.passes_filter);

  const GroupInstance d16 = make(Family::Dihedral, 3);
  const GenTuple t16 = make_triple(TupleKind::Regular, d16.elem(0, 1), d16.elem(1, 1),
                                   d16.elem(4, 1));
  CHECK(realize(d16, t16, MapType::Type1).chi == -2);

  const GroupInstance k4 = make(Family::CyclicTimesZ2, 1);
  const MapRecord rk = realize(
      k4,
      make_triple(TupleKind::Regular, k4.elem(1, 0), k4.elem(1, 1), k4.elem(0, 1)),
      MapType::Type1);
  CHECK(rk.chi == 1);
  CHECK(rk.vertices - rk.edges + rk.faces == 1);

  const GroupInstance dx = make(Family::DihedralTimesZ2, 3);
  const MapRecord rx = realize(
      dx,
      make_triple(TupleKind::Regular, dx.elem(0, 1, 0), dx.elem(1, 1, 0),
                  dx.elem(0, 0, 1)),
      MapType::Type1);
  CHECK(rx.chi == 2);
}

TEST_CASE("classify survivors") {
  const GroupInstance ds = make(Family::DihedralSemiZ2, 3);
  std::multiset<std::int64_t> regular_chis;
  for (const MapRecord& rec : classify(ds))
    if (rec.map_type == MapType::Type1 && rec.passes_filter)
      regular_chis.insert(rec.chi);
  const std::multiset<std::int64_t> expected_regular{-2, -2};
  CHECK(regular_chis == expected_regular);

  CHECK(classify(make(Family::Quaternion, 3)).empty());

  const GroupInstance d16 = make(Family::Dihedral, 3);
  std::map<std::pair<std::string, std::string>, bool> rotary_rows;
  for (const MapRecord& rec : classify(d16)) {
    if (rec.tuple.kind != TupleKind::RotaryPair) continue;
    rotary_rows[{tuple_word(d16, rec.tuple),
                 std::string(map_type_name(rec.map_type))}] = rec.passes_filter;
  }
  // orbit representatives are lex-minimal: (b,a*b) stands for the
  // all-reflection orbit through (ab, b)
  CHECK(rotary_rows.at({"(a,b)", "2*ex"}) == false);  // chi = 4 - 2^3
  CHECK(rotary_rows.at({"(b,a*b)", "2*ex"}) == true);
  CHECK(rotary_rows.at({"(a,b)", "2^Pex"}) == true);
}

TEST_CASE("admissibility") {
  const GroupInstance d8 = make(Family::Dihedral, 2);
  const GenTuple rev = rev3(d8.elem(0, 1), d8.elem(1, 1), d8.elem(2));
  CHECK_THROWS_AS(chi(d8, rev, MapType::Type1), mismatch_error);
  CHECK_THROWS_AS(chi(d8, rev, MapType::Type2StarEx), mismatch_error);
}

TEST_CASE("characteristic formulas run far beyond the exhaustive gate") {
  const GroupInstance d = make(Family::Dihedral, 20);
  const Element b = d.elem(0, 1);
  const Element ab = d.elem(1, 1);
  CHECK(chi(d, rev3(b, ab, d.elem(d.a0_exponent())), MapType::Type2Star) == 1);
  CHECK(chi(d, make_pair(d.multiply(d.gen_a(), b), b), MapType::Type2StarEx) == 2);
  const GroupInstance sd = make(Family::SemiDihedral, 25);
  CHECK(chi(sd, make_pair(sd.gen_a(), sd.generator(1)), MapType::Type2PEx) ==
        2 - (std::int64_t{1} << 24));

  // the top of the supported parameter range
  const GroupInstance d30 = make(Family::Dihedral, 30);
  CHECK(chi(d30, rev3(d30.elem(0, 1), d30.elem(1, 1), d30.elem(d30.a0_exponent())),
            MapType::Type2Star) == 1);
  CHECK(chi(d30, rev3(d30.elem(0, 1), d30.elem(1, 1), d30.elem(0, 1)),
            MapType::Type2Star) == 2);  // s = ell case of 2 - 2^l + 2^s
  CHECK(chi_form(chi(d30, rev3(d30.elem(0, 1), d30.elem(1, 1), d30.elem(4, 1)),
                     MapType::Type2Star)) ==
        ChiForm{ChiForm::Tag::TwoMinusPowPlusPow, 30, 2});
  // the s = 1 neighbour is excluded by the divisibility filter
  CHECK(four_divides(chi(d30, rev3(d30.elem(0, 1), d30.elem(1, 1), d30.elem(2, 1)),
                         MapType::Type2Star)));
}

TEST_CASE("closure route and order route agree on stabilizers") {
  for (const Family f : {Family::Dihedral, Family::SemiDihedral,
                         Family::QuaternionCentralZ4, Family::DihedralSemiZ2}) {
    const GroupInstance g = make(f, min_ell(f) + 1);
    const std::vector<Element> inv = involutions(g);
    for (std::size_t i = 0; i < inv.size(); i += 3)
      for (std::size_t j = 0; j < inv.size(); j += 3) {
        const std::uint64_t via_closure =
            closure(g, std::array<Element, 2>{inv[i], inv[j]}).order;
        const std::uint64_t via_orders =
            inv[i] == inv[j] ? 2 : 2 * g.element_order(g.multiply(inv[i], inv[j]));
        CHECK(via_closure == via_orders);
        CHECK(pair_subgroup_order(g, inv[i], inv[j]) == via_closure);
      }
  }
}

TEST_CASE("every record satisfies Euler consistency") {
  for (const GroupInstance& g : catalog_all(32)) {
    for (const MapRecord& rec : classify(g)) {
      CHECK(static_cast<std::int64_t>(rec.vertices) -
                static_cast<std::int64_t>(rec.edges) +
                static_cast<std::int64_t>(rec.faces) ==
            rec.chi);
      CHECK(rec.passes_filter == !four_divides(rec.chi));
    }
  }
}

TEST_CASE("chi form classification") {
  CHECK(chi_form(1) == ChiForm{ChiForm::Tag::One, 0, 0});
  CHECK(chi_form(2) == ChiForm{ChiForm::Tag::Two, 0, 0});
  CHECK(chi_form(-6) == ChiForm{ChiForm::Tag::TwoMinusPow, 3, 0});
  CHECK(chi_form(-10) == ChiForm{ChiForm::Tag::TwoMinusPowPlusPow, 4, 2});
  CHECK(chi_form(-2) == ChiForm{ChiForm::Tag::TwoMinusPow, 2, 0});
  CHECK(chi_form(0).tag == ChiForm::Tag::Other);
  CHECK(chi_form(5).tag == ChiForm::Tag::Other);
  CHECK(chi_form_label(chi_form(-10)) == "2-2^4+2^2");
}

TEST_CASE("expected cell data matches the engine") {
  for (const GroupInstance& g : catalog_all(64))
    for (const ChiCell& cell : expected_chi_cells(g)) {
      INFO(group_label(g.descriptor()), " ", tuple_word(g, cell.tuple), " ",
           map_type_name(cell.type));
      CHECK(realize(g, cell.tuple, cell.type).chi == cell.expected);
    }
}
