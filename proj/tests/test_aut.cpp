#include "tgmaps/aut.hpp"

#include <algorithm>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tgmaps/catalog.hpp"

using namespace tgmaps;
using tgmaps::testing::make;

TEST_CASE("explicit automorphism group orders") {
  CHECK(explicit_aut(make(Family::Dihedral, 3)).order == 32);
  CHECK(explicit_aut(make(Family::Dihedral, 3)).generators.size() == 3);
  CHECK(explicit_aut(make(Family::QuaternionCentralZ4, 2)).order == 48);
  CHECK(explicit_aut(make(Family::DihedralTimesZ2, 3)).order == 256);
  CHECK(explicit_aut(make(Family::Cyclic, 2)).order == 2);
  CHECK(explicit_aut(make(Family::SemiDihedral, 3)).order == 16);
  CHECK(explicit_aut(make(Family::Modular, 3)).order == 16);
  CHECK(explicit_aut(make(Family::DihedralSemiZ2, 3)).order == 64);
}

TEST_CASE("brute-force oracle on the degenerate groups") {
  CHECK(brute_force_aut(make(Family::ElementaryAbelian8, 0)).order == 168);
  CHECK(brute_force_aut(make(Family::Quaternion, 2)).order == 24);
  CHECK(brute_force_aut(make(Family::CyclicTimesZ2, 1)).order == 6);
  CHECK(brute_force_aut(make(Family::QuaternionCentralZ4, 2)).order == 48);

  const GroupInstance z8 = make(Family::Cyclic, 3);
  const AutGroup a8 = brute_force_aut(z8);
  CHECK(a8.order == 4);
  for (const Automorphism& f : a8.elements) CHECK((f.images[0].e[0] % 2) == 1);
}

TEST_CASE("apply and compose") {
  const GroupInstance z8 = make(Family::Cyclic, 3);
  const AutGroup a8 = explicit_aut(z8);
  const Automorphism rho5 = a8.generators[0];
  const Automorphism rhom1 = a8.generators[1];
  CHECK(apply_aut(z8, rhom1, z8.gen_a()) == z8.elem(7));
  CHECK(apply_aut(z8, identity_aut(z8), z8.elem(5)) == z8.elem(5));
  // rho5 . rho-1 = rho-5
  CHECK(compose(z8, rho5, rhom1).images[0] == z8.elem(3));

  const GroupInstance dx = make(Family::DihedralTimesZ2, 3);
  const AutGroup adx = explicit_aut(dx);
  const Automorphism tau = adx.generators[3];
  const Automorphism sigma = adx.generators[4];
  CHECK(apply_aut(dx, tau, dx.elem(1, 1, 0)) == dx.elem(1, 1, 1));  // ab -> abc
  const Automorphism tsts = compose(dx, compose(dx, compose(dx, tau, sigma), tau), sigma);
  CHECK(tsts.images[0] == dx.elem(1 + dx.a0_exponent()));  // a -> a0 a
  CHECK(tsts.images[1] == dx.generator(1));
  CHECK(tsts.images[2] == dx.generator(2));

  const GroupInstance d16 = make(Family::Dihedral, 3);
  const Automorphism eta = explicit_aut(d16).generators[2];
  const Automorphism eta2 = compose(d16, eta, eta);
  CHECK(eta2.images[0] == d16.gen_a());
  CHECK(eta2.images[1] == d16.elem(2, 1));  // b -> a^2 b
}

TEST_CASE("composition is a right action") {
  const GroupInstance g = make(Family::DihedralSemiZ2, 3);
  const AutGroup ag = explicit_aut(g);
  const Automorphism& f = ag.generators[2];
  const Automorphism& h = ag.generators[3];
  const Automorphism fh = compose(g, f, h);
  for (const Element& u : g.all_elements())
    CHECK(apply_aut(g, fh, u) == apply_aut(g, h, apply_aut(g, f, u)));
}

TEST_CASE("explicit generators pass the relation self-test") {
  for (const GroupInstance& g : catalog_all(64))
    for (const Automorphism& f : explicit_aut(g).generators)
      CHECK(is_automorphism(g, f));
}

TEST_CASE("explicit closure equals the brute-force oracle") {
  for (const GroupInstance& g : catalog_all(32)) {
    const AutGroup oracle = brute_force_aut(g);
    const std::vector<Automorphism> closure_set =
        aut_closure(g, explicit_aut(g).generators);
    CHECK(oracle.elements == closure_set);
    CHECK(oracle.order == explicit_aut(g).order);
  }
}

TEST_CASE("automorphisms preserve element order and products") {
  const GroupInstance g = make(Family::QuaternionCentralZ4, 3);
  const std::vector<Automorphism> all = aut_closure(g, explicit_aut(g).generators);
  CHECK(all.size() == 64);
  const std::vector<Element> elems = g.all_elements();
  for (std::size_t i = 0; i < all.size(); i += 7) {
    const Automorphism& f = all[i];
    for (const Element& u : elems) {
      CHECK(g.element_order(apply_aut(g, f, u)) == g.element_order(u));
      for (const Element& v : elems)
        CHECK(apply_aut(g, f, g.multiply(u, v)) ==
              g.multiply(apply_aut(g, f, u), apply_aut(g, f, v)));
    }
  }
}

TEST_CASE("non-automorphisms are rejected") {
  const GroupInstance d8 = make(Family::Dihedral, 2);
  Automorphism bad;
  bad.n = 2;
  bad.images[0] = d8.gen_a();
  bad.images[1] = d8.gen_a();  // b -> a violates b^2 = 1
  CHECK(!is_automorphism(d8, bad));
  Automorphism endo;
  endo.n = 2;
  endo.images[0] = d8.elem(2);  // a -> a^2 preserves nothing of order 8
  endo.images[1] = d8.generator(1);
  CHECK(!is_automorphism(d8, endo));
}

TEST_CASE("brute force is gated") {
  CHECK_THROWS_AS(brute_force_aut(make(Family::DihedralTimesZ2, 5)), scale_error);
}

TEST_CASE("automorphism materialization is capped") {
  const GroupInstance g = make(Family::DihedralTimesZ2, 8);  // |Aut| = 2^18
  CHECK_THROWS_AS(aut_closure(g, explicit_aut(g).generators), scale_error);
}

TEST_CASE("generator images are the documented ones") {
  const GroupInstance dx = make(Family::DihedralTimesZ2, 3);
  const AutGroup adx = explicit_aut(dx);
  REQUIRE(adx.generators.size() == 5);
  // rho5, rho-1, eta, tau, sigma
  CHECK(adx.generators[0].images[0] == dx.elem(5));
  CHECK(adx.generators[1].images[0] == dx.elem(7));
  CHECK(adx.generators[2].images[1] == dx.elem(1, 1, 0));  // b -> ab
  CHECK(adx.generators[3].images[0] == dx.elem(1, 0, 1));  // a -> ac
  CHECK(adx.generators[4].images[2] == dx.elem(4, 0, 1));  // c -> a0 c

  const GroupInstance ds = make(Family::DihedralSemiZ2, 3);
  const AutGroup ads = explicit_aut(ds);
  REQUIRE(ads.generators.size() == 5);
  CHECK(ads.generators[2].images[1] == ds.elem(2, 1, 0));  // eta0: b -> a^2 b
  CHECK(ads.generators[3].images[0] == ds.elem(1, 0, 1));  // tau: a -> ac
  CHECK(ads.generators[3].images[1] == ds.elem(0, 1, 1));  // tau: b -> bc
  CHECK(ads.generators[4].images[2] == ds.elem(4, 0, 1));  // sigma: c -> a0 c

  const GroupInstance sd = make(Family::SemiDihedral, 3);
  CHECK(explicit_aut(sd).generators[2].images[1] == sd.elem(2, 1));  // eta0

  const GroupInstance mod = make(Family::Modular, 3);
  const AutGroup amod = explicit_aut(mod);
  CHECK(amod.generators[2].images[0] == mod.elem(1, 1));  // tau: a -> ab
  CHECK(amod.generators[3].images[1] == mod.elem(4, 1));  // sigma: b -> a0 b

  const GroupInstance qz = make(Family::QuaternionCentralZ4, 3);
  const AutGroup aqz = explicit_aut(qz);
  REQUIRE(aqz.generators.size() == 4);
  CHECK(aqz.generators[2].images[1] == qz.elem(1, 1, 0));  // eta: c -> ac
  CHECK(aqz.generators[3].images[2] == qz.elem(4, 0, 1));  // tau: d -> d^-1 = a0 d
}

TEST_CASE("closed forms hold at formula-only scale") {
  CHECK(explicit_aut(make(Family::DihedralTimesZ2, 12)).order ==
        std::uint64_t{1} << 26);
  CHECK(explicit_aut(make(Family::DihedralSemiZ2, 12)).order == std::uint64_t{1} << 24);
  CHECK(explicit_aut(make(Family::SemiDihedral, 12)).order == std::uint64_t{1} << 22);
  CHECK(explicit_aut(make(Family::Quaternion, 12)).order == std::uint64_t{1} << 23);
  CHECK(explicit_aut(make(Family::Cyclic, 12)).order == 2048);
  // generator construction still self-tests the relations at this scale
  CHECK(explicit_aut(make(Family::QuaternionCentralZ4, 12)).generators.size() == 4);
}
