#include "tgmaps/tuples.hpp"

#include <set>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tgmaps/catalog.hpp"

using namespace tgmaps;
using tgmaps::testing::make;

TEST_CASE("enumeration counts") {
  CHECK(enumerate(make(Family::Dihedral, 2), TupleKind::Reversing).size() == 72);
  CHECK(enumerate(make(Family::Quaternion, 3), TupleKind::Reversing).empty());
  CHECK(enumerate(make(Family::Dihedral, 3), TupleKind::RotaryPair).size() == 64);
  CHECK(enumerate(make(Family::CyclicTimesZ2, 1), TupleKind::Reversing).size() == 24);
  CHECK(enumerate(make(Family::ElementaryAbelian8, 0), TupleKind::Reversing).size() ==
        168);
  CHECK(enumerate(make(Family::QuaternionCentralZ4, 2), TupleKind::Reversing).size() ==
        48);
  CHECK(enumerate(make(Family::Cyclic, 3), TupleKind::RotaryPair).size() == 4);
}

TEST_CASE("every enumerated tuple is valid and sorted") {
  const GroupInstance g = make(Family::DihedralSemiZ2, 3);
  for (const TupleKind kind :
       {TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair}) {
    const std::vector<GenTuple> ts = enumerate(g, kind);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::set<GenTuple>(ts.begin(), ts.end()).size() == ts.size());
    for (const GenTuple& t : ts) CHECK(is_valid_tuple(g, t));
  }
}

TEST_CASE("orbit partitions") {
  const GroupInstance d8 = make(Family::Dihedral, 2);
  const OrbitPartition p8 = orbit_partition(d8, enumerate(d8, TupleKind::Reversing));
  CHECK(p8.classes.size() == 9);
  for (const OrbitClass& cls : p8.classes) CHECK(cls.size == 8);

  const GroupInstance d16 = make(Family::Dihedral, 3);
  const OrbitPartition p16 = orbit_partition(d16, enumerate(d16, TupleKind::Reversing));
  CHECK(p16.classes.size() == 15);
  for (const OrbitClass& cls : p16.classes) CHECK(cls.size == 32);

  const GroupInstance ea = make(Family::ElementaryAbelian8, 0);
  const OrbitPartition pea = orbit_partition(ea, enumerate(ea, TupleKind::Reversing));
  CHECK(pea.classes.size() == 1);
  CHECK(pea.classes.front().size == 168);
}

TEST_CASE("representatives are lexicographic minima") {
  const GroupInstance g = make(Family::Dihedral, 3);
  const std::vector<GenTuple> ts = enumerate(g, TupleKind::Reversing);
  const OrbitPartition part = orbit_partition(g, ts);
  std::uint64_t total = 0;
  for (const OrbitClass& cls : part.classes) {
    total += cls.size;
    CHECK(is_valid_tuple(g, cls.representative));
  }
  CHECK(total == ts.size());
  for (std::size_t i = 1; i < part.classes.size(); ++i)
    CHECK(part.classes[i - 1].representative < part.classes[i].representative);
}

TEST_CASE("equivalence") {
  const GroupInstance d16 = make(Family::Dihedral, 3);
  const Element b = d16.elem(0, 1);
  const Element ab = d16.elem(1, 1);
  const Element a0 = d16.elem(4);
  const GenTuple t1 = make_triple(TupleKind::Reversing, b, ab, a0);
  const GenTuple t2 = make_triple(TupleKind::Reversing, a0, b, ab);
  CHECK(!equivalent(d16, t1, t2));
  CHECK(equivalent(d16, t1, t1));

  const GroupInstance k4 = make(Family::CyclicTimesZ2, 1);
  const Element a = k4.elem(1, 0);
  const Element bb = k4.elem(0, 1);
  CHECK(equivalent(k4, make_triple(TupleKind::Reversing, a, bb, bb),
                   make_triple(TupleKind::Reversing, bb, a, a)));

  CHECK_THROWS_AS(equivalent(d16, t1, make_pair(d16.gen_a(), b)), mismatch_error);
}

TEST_CASE("transversals match the computed orbits") {
  for (const GroupInstance& g : catalog_all(32)) {
    for (const TupleKind kind :
         {TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair}) {
      const MatchReport rep = match_representatives(g, kind);
      INFO(group_label(g.descriptor()), " ", tuple_kind_name(kind));
      for (const std::string& issue : rep.issues) INFO(issue);
      CHECK(rep.ok);
      CHECK(rep.delta_size == expected_orbit_count(g.descriptor(), kind));
    }
  }
}

TEST_CASE("orbit count closed forms at ell = 4") {
  CHECK(orbit_partition(make(Family::Dihedral, 4),
                        enumerate(make(Family::Dihedral, 4), TupleKind::Reversing))
            .classes.size() == 27);
  CHECK(orbit_partition(make(Family::QuaternionCentralZ4, 4),
                        enumerate(make(Family::QuaternionCentralZ4, 4),
                                  TupleKind::Reversing))
            .classes.size() == 3);
  CHECK(orbit_partition(make(Family::DihedralTimesZ2, 4),
                        enumerate(make(Family::DihedralTimesZ2, 4),
                                  TupleKind::Reversing))
            .classes.size() == 15);
  CHECK(orbit_partition(make(Family::DihedralSemiZ2, 4),
                        enumerate(make(Family::DihedralSemiZ2, 4),
                                  TupleKind::Reversing))
            .classes.size() == 18);
}

TEST_CASE("regular triples sit inside the reversing triples") {
  const GroupInstance g = make(Family::DihedralTimesZ2, 3);
  const std::vector<GenTuple> rev = enumerate(g, TupleKind::Reversing);
  std::set<std::array<Element, 3>> revset;
  for (const GenTuple& t : rev) revset.insert(t.parts);
  const std::vector<GenTuple> reg = enumerate(g, TupleKind::Regular);
  CHECK(!reg.empty());
  for (const GenTuple& t : reg) {
    CHECK(revset.count(t.parts) == 1);
    CHECK(g.commute(t.parts[0], t.parts[2]));
    CHECK(t.parts[0] != t.parts[2]);
  }
}

TEST_CASE("no rotary pairs for the three-generator families") {
  for (const Family f : {Family::Quaternion, Family::QuaternionCentralZ4,
                         Family::DihedralTimesZ2, Family::DihedralSemiZ2}) {
    const GroupInstance g = make(f, min_ell(f));
    CHECK(enumerate(g, TupleKind::RotaryPair).empty());
  }
  CHECK(enumerate(make(Family::ElementaryAbelian8, 0), TupleKind::RotaryPair).empty());
}

TEST_CASE("reversing triples of Q o Z4 are pairwise non-commutative") {
  const GroupInstance g = make(Family::QuaternionCentralZ4, 3);
  for (const GenTuple& t : enumerate(g, TupleKind::Reversing)) {
    CHECK(!g.commute(t.parts[0], t.parts[1]));
    CHECK(!g.commute(t.parts[1], t.parts[2]));
    CHECK(!g.commute(t.parts[0], t.parts[2]));
  }
}

TEST_CASE("enumeration is gated") {
  CHECK_THROWS_AS(enumerate(make(Family::Dihedral, 7), TupleKind::Reversing),
                  scale_error);
}
