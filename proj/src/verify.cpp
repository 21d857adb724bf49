#include "tgmaps/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "tgmaps/aut.hpp"
#include "tgmaps/catalog.hpp"
#include "tgmaps/squarefree.hpp"

namespace tgmaps {

namespace {

std::string label(const GroupInstance& g) { return group_label(g.descriptor()); }

// Collects failures; keeps the report readable when a check fails broadly.
struct Collector {
  explicit Collector(std::string check_name) : name(std::move(check_name)) {}
  std::string name;
  std::vector<std::string> issues;
  std::uint64_t checked{0};
  std::uint64_t suppressed{0};

  void expect(bool cond, const std::string& msg) {
    ++checked;
    if (cond) return;
    if (issues.size() < 8)
      issues.push_back(msg);
    else
      ++suppressed;
  }

  template <typename T, typename U>
  void expect_eq(const T& computed, const U& expected, const std::string& what) {
    expect(computed == static_cast<T>(expected),
           what + ": expected " + std::to_string(static_cast<long long>(expected)) +
               ", computed " + std::to_string(static_cast<long long>(computed)));
  }

  CheckResult result(std::string pass_note = "") const {
    CheckResult r;
    r.name = name;
    r.pass = issues.empty();
    if (r.pass) {
      r.detail = std::to_string(checked) + " assertions";
      if (!pass_note.empty()) r.detail += "; " + pass_note;
    } else {
      std::ostringstream os;
      for (std::size_t i = 0; i < issues.size(); ++i) os << (i ? " | " : "") << issues[i];
      if (suppressed) os << " | (+" << suppressed << " more)";
      r.detail = os.str();
    }
    return r;
  }
};

std::int64_t pw(int k) { return std::int64_t{1} << k; }

std::mt19937_64 seeded_rng(std::uint64_t seed, const GroupInstance& g) {
  return std::mt19937_64(seed * 0x9e3779b97f4a7c15ULL +
                         (static_cast<std::uint64_t>(g.descriptor().family) << 8) +
                         static_cast<std::uint64_t>(g.ell()));
}

Element random_element(const GroupInstance& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> xd(0, g.a_modulus() - 1);
  std::uniform_int_distribution<std::uint32_t> bd(0, 1);
  return g.elem(xd(rng), g.tail_count() >= 1 ? bd(rng) : 0,
                g.tail_count() >= 2 ? bd(rng) : 0);
}

}  // namespace

std::vector<GroupInstance> family_range(Family f, int lo, int hi) {
  std::vector<GroupInstance> out;
  if (f == Family::ElementaryAbelian8) {
    out.push_back(build({f, 0}));
    return out;
  }
  for (int l = std::max(min_ell(f), lo); l <= std::min(hi, kMaxEll); ++l)
    out.push_back(build({f, l}));
  return out;
}

std::vector<GroupInstance> groups_in_scope(const VerifyOptions& opts) {
  std::vector<GroupInstance> out;
  const auto want = [&](Family f) { return !opts.family || *opts.family == f; };
  for (const Family f :
       {Family::Cyclic, Family::CyclicTimesZ2, Family::Dihedral, Family::SemiDihedral,
        Family::Modular, Family::Quaternion, Family::QuaternionCentralZ4,
        Family::DihedralTimesZ2, Family::DihedralSemiZ2}) {
    if (!want(f)) continue;
    for (GroupInstance& g : family_range(f, opts.ell_lo, opts.ell_hi))
      out.push_back(std::move(g));
  }
  if (want(Family::ElementaryAbelian8)) out.push_back(build({Family::ElementaryAbelian8, 0}));
  if (want(Family::CyclicTimesZ2) && opts.ell_lo > 1)
    out.push_back(build({Family::CyclicTimesZ2, 1}));  // Z_2^2 sits below the range
  std::sort(out.begin(), out.end(), [](const GroupInstance& x, const GroupInstance& y) {
    return std::tuple(x.order(), static_cast<int>(x.descriptor().family),
                      x.descriptor().ell) <
           std::tuple(y.order(), static_cast<int>(y.descriptor().family),
                      y.descriptor().ell);
  });
  return out;
}

std::uint64_t expected_involution_count(const FamilyDescriptor& d) {
  const int l = d.ell;
  switch (d.family) {
    case Family::Cyclic: return 1;
    case Family::CyclicTimesZ2: return 3;
    case Family::Dihedral: return (std::uint64_t{1} << l) + 1;
    case Family::SemiDihedral: return (std::uint64_t{1} << (l - 1)) + 1;
    case Family::Modular: return 3;
    case Family::Quaternion: return 1;
    case Family::QuaternionCentralZ4: return (std::uint64_t{1} << l) + 3;
    case Family::DihedralTimesZ2: return (std::uint64_t{1} << (l + 1)) + 3;
    case Family::DihedralSemiZ2:
      return (std::uint64_t{1} << l) + (std::uint64_t{1} << (l - 1)) + 3;
    case Family::ElementaryAbelian8: return 7;
  }
  throw parameter_error("unknown family");
}

std::uint64_t expected_center_order(const FamilyDescriptor& d) {
  const int l = d.ell;
  switch (d.family) {
    case Family::Cyclic: return std::uint64_t{1} << l;
    case Family::CyclicTimesZ2: return std::uint64_t{1} << (l + 1);
    case Family::Dihedral:
    case Family::SemiDihedral:
    case Family::Quaternion:
    case Family::DihedralSemiZ2: return 2;
    case Family::Modular: return std::uint64_t{1} << (l - 1);
    case Family::QuaternionCentralZ4:
    case Family::DihedralTimesZ2: return 4;
    case Family::ElementaryAbelian8: return 8;
  }
  throw parameter_error("unknown family");
}

std::uint64_t expected_commutator_order(const FamilyDescriptor& d) {
  const int l = d.ell;
  switch (d.family) {
    case Family::Cyclic:
    case Family::CyclicTimesZ2:
    case Family::ElementaryAbelian8: return 1;
    case Family::Modular: return 2;
    default: return std::uint64_t{1} << (l - 1);
  }
}

std::vector<ChiCell> expected_chi_cells(const GroupInstance& g) {
  std::vector<ChiCell> cells;
  const FamilyDescriptor d = g.descriptor();
  const int l = g.ell();
  const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
  // 2-adic valuation of k mod 2^l, with v(0) = l.
  const auto v = [&](std::uint64_t k) {
    k &= mask;
    if (k == 0) return l;
    int c = 0;
    while (!(k & 1)) {
      k >>= 1;
      ++c;
    }
    return c;
  };
  const auto rev = [&](const Element& x, const Element& y, const Element& z,
                       std::int64_t star, std::int64_t p) {
    const GenTuple t = make_triple(TupleKind::Reversing, x, y, z);
    cells.push_back({t, MapType::Type2Star, star});
    cells.push_back({t, MapType::Type2P, p});
  };
  const auto reg = [&](const Element& x, const Element& y, const Element& z,
                       std::int64_t chi1) {
    cells.push_back({make_triple(TupleKind::Regular, x, y, z), MapType::Type1, chi1});
  };
  const auto rot = [&](const Element& alpha, const Element& z, std::int64_t starex,
                       std::int64_t pex) {
    const GenTuple t = make_pair(alpha, z);
    cells.push_back({t, MapType::Type2StarEx, starex});
    cells.push_back({t, MapType::Type2PEx, pex});
  };

  switch (d.family) {
    case Family::Cyclic:
      rot(g.gen_a(), g.elem(g.a0_exponent()), 1, 2 - pw(l - 1));
      break;
    case Family::CyclicTimesZ2: {
      const Element a = g.gen_a();
      const Element b = g.generator(1);
      if (l == 1) {
        const Element ab = g.elem(1, 1);
        rev(a, ab, b, 1, 0);
        rev(a, b, b, 2, 0);
        rev(b, a, b, 2, 0);
        rev(b, b, a, 2, 2);
        reg(a, ab, b, 1);
        reg(a, b, b, 2);
        reg(b, b, a, 2);
        rot(a, b, 2, 2);
      } else {
        rot(a, b, 2, 4 - pw(l));
      }
      break;
    }
    case Family::Modular:
      rot(g.gen_a(), g.generator(1), 2 - pw(l - 1), 4 - pw(l));
      break;
    case Family::Dihedral: {
      const Element a = g.gen_a();
      const Element b = g.elem(0, 1);
      const Element ab = g.elem(1, 1);
      const Element a0 = g.elem(g.a0_exponent());
      rev(b, ab, a0, 1, 2 - pw(l));
      rev(a0, b, ab, 1, 0);
      rev(ab, a0, b, 1, 0);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << (l - 1)); ++x) {
        const Element w = g.elem(2 * x, 1);
        const std::int64_t star = 2 - pw(l) + pw(v(2 * x));
        rev(b, ab, w, star, 2 - pw(l));
        rev(w, b, ab, star, pw(v(2 * x)) - pw(l) + pw(v(2 * x + mask - 1)));
        rev(ab, w, b, star, 2 - pw(l));
      }
      reg(b, ab, a0, 1);
      reg(b, ab, g.elem(g.a0_exponent(), 1), 2 - pw(l - 1));
      reg(a0, b, ab, 1);
      rot(a, b, 4 - pw(l), 2);
      rot(ab, b, 2, 2);
      break;
    }
    case Family::SemiDihedral: {
      const Element a = g.gen_a();
      const Element b = g.generator(1);
      rot(a, b, 4 - pw(l), 2 - pw(l - 1));
      rot(g.multiply(a, b), b, 2 - pw(l - 1), 2 - pw(l - 1));
      break;
    }
    case Family::Quaternion:
      break;
    case Family::QuaternionCentralZ4: {
      const Element u = g.elem(std::uint64_t{1} << (l - 2), 0, 1);
      const Element cd = g.elem(0, 1, 1);
      const Element acd = g.elem(1, 1, 1);
      rev(u, acd, cd, 2 - pw(l), -pw(l));
      if (l >= 3) {
        rev(cd, u, acd, 2 - pw(l), -pw(l));
        rev(acd, cd, u, 2 - pw(l), 4 - pw(l + 1));
      }
      break;
    }
    case Family::DihedralTimesZ2:
    case Family::DihedralSemiZ2: {
      const bool semi = d.family == Family::DihedralSemiZ2;
      const Element b = g.elem(0, 1, 0);
      const Element ab = g.elem(1, 1, 0);
      const Element c = g.elem(0, 0, 1);
      const Element bc = g.elem(0, 1, 1);
      const std::int64_t star_x = semi ? 2 - pw(l - 1) : 2;
      rev(b, ab, c, star_x, 4 - pw(l + 1));
      if (semi) {
        rev(ab, b, c, star_x, 4 - pw(l + 1));
        rev(c, b, ab, star_x, 0);
        rev(c, ab, b, star_x, -pw(l));
        rev(ab, c, b, star_x, -pw(l));  // <ab,c> has order 8, like <c,ab>
        rev(b, c, ab, star_x, 0);
      } else {
        rev(c, b, ab, star_x, 0);
        rev(ab, c, b, star_x, 0);
      }
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << (l - 2)); ++x) {
        const Element w = g.elem(2 * x, 1, 1);
        const std::int64_t star = 4 - pw(l + 1) + pw(v(4 * x));
        rev(b, ab, w, star, 4 - pw(l + 1));
        rev(w, b, ab, star, pw(v(4 * x)) - pw(l + 1) + pw(v(4 * x + 4 * mask)));
        rev(ab, w, b, star, 4 - pw(l + 1));
      }
      if (semi) {
        reg(b, ab, c, 2 - pw(l - 1));
        reg(c, ab, b, 2 - pw(l - 1));
        reg(b, ab, bc, 4 - pw(l));
      } else {
        reg(b, ab, c, 2);
        reg(b, ab, bc, 4 - pw(l));
        reg(c, b, ab, 2);
      }
      break;
    }
    case Family::ElementaryAbelian8: {
      const Element a = g.elem(1, 0, 0);
      const Element b = g.elem(0, 1, 0);
      const Element c = g.elem(0, 0, 1);
      rev(a, b, c, 2, 0);
      reg(a, b, c, 2);
      break;
    }
  }
  return cells;
}

namespace checks {

CheckResult engine_normal_forms(const std::vector<GroupInstance>& gs) {
  Collector c("engine-normal-forms");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    const std::vector<Element> all = g.all_elements();
    c.expect_eq(all.size(), g.order(), label(g) + " normal-form count");
    c.expect(std::set<Element>(all.begin(), all.end()).size() == g.order(),
             label(g) + " normal forms are not distinct");
    c.expect_eq(closure(g, g.generator_sequence()).order, g.order(),
                label(g) + " generator closure");
  }
  return c.result();
}

CheckResult engine_axioms(const std::vector<GroupInstance>& gs, std::uint64_t seed) {
  Collector c("engine-axioms");
  for (const GroupInstance& g : gs) {
    if (g.order() <= 64) {
      const std::vector<Element> all = g.all_elements();
      for (const Element& u : all) {
        c.expect(g.multiply(u, g.identity()) == u &&
                     g.multiply(g.identity(), u) == u &&
                     g.multiply(u, g.inverse(u)) == g.identity(),
                 label(g) + " identity/inverse failed at " + g.word(u));
      }
      bool assoc = true;
      for (const Element& u : all)
        for (const Element& v : all)
          for (const Element& w : all)
            if (g.multiply(g.multiply(u, v), w) != g.multiply(u, g.multiply(v, w))) {
              assoc = false;
              break;
            }
      ++c.checked;
      c.expect(assoc, label(g) + " associativity failed");
    } else {
      std::mt19937_64 rng = seeded_rng(seed, g);
      for (int i = 0; i < 10000; ++i) {
        const Element u = random_element(g, rng);
        const Element v = random_element(g, rng);
        const Element w = random_element(g, rng);
        if (g.multiply(g.multiply(u, v), w) != g.multiply(u, g.multiply(v, w))) {
          c.expect(false, label(g) + " associativity failed on a sampled triple");
          break;
        }
        if (g.multiply(u, g.inverse(u)) != g.identity()) {
          c.expect(false, label(g) + " inverse failed at " + g.word(u));
          break;
        }
      }
      ++c.checked;
    }
  }
  return c.result();
}

CheckResult engine_involutions(const std::vector<GroupInstance>& gs) {
  Collector c("engine-involutions");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    const std::vector<Element> inv = involutions(g);
    c.expect_eq(inv.size(), expected_involution_count(g.descriptor()),
                label(g) + " involution count");
    for (const Element& u : inv)
      c.expect(g.multiply(u, u) == g.identity() && u != g.identity(),
               label(g) + " non-involution reported");
  }
  return c.result();
}

CheckResult engine_center(const std::vector<GroupInstance>& gs) {
  Collector c("engine-center");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    c.expect_eq(center(g).order, expected_center_order(g.descriptor()),
                label(g) + " center order");
  }
  return c.result();
}

CheckResult engine_commutator(const std::vector<GroupInstance>& gs) {
  Collector c("engine-commutator");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    const SubgroupClosure der = commutator_subgroup(g);
    c.expect_eq(der.order, expected_commutator_order(g.descriptor()),
                label(g) + " commutator subgroup order");
    if (g.descriptor().family == Family::DihedralSemiZ2) {
      // double cover: the order-2 center lies inside the commutator subgroup
      c.expect(der.contains(g.elem(g.a0_exponent())),
               label(g) + " center not inside the commutator subgroup");
    }
  }
  return c.result();
}

CheckResult engine_maximal_subgroup(const std::vector<GroupInstance>& gs) {
  Collector c("engine-maximal-subgroup");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    const SubgroupClosure w = maximal_subgroup_witness(g);
    c.expect(w.order * 2 == g.order(), label(g) + " witness is not index 2");
    c.expect(is_cyclic_subgroup(g, w) || is_dihedral_subgroup(g, w),
             label(g) + " witness is neither cyclic nor dihedral");
  }
  return c.result();
}

CheckResult engine_frattini_quotient(const std::vector<GroupInstance>& gs) {
  Collector c("engine-frattini-quotient");
  for (const GroupInstance& g : gs) {
    if (g.tail_count() != 2 || !g.exhaustive_ok()) continue;
    const SubgroupClosure a2 = closure(g, std::array<Element, 1>{g.power(g.gen_a(), 2)});
    std::set<Element> cosets;
    for (const Element& u : g.all_elements())
      cosets.insert(g.elem(u.e[0] % 2, u.e[1], u.e[2]));
    c.expect_eq(cosets.size(), 8, label(g) + " coset count of <a^2>");
    for (const Element& r : cosets)
      c.expect(a2.contains(g.power(r, 2)),
               label(g) + " coset " + g.word(r) + " does not square into <a^2>");
  }
  return c.result();
}

CheckResult engine_two_generation(const std::vector<GroupInstance>& gs) {
  Collector c("engine-two-generation");
  for (const GroupInstance& g : gs) {
    if (g.tail_count() != 2 || g.ell() > 4) continue;
    if (g.descriptor().family == Family::ElementaryAbelian8) continue;
    bool two_generated = false;
    const std::vector<Element> all = g.all_elements();
    for (const Element& u : all) {
      for (const Element& v : all)
        if (closure(g, std::array<Element, 2>{u, v}).order == g.order()) {
          two_generated = true;
          break;
        }
      if (two_generated) break;
    }
    ++c.checked;
    c.expect(!two_generated, label(g) + " unexpectedly generated by two elements");
  }
  return c.result();
}

CheckResult engine_parity_rule(const std::vector<GroupInstance>& gs) {
  Collector c("engine-parity-rule");
  for (const GroupInstance& g : gs) {
    if (g.descriptor().family != Family::QuaternionCentralZ4 || g.ell() > 4) continue;
    const int l = g.ell();
    const std::uint32_t q = std::uint32_t{1} << (l - 2);
    const Element dplus = g.elem(q, 0, 1);
    const Element dminus = g.elem(q + g.a0_exponent(), 0, 1);
    const std::vector<Element> inv = involutions(g);
    for (const Element& x : inv)
      for (const Element& y : inv)
        for (const Element& z : inv) {
          const std::array<Element, 3> t{x, y, z};
          const bool gen = closure(g, t).order == g.order();
          // expected shape: one of a^{2^(l-2)} d^{+-1} plus a^i cd, a^j cd
          // with i - j odd
          int dcount = 0, cdcount = 0;
          std::uint32_t isum = 0;
          for (const Element& u : t) {
            if (u == dplus || u == dminus) ++dcount;
            if (u.e[1] == 1 && u.e[2] == 1) {
              ++cdcount;
              isum ^= u.e[0] & 1;
            }
          }
          const bool shape = dcount == 1 && cdcount == 2 && isum == 1;
          c.expect(gen == shape,
                   label(g) + " parity rule mismatch at (" + g.word(x) + "," +
                       g.word(y) + "," + g.word(z) + ")");
        }
  }
  return c.result();
}

CheckResult catalog_completeness() {
  Collector c("catalog-completeness");
  using FD = FamilyDescriptor;
  const std::vector<FD> expected{
      {Family::Cyclic, 2}, {Family::CyclicTimesZ2, 1},
      {Family::Cyclic, 3}, {Family::CyclicTimesZ2, 2}, {Family::Dihedral, 2},
      {Family::Quaternion, 2}, {Family::ElementaryAbelian8, 0},
      {Family::Cyclic, 4}, {Family::CyclicTimesZ2, 3}, {Family::Dihedral, 3},
      {Family::SemiDihedral, 3}, {Family::Modular, 3}, {Family::Quaternion, 3},
      {Family::QuaternionCentralZ4, 2}, {Family::DihedralTimesZ2, 2},
      {Family::Cyclic, 5}, {Family::CyclicTimesZ2, 4}, {Family::Dihedral, 4},
      {Family::SemiDihedral, 4}, {Family::Modular, 4}, {Family::Quaternion, 4},
      {Family::QuaternionCentralZ4, 3}, {Family::DihedralTimesZ2, 3},
      {Family::DihedralSemiZ2, 3},
      {Family::Cyclic, 6}, {Family::CyclicTimesZ2, 5}, {Family::Dihedral, 5},
      {Family::SemiDihedral, 5}, {Family::Modular, 5}, {Family::Quaternion, 5},
      {Family::QuaternionCentralZ4, 4}, {Family::DihedralTimesZ2, 4},
      {Family::DihedralSemiZ2, 4},
      {Family::Cyclic, 7}, {Family::CyclicTimesZ2, 6}, {Family::Dihedral, 6},
      {Family::SemiDihedral, 6}, {Family::Modular, 6}, {Family::Quaternion, 6},
      {Family::QuaternionCentralZ4, 5}, {Family::DihedralTimesZ2, 5},
      {Family::DihedralSemiZ2, 5}};
  const std::vector<GroupInstance> cat = catalog_all(128);
  c.expect_eq(cat.size(), expected.size(), "catalog size up to order 128");
  std::set<std::pair<int, int>> got;
  for (const GroupInstance& g : cat)
    got.emplace(static_cast<int>(g.descriptor().family), g.descriptor().ell);
  for (const FD& d : expected)
    c.expect(got.count({static_cast<int>(d.family), d.ell}) == 1,
             "catalog is missing " + group_label(d));

  // Distinguishing invariants are pairwise distinct within each order.
  std::map<std::uint64_t, std::vector<InvariantVector>> by_order;
  for (const GroupInstance& g : catalog_all(64)) by_order[g.order()].push_back(invariant_vector(g));
  for (const auto& [order, vecs] : by_order)
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (std::size_t j = i + 1; j < vecs.size(); ++j)
        c.expect(!(vecs[i] == vecs[j]),
                 "two catalog groups of order " + std::to_string(order) +
                     " share an invariant vector");
  return c.result();
}

CheckResult catalog_subgroup_types(const std::vector<GroupInstance>& gs) {
  Collector c("catalog-subgroup-types");
  for (const GroupInstance& g : gs) {
    if (g.descriptor().family != Family::DihedralSemiZ2 || !g.exhaustive_ok()) continue;
    const Element a = g.gen_a();
    const Element b = g.generator(1);
    const Element cc = g.generator(2);
    c.expect(is_dihedral_subgroup(g, closure(g, std::array<Element, 2>{a, b})),
             label(g) + " <a,b> is not dihedral");
    c.expect(is_semidihedral_subgroup(g, closure(g, std::array<Element, 2>{a, g.multiply(b, cc)})),
             label(g) + " <a,bc> is not semidihedral");
    c.expect(is_modular_subgroup(g, closure(g, std::array<Element, 2>{a, cc})),
             label(g) + " <a,c> is not modular");
  }
  return c.result();
}

CheckResult catalog_feature_flags(const std::vector<GroupInstance>& gs) {
  Collector c("catalog-feature-flags");
  for (const GroupInstance& g : gs) {
    const FeatureFlags f = feature_flags(g);
    for (const TupleKind kind :
         {TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair}) {
      const bool flag = kind == TupleKind::Reversing ? f.has_reversing
                        : kind == TupleKind::Regular ? f.has_regular
                                                     : f.has_rotary;
      const std::vector<GenTuple> delta = delta_representatives(g, kind);
      c.expect(flag == !delta.empty(),
               label(g) + " " + std::string(tuple_kind_name(kind)) +
                   " flag disagrees with the transversal data");
      for (const GenTuple& t : delta)
        c.expect(is_valid_tuple(g, t), label(g) + " transversal member " +
                                           tuple_word(g, t) + " is invalid");
      if (g.ell() <= 4)
        c.expect(flag == !enumerate(g, kind).empty(),
                 label(g) + " " + std::string(tuple_kind_name(kind)) +
                     " flag disagrees with enumeration");
    }
  }
  return c.result();
}

CheckResult aut_orders(const std::vector<GroupInstance>& gs) {
  Collector c("aut-orders");
  for (const GroupInstance& g : gs) {
    const FamilyDescriptor d = g.descriptor();
    const int l = d.ell;
    // Frozen order table; degenerate small groups carry non-2-group values.
    std::uint64_t want = 0;
    switch (d.family) {
      case Family::Cyclic: want = std::uint64_t{1} << (l - 1); break;
      case Family::CyclicTimesZ2:
        want = l == 1 ? 6 : std::uint64_t{1} << (l + 1);
        break;
      case Family::Modular: want = std::uint64_t{1} << (l + 1); break;
      case Family::Dihedral: want = std::uint64_t{1} << (2 * l - 1); break;
      case Family::Quaternion:
        want = l == 2 ? 24 : std::uint64_t{1} << (2 * l - 1);
        break;
      case Family::SemiDihedral: want = std::uint64_t{1} << (2 * l - 2); break;
      case Family::QuaternionCentralZ4:
        want = l == 2 ? 48 : std::uint64_t{1} << (2 * l);
        break;
      case Family::DihedralTimesZ2: want = std::uint64_t{1} << (2 * l + 2); break;
      case Family::DihedralSemiZ2: want = std::uint64_t{1} << (2 * l); break;
      case Family::ElementaryAbelian8: want = 168; break;
    }
    c.expect_eq(explicit_aut(g).order, want, label(g) + " |Aut| closed form");
  }
  return c.result();
}

CheckResult aut_closure_counts(const std::vector<GroupInstance>& gs) {
  Collector c("aut-closure-counts");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    const AutGroup ag = explicit_aut(g);
    const std::vector<Automorphism> all = aut_closure(g, ag.generators);
    c.expect_eq(all.size(), ag.order, label(g) + " |Aut| by generator closure");
    for (const Automorphism& f : ag.generators)
      c.expect(is_automorphism(g, f), label(g) + " generator fails the relation test");
  }
  return c.result();
}

CheckResult aut_oracle(const std::vector<GroupInstance>& gs) {
  Collector c("aut-oracle");
  std::string note;
  for (const GroupInstance& g : gs) {
    if (g.order() > kBruteForceAutMaxOrder) continue;
    const AutGroup oracle = brute_force_aut(g);
    const std::vector<Automorphism> exp = aut_closure(g, explicit_aut(g).generators);
    c.expect(oracle.elements == exp,
             label(g) + " oracle and explicit automorphism sets differ (" +
                 std::to_string(oracle.elements.size()) + " vs " +
                 std::to_string(exp.size()) + ")");
    if (g.descriptor().family == Family::ElementaryAbelian8) {
      c.expect_eq(oracle.order, 168, "Z2^3 oracle order");
      note = "Z2^3 has 168 automorphisms (a printed table label says GL2(3), order 48)";
    }
  }
  return c.result(note);
}

CheckResult aut_class_separation(const std::vector<GroupInstance>& gs) {
  Collector c("aut-class-separation");
  for (const GroupInstance& g : gs) {
    if (g.descriptor().family != Family::DihedralSemiZ2 || g.ell() > 4) continue;
    const std::vector<Automorphism> all = aut_closure(g, explicit_aut(g).generators);
    for (const Automorphism& f : all)
      for (std::uint32_t i = 0; i < g.a_modulus(); ++i) {
        const Element img = apply_aut(g, f, g.elem(i, 1, 0));
        if (img.e[1] == 1 && img.e[2] == 0)
          c.expect((img.e[0] & 1u) == (i & 1u),
                   label(g) + " mixes the two reflection classes");
        else
          ++c.checked;
      }
  }
  return c.result();
}

CheckResult tuples_counts(const std::vector<GroupInstance>& gs) {
  Collector c("tuples-counts");
  for (const GroupInstance& g : gs) {
    if (g.ell() > 5) continue;
    for (const TupleKind kind :
         {TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair})
      c.expect_eq(enumerate(g, kind).size(),
                  expected_tuple_count(g.descriptor(), kind),
                  label(g) + " " + std::string(tuple_kind_name(kind)) + " count");
  }
  return c.result();
}

CheckResult tuples_semiregularity(const std::vector<GroupInstance>& gs) {
  Collector c("tuples-semiregularity");
  for (const GroupInstance& g : gs) {
    if (g.ell() > 5) continue;
    const std::uint64_t aut_order = explicit_aut(g).order;
    for (const TupleKind kind :
         {TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair}) {
      const OrbitPartition part = orbit_partition(g, enumerate(g, kind));
      std::uint64_t total = 0;
      for (const OrbitClass& cls : part.classes) {
        c.expect(cls.size == aut_order,
                 label(g) + " " + std::string(tuple_kind_name(kind)) + " orbit of " +
                     tuple_word(g, cls.representative) + " has size " +
                     std::to_string(cls.size) + " != |Aut| = " +
                     std::to_string(aut_order));
        total += cls.size;
      }
      c.expect_eq(total, part.total, label(g) + " orbit sizes sum");
    }
  }
  return c.result();
}

CheckResult tuples_orbit_counts(const std::vector<GroupInstance>& gs) {
  Collector c("tuples-orbit-counts");
  std::map<std::string, std::string> per_family;
  for (const GroupInstance& g : gs) {
    if (g.ell() > 5) continue;
    for (const TupleKind kind :
         {TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair}) {
      const OrbitPartition part = orbit_partition(g, enumerate(g, kind));
      c.expect_eq(part.classes.size(), expected_orbit_count(g.descriptor(), kind),
                  label(g) + " " + std::string(tuple_kind_name(kind)) +
                      " orbit count");
      if (kind == TupleKind::Reversing && !part.classes.empty()) {
        std::string& s = per_family[std::string(family_name(g.descriptor().family))];
        if (!s.empty()) s += ", ";
        s += std::to_string(part.classes.size()) + " (ell=" +
             std::to_string(g.descriptor().ell) + ")";
      }
    }
  }
  std::string note;
  for (const auto& [fam, s] : per_family) {
    if (!note.empty()) note += "; ";
    note += fam + " reversing orbits: " + s;
  }
  return c.result(note);
}

CheckResult tuples_transversals(const std::vector<GroupInstance>& gs) {
  Collector c("tuples-transversals");
  for (const GroupInstance& g : gs) {
    if (g.ell() > 5) continue;
    for (const TupleKind kind :
         {TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair}) {
      const MatchReport rep = match_representatives(g, kind);
      std::string msg = label(g) + " " + std::string(tuple_kind_name(kind));
      for (const std::string& issue : rep.issues) msg += ": " + issue;
      c.expect(rep.ok, msg);
    }
  }
  return c.result();
}

CheckResult tuples_regular_subset(const std::vector<GroupInstance>& gs) {
  Collector c("tuples-regular-subset");
  for (const GroupInstance& g : gs) {
    if (g.ell() > 5) continue;
    const std::vector<GenTuple> rev = enumerate(g, TupleKind::Reversing);
    std::unordered_set<GenTuple, GenTupleHash> revset;
    for (GenTuple t : rev) {
      t.kind = TupleKind::Regular;  // compare part-wise across kinds
      revset.insert(t);
    }
    for (const GenTuple& t : enumerate(g, TupleKind::Regular))
      c.expect(revset.count(t) == 1,
               label(g) + " regular triple " + tuple_word(g, t) + " is not reversing");

    // Filtering the reversing transversal by the Klein-four condition on
    // (x, z) must reproduce the regular transversal as a set.
    std::set<std::array<Element, 3>> filtered;
    for (const GenTuple& t : delta_representatives(g, TupleKind::Reversing))
      if (t.parts[0] != t.parts[2] && g.commute(t.parts[0], t.parts[2]))
        filtered.insert(t.parts);
    std::set<std::array<Element, 3>> delta0;
    for (const GenTuple& t : delta_representatives(g, TupleKind::Regular))
      delta0.insert(t.parts);
    c.expect(filtered == delta0,
             label(g) + " Klein filter of the reversing transversal differs from "
                        "the regular transversal");
  }
  return c.result();
}

CheckResult tuples_noncommuting(const std::vector<GroupInstance>& gs) {
  Collector c("tuples-noncommuting");
  for (const GroupInstance& g : gs) {
    if (g.descriptor().family != Family::QuaternionCentralZ4 || g.ell() > 4) continue;
    for (const GenTuple& t : enumerate(g, TupleKind::Reversing))
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          c.expect(!g.commute(t.parts[static_cast<std::size_t>(i)],
                              t.parts[static_cast<std::size_t>(j)]),
                   label(g) + " reversing triple with commuting involutions: " +
                       tuple_word(g, t));
  }
  return c.result();
}

CheckResult tuples_no_rotary(const std::vector<GroupInstance>& gs) {
  Collector c("tuples-no-rotary");
  for (const GroupInstance& g : gs) {
    const Family f = g.descriptor().family;
    const bool none = f == Family::Quaternion || f == Family::QuaternionCentralZ4 ||
                      f == Family::DihedralTimesZ2 || f == Family::DihedralSemiZ2 ||
                      f == Family::ElementaryAbelian8;
    if (!none || g.ell() > 4) continue;
    c.expect(enumerate(g, TupleKind::RotaryPair).empty(),
             label(g) + " unexpectedly admits a rotary pair");
  }
  return c.result();
}

CheckResult maps_euler(const std::vector<GroupInstance>& gs) {
  Collector c("maps-euler");
  std::uint64_t records = 0;
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    for (const MapRecord& rec : classify(g)) {
      ++records;
      c.expect(static_cast<std::int64_t>(rec.vertices) -
                       static_cast<std::int64_t>(rec.edges) +
                       static_cast<std::int64_t>(rec.faces) ==
                   rec.chi,
               label(g) + " V-E+F != chi for " + tuple_word(g, rec.tuple));
      c.expect(rec.vertices > 0 && rec.edges > 0 && rec.faces > 0,
               label(g) + " empty cell count");
      c.expect(rec.passes_filter == !four_divides(rec.chi),
               label(g) + " filter flag inconsistent");
    }
  }
  return c.result(std::to_string(records) + " map records");
}

CheckResult maps_chi_tables(const std::vector<GroupInstance>& gs) {
  Collector c("maps-chi-tables");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    const std::vector<ChiCell> cells = expected_chi_cells(g);
    std::map<std::pair<int, std::int64_t>, int> expected_survivors;
    for (const ChiCell& cell : cells) {
      const MapRecord rec = realize(g, cell.tuple, cell.type);
      c.expect(rec.chi == cell.expected,
               label(g) + " chi(" + tuple_word(g, cell.tuple) + ", " +
                   std::string(map_type_name(cell.type)) + "): expected " +
                   std::to_string(cell.expected) + ", computed " +
                   std::to_string(rec.chi));
      if (!four_divides(cell.expected))
        ++expected_survivors[{static_cast<int>(cell.type), cell.expected}];
    }
    // The classifier's surviving rows match the table cells, as multisets of
    // (map type, chi) over orbit representatives.
    std::map<std::pair<int, std::int64_t>, int> got_survivors;
    for (const MapRecord& rec : classify(g))
      if (rec.passes_filter) ++got_survivors[{static_cast<int>(rec.map_type), rec.chi}];
    c.expect(expected_survivors == got_survivors,
             label(g) + " surviving (type, chi) multiset differs from the tables");
  }
  return c.result();
}

CheckResult maps_chi_form(const std::vector<GroupInstance>& gs) {
  Collector c("maps-chi-form");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    for (const MapRecord& rec : classify(g)) {
      if (!rec.passes_filter) continue;
      const ChiForm form = chi_form(rec.chi);
      c.expect(form.tag != ChiForm::Tag::Other,
               label(g) + " surviving chi " + std::to_string(rec.chi) +
                   " fits no closed form");
      if (form.tag == ChiForm::Tag::TwoMinusPowPlusPow)
        c.expect(form.ell >= form.s && form.s > 1,
                 label(g) + " witness out of range for chi " + std::to_string(rec.chi));
    }
  }
  return c.result();
}

CheckResult maps_aut_invariance(const std::vector<GroupInstance>& gs, std::uint64_t seed) {
  Collector c("maps-aut-invariance");
  for (const GroupInstance& g : gs) {
    if (g.ell() > 5) continue;
    std::mt19937_64 rng = seeded_rng(seed ^ 0xabcdef, g);
    const AutGroup ag = explicit_aut(g);
    std::uniform_int_distribution<std::size_t> pick(0, ag.generators.size() - 1);
    for (const TupleKind kind :
         {TupleKind::Reversing, TupleKind::Regular, TupleKind::RotaryPair}) {
      const OrbitPartition part = orbit_partition(g, enumerate(g, kind));
      std::vector<MapType> types;
      if (kind == TupleKind::Reversing)
        types = {MapType::Type2Star, MapType::Type2P};
      else if (kind == TupleKind::Regular)
        types = {MapType::Type1};
      else
        types = {MapType::Type2StarEx, MapType::Type2PEx};
      for (const OrbitClass& cls : part.classes) {
        for (int trial = 0; trial < 10; ++trial) {
          GenTuple member = cls.representative;
          const int steps = 1 + static_cast<int>(rng() % 6);
          for (int s = 0; s < steps; ++s) {
            const Automorphism& f = ag.generators[pick(rng)];
            for (int i = 0; i < tuple_arity(member.kind); ++i)
              member.parts[static_cast<std::size_t>(i)] =
                  apply_aut(g, f, member.parts[static_cast<std::size_t>(i)]);
          }
          for (const MapType mt : types) {
            const MapRecord r0 = realize(g, cls.representative, mt);
            const MapRecord r1 = realize(g, member, mt);
            c.expect(r0.chi == r1.chi && r0.vertices == r1.vertices &&
                         r0.edges == r1.edges && r0.faces == r1.faces,
                     label(g) + " map data varies along the orbit of " +
                         tuple_word(g, cls.representative));
          }
        }
      }
    }
  }
  return c.result();
}

CheckResult maps_excluded_divisibility(const std::vector<GroupInstance>& gs) {
  Collector c("maps-excluded-divisibility");
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    for (const ChiCell& cell : expected_chi_cells(g)) {
      if (!four_divides(cell.expected)) continue;
      const MapRecord rec = realize(g, cell.tuple, cell.type);
      c.expect(four_divides(rec.chi),
               label(g) + " excluded cell " + tuple_word(g, cell.tuple) + " type " +
                   std::string(map_type_name(cell.type)) + " has chi " +
                   std::to_string(rec.chi) + " not divisible by 4");
    }
  }
  return c.result();
}

CheckResult maps_stab_routes(const std::vector<GroupInstance>& gs) {
  Collector c("maps-stab-routes");
  const auto involution_route = [](const GroupInstance& g, const Element& u,
                                   const Element& v) -> std::uint64_t {
    if (u == g.identity()) return g.element_order(v);
    if (v == g.identity() || u == v) return g.element_order(u);
    return 2 * g.element_order(g.multiply(u, v));
  };
  for (const GroupInstance& g : gs) {
    if (!g.exhaustive_ok()) continue;
    for (const ChiCell& cell : expected_chi_cells(g)) {
      const GenTuple& t = cell.tuple;
      std::vector<std::pair<Element, Element>> pairs;
      if (t.kind == TupleKind::RotaryPair) {
        pairs.emplace_back(t.parts[1], g.conjugate(t.parts[1], t.parts[0]));
      } else {
        pairs.emplace_back(t.parts[0], t.parts[1]);
        pairs.emplace_back(t.parts[0], t.parts[2]);
        pairs.emplace_back(t.parts[1], t.parts[2]);
        pairs.emplace_back(t.parts[0], g.conjugate(t.parts[1], t.parts[2]));
      }
      for (const auto& [u, v] : pairs) {
        const std::uint64_t via_closure =
            closure(g, std::array<Element, 2>{u, v}).order;
        c.expect_eq(pair_subgroup_order(g, u, v), via_closure,
                    label(g) + " stabilizer order route mismatch");
        if ((g.element_order(u) == 2 && g.element_order(v) == 2) ||
            u == g.identity() || v == g.identity() || u == v)
          c.expect_eq(involution_route(g, u, v), via_closure,
                      label(g) + " dihedral order formula mismatch");
      }
    }
  }
  return c.result();
}

CheckResult maps_edge_faithfulness(const std::vector<GroupInstance>& gs) {
  Collector c("maps-edge-faithfulness");
  // The regular map acts faithfully on edges iff the edge stabilizer <x,z>
  // is core-free; among the surviving regular maps that happens exactly for
  // the semidirect family.
  const auto core_free = [](const GroupInstance& g, const SubgroupClosure& h) {
    const std::vector<Element> gens = g.generator_sequence();
    for (const Element& u : h.elements) {
      if (u == g.identity()) continue;
      // conjugacy closure of u, early exit once it leaves h
      std::unordered_set<Element, ElementHash> seen{u};
      std::vector<Element> stack{u};
      bool inside = true;
      while (!stack.empty() && inside) {
        const Element cur = stack.back();
        stack.pop_back();
        for (const Element& x : gens) {
          const Element img = g.conjugate(cur, x);
          if (!h.contains(img)) {
            inside = false;
            break;
          }
          if (seen.insert(img).second) stack.push_back(img);
        }
      }
      if (inside) return false;  // <u^G> is a nontrivial normal subgroup in h
    }
    return true;
  };
  for (const GroupInstance& g : gs) {
    if (g.ell() > 5) continue;
    for (const MapRecord& rec : classify(g)) {
      if (rec.map_type != MapType::Type1 || !rec.passes_filter) continue;
      const SubgroupClosure edge_stab =
          closure(g, std::array<Element, 2>{rec.tuple.parts[0], rec.tuple.parts[2]});
      const bool faithful = core_free(g, edge_stab);
      const bool expected = g.descriptor().family == Family::DihedralSemiZ2;
      c.expect(faithful == expected,
               label(g) + " edge action at " + tuple_word(g, rec.tuple) +
                   (faithful ? " is faithful" : " is unfaithful") +
                   ", expected the opposite");
    }
  }
  return c.result();
}

CheckResult charfree_witnesses() {
  Collector c("charfree-witnesses");
  const std::pair<std::uint64_t, std::uint64_t> rows[] = {
      {6, 3}, {20, 5}, {21, 7}, {110, 11}, {136, 17}};
  for (const auto& [d, x] : rows) {
    const SquareWitness w = square_divisor_scan(d, 1000000);
    c.expect(w.x.has_value() && *w.x == x,
             "d=" + std::to_string(d) + ": expected witness " + std::to_string(x) +
                 ", computed " + (w.x ? std::to_string(*w.x) : std::string("none")));
  }
  const SquareWitness w7 = square_divisor_scan(7, 100000);
  c.expect(!w7.x.has_value(), "d=7 should have no square witness (2^7-1 is prime)");
  return c.result();
}

CheckResult charfree_multiples() {
  Collector c("charfree-multiples");
  const std::pair<std::uint64_t, std::uint64_t> rows[] = {
      {6, 3}, {20, 5}, {21, 7}, {110, 11}, {136, 17}};
  for (const auto& [d, x] : rows)
    for (std::uint64_t nd = d; nd <= 1000; nd += d) {
      const SquareWitness w = square_divisor_scan(nd, x);
      c.expect(w.x.has_value() && *w.x <= x,
               "d=" + std::to_string(nd) + ": no witness <= " + std::to_string(x));
    }
  return c.result();
}

CheckResult charfree_oracle() {
  Collector c("charfree-oracle");
  constexpr std::uint32_t kLimit = 1000000;
  // Smallest-prime-factor sieve as a full-factorization oracle.
  std::vector<std::uint32_t> spf(kLimit + 1, 0);
  for (std::uint32_t i = 2; i <= kLimit; ++i) {
    if (spf[i] == 0)
      for (std::uint64_t j = i; j <= kLimit; j += i)
        if (spf[j] == 0) spf[j] = i;
  }
  const auto oracle = [&](std::uint32_t n) {
    while (n > 1) {
      const std::uint32_t p = spf[n];
      n /= p;
      if (n % p == 0) return false;
    }
    return true;
  };
  std::uint64_t mismatches = 0;
  for (std::uint32_t n = 1; n <= kLimit; ++n) {
    const bool want = oracle(n);
    if (is_squarefree(static_cast<std::int64_t>(n)) != want) ++mismatches;
    if (is_squarefree(-static_cast<std::int64_t>(n)) != want) ++mismatches;
  }
  c.checked += 2 * kLimit;
  c.expect(mismatches == 0, std::to_string(mismatches) +
                                " square-free mismatches against the factorization "
                                "oracle below 10^6");
  return c.result();
}

}  // namespace checks

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
  const std::vector<GroupInstance> gs = groups_in_scope(opts);
  std::vector<CheckResult> out;
  out.push_back(checks::engine_normal_forms(gs));
  out.push_back(checks::engine_axioms(gs, opts.seed));
  out.push_back(checks::engine_involutions(gs));
  out.push_back(checks::engine_center(gs));
  out.push_back(checks::engine_commutator(gs));
  out.push_back(checks::engine_maximal_subgroup(gs));
  out.push_back(checks::engine_frattini_quotient(gs));
  out.push_back(checks::engine_two_generation(gs));
  out.push_back(checks::engine_parity_rule(gs));
  out.push_back(checks::catalog_completeness());
  out.push_back(checks::catalog_subgroup_types(gs));
  out.push_back(checks::catalog_feature_flags(gs));
  out.push_back(checks::aut_orders(gs));
  out.push_back(checks::aut_closure_counts(gs));
  if (opts.oracle) out.push_back(checks::aut_oracle(gs));
  out.push_back(checks::aut_class_separation(gs));
  out.push_back(checks::tuples_counts(gs));
  out.push_back(checks::tuples_semiregularity(gs));
  out.push_back(checks::tuples_orbit_counts(gs));
  out.push_back(checks::tuples_transversals(gs));
  out.push_back(checks::tuples_regular_subset(gs));
  out.push_back(checks::tuples_noncommuting(gs));
  out.push_back(checks::tuples_no_rotary(gs));
  out.push_back(checks::maps_euler(gs));
  out.push_back(checks::maps_chi_tables(gs));
  out.push_back(checks::maps_chi_form(gs));
  out.push_back(checks::maps_aut_invariance(gs, opts.seed));
  out.push_back(checks::maps_excluded_divisibility(gs));
  out.push_back(checks::maps_stab_routes(gs));
  out.push_back(checks::maps_edge_faithfulness(gs));
  out.push_back(checks::charfree_witnesses());
  out.push_back(checks::charfree_multiples());
  out.push_back(checks::charfree_oracle());
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace tgmaps
