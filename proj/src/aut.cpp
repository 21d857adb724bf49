#include "tgmaps/aut.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace tgmaps {

std::array<std::uint64_t, 3> aut_key(const Automorphism& f) {
  return {element_key(f.images[0]), element_key(f.images[1]),
          element_key(f.images[2])};
}

std::size_t AutHash::operator()(const Automorphism& f) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.n);
  for (const std::uint64_t k : aut_key(f)) {
    std::uint64_t x = k + 0x9e3779b97f4a7c15ULL;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Automorphism identity_aut(const GroupInstance& g) {
  Automorphism f;
  f.n = g.generator_count();
  for (int i = 0; i < f.n; ++i) f.images[static_cast<std::size_t>(i)] = g.generator(i);
  return f;
}

Element apply_aut(const GroupInstance& g, const Automorphism& f, const Element& u) {
  g.validate(u);
  Element out = g.power(f.images[0], static_cast<std::int64_t>(u.e[0]));
  for (int i = 1; i <= g.tail_count(); ++i)
    if (u.e[static_cast<std::size_t>(i)])
      out = g.multiply(out, f.images[static_cast<std::size_t>(i)]);
  return out;
}

Automorphism compose(const GroupInstance& g, const Automorphism& f,
                     const Automorphism& h) {
  Automorphism out;
  out.n = f.n;
  for (int i = 0; i < f.n; ++i)
    out.images[static_cast<std::size_t>(i)] =
        apply_aut(g, h, f.images[static_cast<std::size_t>(i)]);
  return out;
}

bool preserves_relations(const GroupInstance& g, const Automorphism& f) {
  const Element& a = f.images[0];
  if (g.power(a, static_cast<std::int64_t>(g.a_modulus())) != g.identity())
    return false;
  for (int i = 1; i <= g.tail_count(); ++i) {
    const TailGenerator& t = g.tail(i - 1);
    const Element& ti = f.images[static_cast<std::size_t>(i)];
    if (g.multiply(ti, ti) != g.power(a, static_cast<std::int64_t>(t.square)))
      return false;
    if (g.conjugate(a, ti) != g.power(a, static_cast<std::int64_t>(t.lambda)))
      return false;
  }
  if (g.tail_count() == 2 && !g.commute(f.images[1], f.images[2])) return false;
  return true;
}

bool is_automorphism(const GroupInstance& g, const Automorphism& f) {
  if (f.n != g.generator_count()) return false;
  if (!preserves_relations(g, f)) return false;
  return g.generates(std::span<const Element>(f.images.data(),
                                              static_cast<std::size_t>(f.n)));
}

std::vector<Automorphism> aut_closure(const GroupInstance& g,
                                      const std::vector<Automorphism>& gens,
                                      std::uint64_t cap) {
  std::unordered_set<Automorphism, AutHash> seen;
  std::queue<Automorphism> frontier;
  const Automorphism id = identity_aut(g);
  seen.insert(id);
  frontier.push(id);
  while (!frontier.empty()) {
    const Automorphism f = frontier.front();
    frontier.pop();
    for (const Automorphism& x : gens) {
      Automorphism h = compose(g, f, x);
      if (seen.insert(h).second) {
        if (seen.size() > cap)
          throw scale_error("automorphism closure exceeds the materialization cap");
        frontier.push(std::move(h));
      }
    }
  }
  std::vector<Automorphism> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), aut_less);
  return out;
}

std::uint64_t aut_order_closed_form(const FamilyDescriptor& desc) {
  const int l = desc.ell;
  const auto pw = [](int k) { return std::uint64_t{1} << k; };
  switch (desc.family) {
    case Family::Cyclic: return pw(l - 1);
    case Family::CyclicTimesZ2: return l == 1 ? 6 : pw(l + 1);
    case Family::Dihedral: return pw(2 * l - 1);
    case Family::SemiDihedral: return pw(2 * l - 2);
    case Family::Modular: return pw(l + 1);
    case Family::Quaternion: return l == 2 ? 24 : pw(2 * l - 1);
    case Family::QuaternionCentralZ4: return l == 2 ? 48 : pw(2 * l);
    case Family::DihedralTimesZ2: return pw(2 * l + 2);
    case Family::DihedralSemiZ2: return pw(2 * l);
    case Family::ElementaryAbelian8: return 168;
  }
  throw parameter_error("unknown family");
}

namespace {

bool degenerate_small_group(const FamilyDescriptor& d) {
  return d.family == Family::ElementaryAbelian8 ||
         (d.family == Family::CyclicTimesZ2 && d.ell == 1) ||
         (d.family == Family::Quaternion && d.ell == 2) ||
         (d.family == Family::QuaternionCentralZ4 && d.ell == 2);
}

Automorphism make_aut(const GroupInstance& g, std::vector<Element> images) {
  Automorphism f;
  f.n = g.generator_count();
  for (int i = 0; i < f.n; ++i) f.images[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>(i)];
  if (!is_automorphism(g, f))
    throw std::logic_error("explicit generator list contains a non-automorphism");
  return f;
}

}  // namespace

AutGroup explicit_aut(const GroupInstance& g) {
  const FamilyDescriptor d = g.descriptor();
  if (degenerate_small_group(d)) {
    AutGroup ag = brute_force_aut(g);
    ag.order = aut_order_closed_form(d);
    if (ag.order != ag.elements.size())
      throw std::logic_error("oracle order disagrees with the closed form");
    return ag;
  }

  const Element a = g.gen_a();
  const Element a5 = g.power(a, 5);
  const Element am1 = g.inverse(a);
  const Element a0 = g.elem(g.a0_exponent());
  AutGroup ag;
  ag.order = aut_order_closed_form(d);
  auto add = [&](std::vector<Element> images) {
    ag.generators.push_back(make_aut(g, std::move(images)));
  };
  switch (d.family) {
    case Family::Cyclic:
      add({a5});
      add({am1});
      break;
    case Family::CyclicTimesZ2:
    case Family::Modular: {
      const Element b = g.generator(1);
      add({a5, b});
      add({am1, b});
      add({g.multiply(a, b), b});             // tau: a -> ab
      add({a, g.multiply(a0, b)});            // sigma: b -> a0 b
      break;
    }
    case Family::Dihedral: {
      const Element b = g.generator(1);
      add({a5, b});
      add({am1, b});
      add({a, g.multiply(a, b)});             // eta: b -> ab
      break;
    }
    case Family::SemiDihedral: {
      const Element b = g.generator(1);
      add({a5, b});
      add({am1, b});
      add({a, g.multiply(g.power(a, 2), b)});  // eta0: b -> a^2 b
      break;
    }
    case Family::Quaternion: {
      const Element c = g.generator(1);
      add({a5, c});
      add({am1, c});
      add({a, g.multiply(a, c)});             // eta: c -> ac
      break;
    }
    case Family::QuaternionCentralZ4: {
      const Element c = g.generator(1);
      const Element dgen = g.generator(2);
      add({a5, c, dgen});
      add({am1, c, dgen});
      add({a, g.multiply(a, c), dgen});       // eta: c -> ac
      add({a, c, g.inverse(dgen)});           // tau: d -> d^-1
      break;
    }
    case Family::DihedralTimesZ2: {
      const Element b = g.generator(1);
      const Element c = g.generator(2);
      add({a5, b, c});
      add({am1, b, c});
      add({a, g.multiply(a, b), c});          // eta: b -> ab
      add({g.multiply(a, c), b, c});          // tau: a -> ac
      add({a, b, g.multiply(a0, c)});         // sigma: c -> a0 c
      break;
    }
    case Family::DihedralSemiZ2: {
      const Element b = g.generator(1);
      const Element c = g.generator(2);
      add({a5, b, c});
      add({am1, b, c});
      add({a, g.multiply(g.power(a, 2), b), c});  // eta0: b -> a^2 b
      add({g.multiply(a, c), g.multiply(b, c), c});  // tau: (a,b) -> (ac,bc)
      add({a, b, g.multiply(a0, c)});         // sigma: c -> a0 c
      break;
    }
    case Family::ElementaryAbelian8:
      throw std::logic_error("handled by the degenerate path");
  }
  return ag;
}

AutGroup brute_force_aut(const GroupInstance& g) {
  if (g.order() > kBruteForceAutMaxOrder)
    throw scale_error("brute-force automorphism search is gated to |G| <= " +
                      std::to_string(kBruteForceAutMaxOrder));
  const std::vector<Element> all = g.all_elements();
  const int k = g.generator_count();

  // Automorphisms preserve element order, so image candidates for each
  // generator are restricted to elements of the same order.
  std::array<std::vector<Element>, 3> candidates;
  for (int i = 0; i < k; ++i) {
    const std::uint64_t ord = g.element_order(g.generator(i));
    for (const Element& u : all)
      if (g.element_order(u) == ord) candidates[static_cast<std::size_t>(i)].push_back(u);
  }

  AutGroup ag;
  ag.materialized = true;
  Automorphism f;
  f.n = k;
  for (const Element& ia : candidates[0]) {
    f.images[0] = ia;
    if (k == 1) {
      if (is_automorphism(g, f)) ag.elements.push_back(f);
      continue;
    }
    for (const Element& ib : candidates[1]) {
      f.images[1] = ib;
      if (k == 2) {
        if (is_automorphism(g, f)) ag.elements.push_back(f);
        continue;
      }
      for (const Element& ic : candidates[2]) {
        f.images[2] = ic;
        if (is_automorphism(g, f)) ag.elements.push_back(f);
      }
    }
  }
  std::sort(ag.elements.begin(), ag.elements.end(), aut_less);
  ag.generators = ag.elements;
  ag.order = ag.elements.size();
  return ag;
}

}  // namespace tgmaps
