#include "tgmaps/tuples.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "tgmaps/catalog.hpp"

namespace tgmaps {

std::string_view tuple_kind_name(TupleKind k) {
  switch (k) {
    case TupleKind::Reversing: return "reversing";
    case TupleKind::Regular: return "regular";
    case TupleKind::RotaryPair: return "rotary";
  }
  return "?";
}

std::optional<TupleKind> parse_tuple_kind(std::string_view name) {
  if (name == "reversing") return TupleKind::Reversing;
  if (name == "regular") return TupleKind::Regular;
  if (name == "rotary") return TupleKind::RotaryPair;
  return std::nullopt;
}

std::size_t GenTupleHash::operator()(const GenTuple& t) const noexcept {
  std::uint64_t h = static_cast<std::uint64_t>(t.kind) + 0x9e3779b97f4a7c15ULL;
  for (const Element& u : t.parts) {
    std::uint64_t x = element_key(u) + 0x9e3779b97f4a7c15ULL;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    h ^= x + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

GenTuple make_triple(TupleKind kind, const Element& x, const Element& y,
                     const Element& z) {
  if (kind == TupleKind::RotaryPair)
    throw mismatch_error("a rotary pair has two parts");
  return GenTuple{kind, {x, y, z}};
}

GenTuple make_pair(const Element& alpha, const Element& z) {
  return GenTuple{TupleKind::RotaryPair, {alpha, z, Element{}}};
}

bool is_valid_tuple(const GroupInstance& g, const GenTuple& t) {
  const int n = tuple_arity(t.kind);
  for (int i = 0; i < n; ++i)
    if (!g.valid(t.parts[static_cast<std::size_t>(i)])) return false;
  if (t.kind == TupleKind::RotaryPair) {
    if (t.parts[2] != Element{}) return false;
    if (g.element_order(t.parts[1]) != 2) return false;
    return g.generates(std::span<const Element>(t.parts.data(), 2));
  }
  for (int i = 0; i < 3; ++i)
    if (g.element_order(t.parts[static_cast<std::size_t>(i)]) != 2) return false;
  if (!g.generates(std::span<const Element>(t.parts.data(), 3))) return false;
  if (t.kind == TupleKind::Regular) {
    if (t.parts[0] == t.parts[2]) return false;
    if (!g.commute(t.parts[0], t.parts[2])) return false;
  }
  return true;
}

std::string tuple_word(const GroupInstance& g, const GenTuple& t) {
  std::string s = "(";
  const int n = tuple_arity(t.kind);
  for (int i = 0; i < n; ++i) {
    if (i) s += ",";
    s += g.word(t.parts[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

std::vector<GenTuple> enumerate(const GroupInstance& g, TupleKind kind) {
  g.require_exhaustive("tuple enumeration");
  std::vector<GenTuple> out;
  const std::vector<Element> invs = involutions(g);
  if (kind == TupleKind::RotaryPair) {
    for (const Element& alpha : g.all_elements())
      for (const Element& z : invs) {
        const std::array<Element, 2> pair{alpha, z};
        if (g.generates(pair)) out.push_back(make_pair(alpha, z));
      }
    return out;  // loops run in lexicographic order already
  }
  for (const Element& x : invs)
    for (const Element& y : invs) {
      for (const Element& z : invs) {
        const std::array<Element, 3> triple{x, y, z};
        if (!g.generates(triple)) continue;
        if (kind == TupleKind::Regular && (x == z || !g.commute(x, z))) continue;
        out.push_back(make_triple(kind, x, y, z));
      }
    }
  return out;
}

namespace {

GenTuple apply_to_tuple(const GroupInstance& g, const Automorphism& f,
                        const GenTuple& t) {
  GenTuple r = t;
  const int n = tuple_arity(t.kind);
  for (int i = 0; i < n; ++i)
    r.parts[static_cast<std::size_t>(i)] =
        apply_aut(g, f, t.parts[static_cast<std::size_t>(i)]);
  return r;
}

}  // namespace

OrbitPartition orbit_partition(const GroupInstance& g,
                               const std::vector<GenTuple>& tuples) {
  std::vector<GenTuple> sorted = tuples;
  std::sort(sorted.begin(), sorted.end());
  std::unordered_map<GenTuple, std::uint32_t, GenTupleHash> index;
  index.reserve(sorted.size() * 2);
  for (std::uint32_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], i);

  const AutGroup ag = explicit_aut(g);
  OrbitPartition part;
  part.total = sorted.size();
  std::vector<bool> visited(sorted.size(), false);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t start = 0; start < sorted.size(); ++start) {
    if (visited[start]) continue;
    visited[start] = true;
    stack.assign(1, start);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      const std::uint32_t cur = stack.back();
      stack.pop_back();
      ++size;
      for (const Automorphism& f : ag.generators) {
        const GenTuple img = apply_to_tuple(g, f, sorted[cur]);
        const auto it = index.find(img);
        if (it == index.end())
          throw std::logic_error("tuple set is not closed under the action");
        if (!visited[it->second]) {
          visited[it->second] = true;
          stack.push_back(it->second);
        }
      }
    }
    part.classes.push_back(OrbitClass{sorted[start], size});
  }
  return part;
}

bool equivalent(const GroupInstance& g, const GenTuple& t1, const GenTuple& t2) {
  if (t1.kind != t2.kind)
    throw mismatch_error("tuples of different kinds are never equivalent");
  g.require_exhaustive("tuple equivalence");
  if (t1 == t2) return true;
  const AutGroup ag = explicit_aut(g);
  std::unordered_set<GenTuple, GenTupleHash> seen{t1};
  std::queue<GenTuple> frontier;
  frontier.push(t1);
  while (!frontier.empty()) {
    const GenTuple cur = frontier.front();
    frontier.pop();
    for (const Automorphism& f : ag.generators) {
      GenTuple img = apply_to_tuple(g, f, cur);
      if (img == t2) return true;
      if (seen.insert(img).second) frontier.push(std::move(img));
    }
  }
  return false;
}

std::vector<GenTuple> delta_representatives(const GroupInstance& g, TupleKind kind) {
  const FamilyDescriptor d = g.descriptor();
  const int l = g.ell();
  std::vector<GenTuple> out;
  const auto triple = [&](const Element& x, const Element& y, const Element& z) {
    out.push_back(make_triple(kind, x, y, z));
  };

  if (kind == TupleKind::RotaryPair) {
    const Element a = g.gen_a();
    switch (d.family) {
      case Family::Cyclic:
        out.push_back(make_pair(a, g.elem(g.a0_exponent())));
        break;
      case Family::CyclicTimesZ2:
      case Family::Modular:
        out.push_back(make_pair(a, g.generator(1)));
        break;
      case Family::Dihedral:
      case Family::SemiDihedral:
        out.push_back(make_pair(a, g.generator(1)));
        out.push_back(make_pair(g.multiply(a, g.generator(1)), g.generator(1)));
        break;
      default:
        break;
    }
    return out;
  }

  const bool regular = kind == TupleKind::Regular;
  switch (d.family) {
    case Family::CyclicTimesZ2: {
      if (l != 1) break;  // Z_2^2 only
      const Element a = g.elem(1, 0);
      const Element b = g.elem(0, 1);
      const Element ab = g.elem(1, 1);
      if (regular) {
        triple(a, ab, b);
        triple(a, b, b);
        triple(b, b, a);
      } else {
        triple(a, ab, b);
        triple(a, b, b);
        triple(b, a, b);
        triple(b, b, a);
      }
      break;
    }
    case Family::ElementaryAbelian8:
      triple(g.elem(1, 0, 0), g.elem(0, 1, 0), g.elem(0, 0, 1));
      break;
    case Family::Dihedral: {
      const Element b = g.elem(0, 1);
      const Element ab = g.elem(1, 1);
      const Element a0 = g.elem(g.a0_exponent());
      if (regular) {
        triple(b, ab, a0);
        triple(b, ab, g.elem(g.a0_exponent(), 1));  // (b, ab, a0 b)
        triple(a0, b, ab);
      } else {
        std::vector<Element> ws{a0};
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (l - 1)); ++x)
          ws.push_back(g.elem(2 * x, 1));
        for (const Element& w : ws) {
          triple(b, ab, w);
          triple(w, b, ab);
          triple(ab, w, b);
        }
      }
      break;
    }
    case Family::QuaternionCentralZ4: {
      if (regular) break;  // no regular triples
      const Element cd = g.elem(0, 1, 1);
      const Element acd = g.elem(1, 1, 1);
      const Element u = g.elem(std::uint64_t{1} << (l - 2), 0, 1);
      if (l == 2) {
        triple(u, acd, cd);  // (ad, acd, cd)
      } else {
        triple(u, acd, cd);
        triple(cd, u, acd);
        triple(acd, cd, u);
      }
      break;
    }
    case Family::DihedralTimesZ2: {
      const Element b = g.elem(0, 1, 0);
      const Element ab = g.elem(1, 1, 0);
      const Element c = g.elem(0, 0, 1);
      if (regular) {
        triple(b, ab, c);
        triple(b, ab, g.elem(0, 1, 1));  // (b, ab, bc)
        triple(c, b, ab);
      } else {
        std::vector<Element> ws{c};
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (l - 2)); ++x)
          ws.push_back(g.elem(2 * x, 1, 1));
        for (const Element& w : ws) {
          triple(b, ab, w);
          triple(w, b, ab);
          triple(ab, w, b);
        }
      }
      break;
    }
    case Family::DihedralSemiZ2: {
      const Element b = g.elem(0, 1, 0);
      const Element ab = g.elem(1, 1, 0);
      const Element c = g.elem(0, 0, 1);
      if (regular) {
        triple(b, ab, c);
        triple(c, ab, b);
        triple(b, ab, g.elem(0, 1, 1));  // (b, ab, bc)
      } else {
        triple(b, ab, c);
        triple(ab, b, c);
        triple(c, b, ab);
        triple(c, ab, b);
        triple(ab, c, b);
        triple(b, c, ab);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << (l - 2)); ++x) {
          const Element w = g.elem(2 * x, 1, 1);
          triple(b, ab, w);
          triple(w, b, ab);
          triple(ab, w, b);
        }
      }
      break;
    }
    default:
      break;  // no reversing/regular triples for the remaining families
  }
  return out;
}

MatchReport match_representatives(const GroupInstance& g, TupleKind kind) {
  MatchReport report;
  const std::vector<GenTuple> delta = delta_representatives(g, kind);
  report.delta_size = delta.size();
  const std::vector<GenTuple> tuples = enumerate(g, kind);
  const OrbitPartition part = orbit_partition(g, tuples);
  report.orbit_count = part.classes.size();

  // Orbit id of each tuple, via a fresh labeling pass.
  std::unordered_map<GenTuple, std::uint32_t, GenTupleHash> orbit_of;
  orbit_of.reserve(tuples.size() * 2);
  {
    const AutGroup ag = explicit_aut(g);
    std::uint32_t label = 0;
    std::vector<GenTuple> stack;
    for (const OrbitClass& cls : part.classes) {
      stack.assign(1, cls.representative);
      orbit_of.emplace(cls.representative, label);
      while (!stack.empty()) {
        const GenTuple cur = stack.back();
        stack.pop_back();
        for (const Automorphism& f : ag.generators) {
          GenTuple img = apply_to_tuple(g, f, cur);
          if (orbit_of.emplace(img, label).second) stack.push_back(std::move(img));
        }
      }
      ++label;
    }
  }

  std::unordered_map<std::uint32_t, const GenTuple*> seen_orbit;
  for (const GenTuple& t : delta) {
    if (!is_valid_tuple(g, t)) {
      report.issues.push_back("representative " + tuple_word(g, t) +
                              " is not a valid " + std::string(tuple_kind_name(kind)) +
                              " tuple");
      continue;
    }
    const auto it = orbit_of.find(t);
    if (it == orbit_of.end()) {
      report.issues.push_back("representative " + tuple_word(g, t) +
                              " missing from the enumeration");
      continue;
    }
    const auto [prev, inserted] = seen_orbit.emplace(it->second, &t);
    if (!inserted)
      report.issues.push_back("representatives " + tuple_word(g, *prev->second) +
                              " and " + tuple_word(g, t) + " are equivalent");
  }
  if (report.delta_size != report.orbit_count)
    report.issues.push_back("transversal size " + std::to_string(report.delta_size) +
                            " != orbit count " + std::to_string(report.orbit_count));
  report.ok = report.issues.empty();
  return report;
}

std::uint64_t expected_orbit_count(const FamilyDescriptor& desc, TupleKind kind) {
  const FamilyDescriptor d = normalized(desc);
  const int l = d.ell;
  const auto pw = [](int k) { return std::uint64_t{1} << k; };
  switch (kind) {
    case TupleKind::Reversing:
      switch (d.family) {
        case Family::CyclicTimesZ2: return l == 1 ? 4 : 0;
        case Family::ElementaryAbelian8: return 1;
        case Family::Dihedral: return 3 + 3 * pw(l - 1);
        case Family::QuaternionCentralZ4: return l == 2 ? 1 : 3;
        case Family::DihedralTimesZ2: return 3 + 3 * pw(l - 2);
        case Family::DihedralSemiZ2: return 6 + 3 * pw(l - 2);
        default: return 0;
      }
    case TupleKind::Regular:
      switch (d.family) {
        case Family::CyclicTimesZ2: return l == 1 ? 3 : 0;
        case Family::ElementaryAbelian8: return 1;
        case Family::Dihedral:
        case Family::DihedralTimesZ2:
        case Family::DihedralSemiZ2: return 3;
        default: return 0;
      }
    case TupleKind::RotaryPair:
      switch (d.family) {
        case Family::Cyclic:
        case Family::CyclicTimesZ2:
        case Family::Modular: return 1;
        case Family::Dihedral:
        case Family::SemiDihedral: return 2;
        default: return 0;
      }
  }
  return 0;
}

std::uint64_t expected_tuple_count(const FamilyDescriptor& desc, TupleKind kind) {
  return expected_orbit_count(desc, kind) * aut_order_closed_form(normalized(desc));
}

}  // namespace tgmaps
