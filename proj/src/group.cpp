#include "tgmaps/group.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace tgmaps {

GroupInstance::GroupInstance(FamilyDescriptor desc, int ell,
                             std::vector<TailGenerator> tails)
    : desc_(desc), ell_(ell), tails_(std::move(tails)) {
  if (ell_ < 1 || ell_ > kMaxEll)
    throw parameter_error("internal ell out of range [1," + std::to_string(kMaxEll) + "]");
  if (tails_.size() > 2) throw parameter_error("at most two tail generators");
  a_mod_ = std::uint32_t{1} << ell_;
  a0_ = std::uint32_t{1} << (ell_ - 1);
  order_ = static_cast<std::uint64_t>(a_mod_) << tails_.size();

  // Relation self-test: lambda is an involution mod 2^ell, squares are
  // central powers, tail generators commute and conjugation matches lambda.
  for (const auto& t : tails_) {
    if (t.lambda >= a_mod_ || t.square >= a_mod_)
      throw parameter_error("tail generator data out of range");
    const std::uint64_t l2 = (static_cast<std::uint64_t>(t.lambda) * t.lambda) & (a_mod_ - 1);
    if (l2 != 1) throw parameter_error("tail conjugation exponent must square to 1");
    const std::uint64_t sl = (static_cast<std::uint64_t>(t.square) * t.lambda) & (a_mod_ - 1);
    if (sl != t.square) throw parameter_error("tail square must be centralized by the tail");
  }
  if (power(gen_a(), static_cast<std::int64_t>(a_mod_)) != identity())
    throw parameter_error("a does not have order dividing 2^ell");
  for (int i = 1; i <= tail_count(); ++i) {
    const Element gi = generator(i);
    const TailGenerator& t = tails_[static_cast<std::size_t>(i - 1)];
    if (multiply(gi, gi) != elem(t.square))
      throw parameter_error("tail square relation violated");
    if (conjugate(gen_a(), gi) != elem(t.lambda))
      throw parameter_error("tail conjugation relation violated");
    for (int j = 1; j < i; ++j)
      if (!commute(gi, generator(j)))
        throw parameter_error("tail generators must commute");
  }
}

Element GroupInstance::generator(int i) const {
  if (i == 0) return gen_a();
  if (i < 0 || i > tail_count()) throw parameter_error("generator index out of range");
  Element u;
  u.e[static_cast<std::size_t>(i)] = 1;
  return u;
}

std::vector<Element> GroupInstance::generator_sequence() const {
  std::vector<Element> gens;
  for (int i = 0; i < generator_count(); ++i) gens.push_back(generator(i));
  return gens;
}

std::string GroupInstance::generator_name(int i) const {
  if (i == 0) return "a";
  return std::string(1, tails_[static_cast<std::size_t>(i - 1)].name);
}

Element GroupInstance::elem(std::uint64_t x, std::uint32_t b1, std::uint32_t b2) const {
  Element u;
  u.e[0] = static_cast<std::uint32_t>(x & (a_mod_ - 1));
  u.e[1] = b1;
  u.e[2] = b2;
  validate(u);
  return u;
}

bool GroupInstance::valid(const Element& u) const {
  if (u.e[0] >= a_mod_) return false;
  for (int i = 1; i <= 2; ++i) {
    const std::uint32_t bit = u.e[static_cast<std::size_t>(i)];
    if (i <= tail_count()) {
      if (bit > 1) return false;
    } else if (bit != 0) {
      return false;
    }
  }
  return true;
}

void GroupInstance::validate(const Element& u) const {
  if (!valid(u))
    throw malformed_element_error("exponent tuple is not a normal form for this group");
}

Element GroupInstance::multiply(const Element& u, const Element& v) const {
  validate(u);
  validate(v);
  const std::uint32_t mask = a_mod_ - 1;
  // (a^x t1^e1 t2^e2)(a^y t1^f1 t2^f2): move a^y left through the tail word,
  // then reduce each tail exponent, absorbing squares into the a-exponent.
  std::uint64_t lam = 1;
  for (int i = 0; i < tail_count(); ++i)
    if (u.e[static_cast<std::size_t>(i + 1)])
      lam = (lam * tails_[static_cast<std::size_t>(i)].lambda) & mask;
  std::uint64_t x = (u.e[0] + static_cast<std::uint64_t>(v.e[0]) * lam) & mask;

  std::uint32_t bits[2] = {0, 0};
  for (int i = 0; i < tail_count(); ++i)
    bits[i] = u.e[static_cast<std::size_t>(i + 1)] + v.e[static_cast<std::size_t>(i + 1)];
  if (tail_count() >= 1 && bits[0] == 2) {
    x = (x + tails_[0].square) & mask;
    bits[0] = 0;
  }
  if (tail_count() >= 2 && bits[1] == 2) {
    std::uint64_t s = tails_[1].square;
    if (bits[0]) s = (s * tails_[0].lambda) & mask;  // move a^s past t1
    x = (x + s) & mask;
    bits[1] = 0;
  }
  Element w;
  w.e[0] = static_cast<std::uint32_t>(x);
  w.e[1] = bits[0];
  w.e[2] = bits[1];
  return w;
}

Element GroupInstance::inverse(const Element& u) const {
  validate(u);
  const std::uint32_t mask = a_mod_ - 1;
  // Same tail bits; the a-exponent solves (a^x w)(a^y w) = 1 in closed form.
  std::uint64_t shift = u.e[0];
  std::uint64_t lam = 1;
  for (int i = 0; i < tail_count(); ++i) {
    if (u.e[static_cast<std::size_t>(i + 1)]) {
      shift = (shift + tails_[static_cast<std::size_t>(i)].square) & mask;
      lam = (lam * tails_[static_cast<std::size_t>(i)].lambda) & mask;
    }
  }
  const std::uint64_t y = ((a_mod_ - (shift & mask)) * lam) & mask;
  Element w = u;
  w.e[0] = static_cast<std::uint32_t>(y);
  return w;
}

Element GroupInstance::power(const Element& u, std::int64_t k) const {
  Element base = k < 0 ? inverse(u) : u;
  std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1
                          : static_cast<std::uint64_t>(k);
  Element acc = identity();
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    n >>= 1;
  }
  return acc;
}

Element GroupInstance::conjugate(const Element& u, const Element& v) const {
  return multiply(multiply(inverse(v), u), v);
}

Element GroupInstance::commutator(const Element& u, const Element& v) const {
  return multiply(inverse(multiply(v, u)), multiply(u, v));
}

std::uint64_t GroupInstance::element_order(const Element& u) const {
  validate(u);
  std::uint64_t ord = 1;
  Element w = u;
  while (w != identity()) {
    w = multiply(w, w);
    ord <<= 1;
    if (ord > order_) throw parameter_error("element order exceeds group order");
  }
  return ord;
}

bool GroupInstance::generates(std::span<const Element> gens) const {
  // Rank of the images in G/<a^2> = Z_2^r, r = generator_count().
  const int r = generator_count();
  std::vector<std::uint32_t> basis;
  for (const Element& u : gens) {
    validate(u);
    std::uint32_t v = (u.e[0] & 1u) | (u.e[1] << 1) | (u.e[2] << 2);
    for (std::uint32_t b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return static_cast<int>(basis.size()) == r;
}

std::vector<Element> GroupInstance::all_elements() const {
  require_exhaustive("element enumeration");
  std::vector<Element> out;
  out.reserve(order_);
  const std::uint32_t b1max = tail_count() >= 1 ? 1 : 0;
  const std::uint32_t b2max = tail_count() >= 2 ? 1 : 0;
  for (std::uint32_t x = 0; x < a_mod_; ++x)
    for (std::uint32_t b1 = 0; b1 <= b1max; ++b1)
      for (std::uint32_t b2 = 0; b2 <= b2max; ++b2) out.push_back(elem(x, b1, b2));
  std::sort(out.begin(), out.end());
  return out;
}

std::string GroupInstance::word(const Element& u) const {
  validate(u);
  std::string s;
  if (u.e[0] == 1) {
    s = "a";
  } else if (u.e[0] > 1) {
    s = "a^" + std::to_string(u.e[0]);
  }
  for (int i = 0; i < tail_count(); ++i) {
    if (u.e[static_cast<std::size_t>(i + 1)]) {
      if (!s.empty()) s += "*";
      s += tails_[static_cast<std::size_t>(i)].name;
    }
  }
  return s.empty() ? "1" : s;
}

void GroupInstance::require_exhaustive(const char* what) const {
  if (!exhaustive_ok())
    throw scale_error(std::string(what) + " is gated to ell <= " +
                      std::to_string(kExhaustiveMaxEll) + " (got ell = " +
                      std::to_string(ell_) + ")");
}

bool SubgroupClosure::contains(const Element& u) const {
  return std::binary_search(elements.begin(), elements.end(), u);
}

SubgroupClosure closure(const GroupInstance& g, std::span<const Element> gens,
                        std::uint64_t cap) {
  if (gens.empty()) throw parameter_error("closure needs at least one generator");
  std::unordered_set<Element, ElementHash> seen;
  std::queue<Element> frontier;
  seen.insert(g.identity());
  frontier.push(g.identity());
  for (const Element& x : gens) g.validate(x);
  while (!frontier.empty()) {
    const Element u = frontier.front();
    frontier.pop();
    for (const Element& x : gens) {
      const Element v = g.multiply(u, x);
      if (seen.insert(v).second) {
        if (seen.size() > cap)
          throw scale_error("subgroup closure exceeds materialization cap");
        frontier.push(v);
      }
    }
  }
  SubgroupClosure h;
  h.generator_list.assign(gens.begin(), gens.end());
  h.elements.assign(seen.begin(), seen.end());
  std::sort(h.elements.begin(), h.elements.end());
  h.order = h.elements.size();
  return h;
}

std::uint64_t pair_subgroup_order(const GroupInstance& g, const Element& u,
                                  const Element& v) {
  if (g.order() <= kClosureCap) {
    const std::array<Element, 2> gens{u, v};
    return closure(g, gens).order;
  }
  if (u == g.identity()) return g.element_order(v);
  if (v == g.identity() || u == v) return g.element_order(u);
  if (g.element_order(u) == 2 && g.element_order(v) == 2)
    return 2 * g.element_order(g.multiply(u, v));
  throw scale_error("pair subgroup order beyond the materialization cap "
                    "needs both elements to be involutions");
}

std::vector<Element> involutions(const GroupInstance& g) {
  g.require_exhaustive("involution scan");
  std::vector<Element> out;
  for (const Element& u : g.all_elements())
    if (g.is_involution(u)) out.push_back(u);
  return out;
}

SubgroupClosure center(const GroupInstance& g) {
  g.require_exhaustive("center scan");
  const std::vector<Element> gens = g.generator_sequence();
  std::vector<Element> z;
  for (const Element& u : g.all_elements()) {
    bool central = true;
    for (const Element& x : gens)
      if (!g.commute(u, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(u);
  }
  SubgroupClosure h;
  h.elements = std::move(z);
  h.generator_list = h.elements;
  h.order = h.elements.size();
  return h;
}

SubgroupClosure commutator_subgroup(const GroupInstance& g) {
  g.require_exhaustive("commutator scan");
  const std::vector<Element> all = g.all_elements();
  std::unordered_set<Element, ElementHash> comms;
  for (const Element& u : all)
    for (const Element& v : all) comms.insert(g.commutator(u, v));
  std::vector<Element> gens(comms.begin(), comms.end());
  std::sort(gens.begin(), gens.end());
  return closure(g, gens);
}

SubgroupClosure maximal_subgroup_witness(const GroupInstance& g) {
  g.require_exhaustive("maximal subgroup witness");
  // Family-specific witness, then verified against the predicates.
  std::vector<Element> gens;
  switch (g.descriptor().family) {
    case Family::Cyclic:
      gens = {g.multiply(g.gen_a(), g.gen_a())};
      break;
    case Family::CyclicTimesZ2:
    case Family::Dihedral:
    case Family::SemiDihedral:
    case Family::Modular:
    case Family::Quaternion:
      gens = {g.gen_a()};
      break;
    case Family::QuaternionCentralZ4:
      gens = {g.gen_a(), g.multiply(g.generator(1), g.generator(2))};  // <a, cd>
      break;
    case Family::DihedralTimesZ2:
    case Family::DihedralSemiZ2:
      gens = {g.gen_a(), g.generator(1)};  // <a, b>
      break;
    case Family::ElementaryAbelian8:
      gens = {g.generator(1), g.generator(2)};  // <b, c>
      break;
  }
  SubgroupClosure h = closure(g, gens);
  const bool ok = h.order * 2 == g.order() &&
                  (is_cyclic_subgroup(g, h) || is_dihedral_subgroup(g, h));
  if (!ok)
    throw std::logic_error("maximal subgroup witness failed its certificate");
  return h;
}

namespace {

std::uint64_t max_element_order(const GroupInstance& g, const SubgroupClosure& h) {
  std::uint64_t m = 1;
  for (const Element& u : h.elements) m = std::max(m, g.element_order(u));
  return m;
}

std::uint64_t involution_count(const GroupInstance& g, const SubgroupClosure& h) {
  std::uint64_t n = 0;
  for (const Element& u : h.elements)
    if (g.is_involution(u)) ++n;
  return n;
}

bool subgroup_abelian(const GroupInstance& g, const SubgroupClosure& h) {
  for (const Element& u : h.generator_list)
    for (const Element& v : h.generator_list)
      if (!g.commute(u, v)) return false;
  return true;
}

// Finds u of order |h|/2 and an involution t outside <u> with u^t = u^e.
bool has_split_cyclic_index2(const GroupInstance& g, const SubgroupClosure& h,
                             std::uint64_t conj_exp_mod) {
  const std::uint64_t half = h.order / 2;
  for (const Element& u : h.elements) {
    if (g.element_order(u) != half) continue;
    const SubgroupClosure cu = closure(g, std::array<Element, 1>{u});
    for (const Element& t : h.elements) {
      if (!g.is_involution(t) || cu.contains(t)) continue;
      const std::int64_t e = static_cast<std::int64_t>(conj_exp_mod % half);
      if (g.conjugate(u, t) == g.power(u, e)) return true;
    }
  }
  return false;
}

}  // namespace

bool is_cyclic_subgroup(const GroupInstance& g, const SubgroupClosure& h) {
  return max_element_order(g, h) == h.order;
}

bool is_klein_four(const GroupInstance& g, const SubgroupClosure& h) {
  return h.order == 4 && involution_count(g, h) == 3;
}

bool is_dihedral_subgroup(const GroupInstance& g, const SubgroupClosure& h) {
  // Z_2^2 counts as the dihedral group of order 4.
  if (h.order == 2) return false;
  if (h.order == 4) return is_klein_four(g, h);
  if ((h.order & (h.order - 1)) != 0) return false;
  const std::uint64_t half = h.order / 2;
  for (const Element& u : h.elements) {
    if (g.element_order(u) != half) continue;
    const SubgroupClosure cu = closure(g, std::array<Element, 1>{u});
    for (const Element& t : h.elements)
      if (g.is_involution(t) && !cu.contains(t) && g.conjugate(u, t) == g.inverse(u))
        return true;
  }
  return false;
}

bool is_semidihedral_subgroup(const GroupInstance& g, const SubgroupClosure& h) {
  if (h.order < 16 || (h.order & (h.order - 1)) != 0) return false;
  if (subgroup_abelian(g, h)) return false;
  return has_split_cyclic_index2(g, h, h.order / 4 - 1 + h.order);
}

bool is_modular_subgroup(const GroupInstance& g, const SubgroupClosure& h) {
  if (h.order < 16 || (h.order & (h.order - 1)) != 0) return false;
  if (subgroup_abelian(g, h)) return false;
  return has_split_cyclic_index2(g, h, h.order / 4 + 1);
}

bool is_quaternion_subgroup(const GroupInstance& g, const SubgroupClosure& h) {
  if (h.order < 8 || (h.order & (h.order - 1)) != 0) return false;
  return involution_count(g, h) == 1 && !subgroup_abelian(g, h);
}

}  // namespace tgmaps
