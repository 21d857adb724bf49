#include "tgmaps/catalog.hpp"

#include <algorithm>
#include <array>

namespace tgmaps {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int min_ell;
  int order_shift;  // |G| = 2^{ell + order_shift}
};

constexpr std::array<FamilyInfo, 10> kFamilies{{
    {Family::Cyclic, "Cyclic", 2, 0},
    {Family::CyclicTimesZ2, "CyclicTimesZ2", 1, 1},
    {Family::Dihedral, "Dihedral", 2, 1},
    {Family::SemiDihedral, "SemiDihedral", 3, 1},
    {Family::Modular, "Modular", 3, 1},
    {Family::Quaternion, "Quaternion", 2, 1},
    {Family::QuaternionCentralZ4, "QuaternionCentralZ4", 2, 2},
    {Family::DihedralTimesZ2, "DihedralTimesZ2", 2, 2},
    {Family::DihedralSemiZ2, "DihedralSemiZ2", 3, 2},
    {Family::ElementaryAbelian8, "ElementaryAbelian8", 0, 0},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi;
  throw parameter_error("unknown family");
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& fi : kFamilies)
    if (fi.name == name) return fi.family;
  return std::nullopt;
}

int min_ell(Family f) { return info(f).min_ell; }

FamilyDescriptor normalized(FamilyDescriptor desc) {
  if (desc.family == Family::ElementaryAbelian8) return {desc.family, 0};
  if (desc.family == Family::Dihedral && desc.ell == 1)
    desc = {Family::CyclicTimesZ2, 1};
  if (desc.family == Family::Modular && desc.ell == 2)
    desc = {Family::Dihedral, 2};
  const FamilyInfo& fi = info(desc.family);
  if (desc.ell < fi.min_ell || desc.ell > kMaxEll)
    throw parameter_error(std::string(fi.name) + " requires ell in [" +
                          std::to_string(fi.min_ell) + "," +
                          std::to_string(kMaxEll) + "], got " +
                          std::to_string(desc.ell));
  return desc;
}

std::uint64_t group_order(const FamilyDescriptor& d) {
  const FamilyDescriptor n = normalized(d);
  if (n.family == Family::ElementaryAbelian8) return 8;
  return std::uint64_t{1} << (n.ell + info(n.family).order_shift);
}

std::string group_label(const FamilyDescriptor& d) {
  const FamilyDescriptor n = normalized(d);
  const auto pw = [](int k) { return std::to_string(std::uint64_t{1} << k); };
  switch (n.family) {
    case Family::Cyclic: return "Z" + pw(n.ell);
    case Family::CyclicTimesZ2: return n.ell == 1 ? "Z2^2" : "Z" + pw(n.ell) + "xZ2";
    case Family::Dihedral: return "D" + pw(n.ell + 1);
    case Family::SemiDihedral: return "SD" + pw(n.ell + 1);
    case Family::Modular: return "M" + pw(n.ell + 1);
    case Family::Quaternion: return "Q" + pw(n.ell + 1);
    case Family::QuaternionCentralZ4: return "Q" + pw(n.ell + 1) + "oZ4";
    case Family::DihedralTimesZ2: return "D" + pw(n.ell + 1) + "xZ2";
    case Family::DihedralSemiZ2: return "D" + pw(n.ell + 1) + ":Z2";
    case Family::ElementaryAbelian8: return "Z2^3";
  }
  throw parameter_error("unknown family");
}

GroupInstance build(FamilyDescriptor desc) {
  const FamilyDescriptor n = normalized(desc);
  const int ell = n.family == Family::ElementaryAbelian8 ? 1 : n.ell;
  const std::uint32_t a0 = std::uint32_t{1} << (ell - 1);
  const std::uint32_t minus1 = (std::uint32_t{1} << ell) - 1;
  std::vector<TailGenerator> tails;
  switch (n.family) {
    case Family::Cyclic:
      break;
    case Family::CyclicTimesZ2:
      tails = {{'b', 1, 0}};
      break;
    case Family::Dihedral:
      tails = {{'b', minus1, 0}};
      break;
    case Family::SemiDihedral:
      tails = {{'b', a0 - 1, 0}};
      break;
    case Family::Modular:
      tails = {{'b', a0 + 1, 0}};
      break;
    case Family::Quaternion:
      tails = {{'c', minus1, a0}};
      break;
    case Family::QuaternionCentralZ4:
      tails = {{'c', minus1, a0}, {'d', 1, a0}};
      break;
    case Family::DihedralTimesZ2:
      tails = {{'b', minus1, 0}, {'c', 1, 0}};
      break;
    case Family::DihedralSemiZ2:
      tails = {{'b', minus1, 0}, {'c', a0 + 1, 0}};
      break;
    case Family::ElementaryAbelian8:
      tails = {{'b', 1, 0}, {'c', 1, 0}};
      break;
  }
  return GroupInstance(n, ell, std::move(tails));
}

std::vector<GroupInstance> catalog_all(std::uint64_t max_order) {
  std::vector<GroupInstance> out;
  for (const auto& fi : kFamilies) {
    if (fi.family == Family::ElementaryAbelian8) {
      if (max_order >= 8) out.push_back(build({fi.family, 0}));
      continue;
    }
    for (int ell = fi.min_ell; ell <= kMaxEll; ++ell) {
      const FamilyDescriptor d{fi.family, ell};
      if (normalized(d) != d) continue;  // degenerate alias of another row
      if (group_order(d) > max_order) break;
      out.push_back(build(d));
    }
  }
  std::sort(out.begin(), out.end(), [](const GroupInstance& x, const GroupInstance& y) {
    const auto kx = std::tuple(x.order(), static_cast<int>(x.descriptor().family),
                               x.descriptor().ell);
    const auto ky = std::tuple(y.order(), static_cast<int>(y.descriptor().family),
                               y.descriptor().ell);
    return kx < ky;
  });
  return out;
}

FeatureFlags feature_flags(const GroupInstance& g) {
  const FamilyDescriptor d = g.descriptor();
  switch (d.family) {
    case Family::Cyclic: return {false, false, true};
    case Family::CyclicTimesZ2:
      return d.ell == 1 ? FeatureFlags{true, true, true} : FeatureFlags{false, false, true};
    case Family::Dihedral: return {true, true, true};
    case Family::SemiDihedral: return {false, false, true};
    case Family::Modular: return {false, false, true};
    case Family::Quaternion: return {false, false, false};
    case Family::QuaternionCentralZ4: return {true, false, false};
    case Family::DihedralTimesZ2: return {true, true, false};
    case Family::DihedralSemiZ2: return {true, true, false};
    case Family::ElementaryAbelian8: return {true, true, false};
  }
  throw parameter_error("unknown family");
}

InvariantVector invariant_vector(const GroupInstance& g) {
  g.require_exhaustive("invariant vector");
  InvariantVector v;
  v.order = g.order();
  v.involution_count = involutions(g).size();
  v.center_order = center(g).order;
  v.exponent = 1;
  for (const Element& u : g.all_elements())
    v.exponent = std::max(v.exponent, g.element_order(u));
  return v;
}

}  // namespace tgmaps
