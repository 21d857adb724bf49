#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tgmaps/aut.hpp"
#include "tgmaps/catalog.hpp"
#include "tgmaps/group.hpp"
#include "tgmaps/maps.hpp"
#include "tgmaps/report.hpp"
#include "tgmaps/squarefree.hpp"
#include "tgmaps/tuples.hpp"
#include "tgmaps/verify.hpp"

namespace {

using namespace tgmaps;

struct EllRange {
  int lo{2};
  int hi{2};
};

EllRange parse_ell_range(const std::string& text) {
  const auto dots = text.find("..");
  EllRange r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw parameter_error("--ell expects N or LO..HI, got '" + text + "'");
  }
  if (r.lo < 0 || r.hi < r.lo || r.hi > kMaxEll)
    throw parameter_error("--ell range out of bounds: " + text);
  return r;
}

Family parse_family_or_throw(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw parameter_error("unknown family '" + name + "'");
  return *f;
}

std::vector<GroupInstance> selected_groups(const std::string& family_name_text,
                                           const std::string& ell_text) {
  const Family f = parse_family_or_throw(family_name_text);
  if (f == Family::ElementaryAbelian8) {
    std::vector<GroupInstance> out;
    out.push_back(build({f, 0}));
    return out;
  }
  const EllRange r = parse_ell_range(ell_text);
  std::vector<GroupInstance> out;
  for (int l = r.lo; l <= r.hi; ++l) {
    if (l < min_ell(f)) continue;
    const FamilyDescriptor d{f, l};
    if (normalized(d) != d) continue;
    out.push_back(build(d));
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw parameter_error("cannot open output file '" + out_path + "'");
  os << text;
}

int family_ell_field(const GroupInstance& g) {
  return g.descriptor().family == Family::ElementaryAbelian8 ? 0 : g.descriptor().ell;
}

nlohmann::json group_row(const GroupInstance& g) {
  nlohmann::json row;
  row["family"] = std::string(family_name(g.descriptor().family));
  row["ell"] = family_ell_field(g);
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite 2-groups with a cyclic or dihedral maximal subgroup: "
               "catalog, automorphisms, generating tuples, arc-transitive maps"};
  app.require_subcommand(1);

  std::string format_text = "table";
  std::string out_path;
  std::string family_text;
  std::string ell_text = "2";
  std::string kind_text;
  std::string type_text;
  std::uint64_t seed = 0;
  bool oracle = false;
  bool all_families = false;
  std::uint64_t max_order = 128;
  std::uint64_t sf_d = 0;
  std::uint64_t sf_xmax = 1000000;
  std::int64_t sf_n = 0;

  const auto add_common = [&](CLI::App* cmd, bool with_family) {
    cmd->add_option("--format", format_text, "table, json or csv");
    cmd->add_option("--out", out_path, "write the report to this file");
    if (with_family) {
      cmd->add_option("--family", family_text, "group family name");
      cmd->add_option("--ell", ell_text, "parameter ell, N or LO..HI");
    }
  };

  CLI::App* c_catalog = app.add_subcommand("catalog", "list the group catalog");
  c_catalog->add_option("--max-order", max_order, "largest group order to list");
  add_common(c_catalog, false);

  CLI::App* c_aut = app.add_subcommand("aut", "automorphism group orders");
  add_common(c_aut, true);
  c_aut->add_flag("--oracle", oracle, "cross-check against brute force (|G| <= 64)");

  CLI::App* c_triples = app.add_subcommand("triples", "generating tuple counts");
  add_common(c_triples, true);
  c_triples->add_option("--kind", kind_text, "reversing, regular or rotary");

  CLI::App* c_orbits = app.add_subcommand("orbits", "orbit classification");
  add_common(c_orbits, true);
  c_orbits->add_option("--kind", kind_text, "reversing, regular or rotary");

  CLI::App* c_maps = app.add_subcommand("maps", "arc-transitive map records");
  add_common(c_maps, true);
  c_maps->add_option("--type", type_text, "map type: 1, 2*, 2^P, 2*ex, 2^Pex");

  CLI::App* c_verify = app.add_subcommand("verify", "run the verification suites");
  add_common(c_verify, true);
  c_verify->add_flag("--all", all_families, "verify every family");
  c_verify->add_flag("--oracle", oracle, "include brute-force cross-checks");
  c_verify->add_option("--seed", seed, "seed for sampled property checks");

  CLI::App* c_sf = app.add_subcommand("squarefree", "square-free utilities");
  add_common(c_sf, false);
  c_sf->add_option("--d", sf_d, "scan for the smallest x with x^2 | 2^d - 1");
  c_sf->add_option("--x-max", sf_xmax, "scan bound for x");
  c_sf->add_option("--n", sf_n, "test an integer for square-freeness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto fmt = parse_format(format_text);
    if (!fmt) throw parameter_error("unknown format '" + format_text + "'");
    std::vector<std::string> columns;
    std::vector<nlohmann::json> rows;
    std::string command;
    int exit_code = 0;

    if (c_catalog->parsed()) {
      command = "catalog";
      columns = {"family", "ell", "label", "order", "aut_order",
                 "reversing", "regular", "rotary"};
      for (const GroupInstance& g : catalog_all(max_order)) {
        nlohmann::json row = group_row(g);
        row["label"] = group_label(g.descriptor());
        row["order"] = g.order();
        row["aut_order"] = aut_order_closed_form(g.descriptor());
        const FeatureFlags f = feature_flags(g);
        row["reversing"] = f.has_reversing;
        row["regular"] = f.has_regular;
        row["rotary"] = f.has_rotary;
        rows.push_back(std::move(row));
      }
    } else if (c_aut->parsed()) {
      command = "aut";
      if (family_text.empty()) throw parameter_error("aut needs --family");
      columns = {"family", "ell", "order", "aut_order", "generators"};
      if (oracle) {
        columns.push_back("oracle_order");
        columns.push_back("oracle_match");
      }
      for (const GroupInstance& g : selected_groups(family_text, ell_text)) {
        if (oracle && g.order() > kBruteForceAutMaxOrder)
          throw parameter_error("--oracle requires |G| <= 64; " +
                                group_label(g.descriptor()) + " has order " +
                                std::to_string(g.order()));
        const AutGroup ag = explicit_aut(g);
        nlohmann::json row = group_row(g);
        row["order"] = g.order();
        row["aut_order"] = ag.order;
        row["generators"] = ag.generators.size();
        if (oracle) {
          const AutGroup oracle_group = brute_force_aut(g);
          row["oracle_order"] = oracle_group.order;
          const bool match =
              oracle_group.elements == aut_closure(g, ag.generators);
          row["oracle_match"] = match;
          if (!match) exit_code = 1;
        }
        rows.push_back(std::move(row));
      }
    } else if (c_triples->parsed() || c_orbits->parsed()) {
      const bool orbits_cmd = c_orbits->parsed();
      command = orbits_cmd ? "orbits" : "triples";
      if (family_text.empty()) throw parameter_error(command + " needs --family");
      std::vector<TupleKind> kinds{TupleKind::Reversing, TupleKind::Regular,
                                   TupleKind::RotaryPair};
      if (!kind_text.empty()) {
        const auto k = parse_tuple_kind(kind_text);
        if (!k) throw parameter_error("unknown kind '" + kind_text + "'");
        kinds = {*k};
      }
      if (orbits_cmd)
        columns = {"family", "ell", "kind", "orbits", "orbit_size", "total",
                   "transversal_ok", "representatives"};
      else
        columns = {"family", "ell", "kind", "count"};
      for (const GroupInstance& g : selected_groups(family_text, ell_text)) {
        for (const TupleKind k : kinds) {
          nlohmann::json row = group_row(g);
          row["kind"] = std::string(tuple_kind_name(k));
          if (!orbits_cmd) {
            row["count"] = enumerate(g, k).size();
          } else {
            const OrbitPartition part = orbit_partition(g, enumerate(g, k));
            row["orbits"] = part.classes.size();
            row["orbit_size"] =
                part.classes.empty() ? 0 : part.classes.front().size;
            row["total"] = part.total;
            const MatchReport match = match_representatives(g, k);
            row["transversal_ok"] = match.ok;
            if (!match.ok) exit_code = 1;
            nlohmann::json reps = nlohmann::json::array();
            for (const OrbitClass& cls : part.classes)
              reps.push_back(tuple_word(g, cls.representative));
            row["representatives"] = std::move(reps);
          }
          rows.push_back(std::move(row));
        }
      }
    } else if (c_maps->parsed()) {
      command = "maps";
      if (family_text.empty()) throw parameter_error("maps needs --family");
      std::optional<MapType> only_type;
      if (!type_text.empty()) {
        only_type = parse_map_type(type_text);
        if (!only_type) throw parameter_error("unknown map type '" + type_text + "'");
      }
      columns = {"family", "ell", "map_type", "tuple", "chi",
                 "V", "E", "F", "passes_filter"};
      for (const GroupInstance& g : selected_groups(family_text, ell_text))
        for (const MapRecord& rec : classify(g)) {
          if (only_type && rec.map_type != *only_type) continue;
          rows.push_back(map_record_json(g, rec));
        }
    } else if (c_verify->parsed()) {
      command = "verify";
      VerifyOptions opts;
      const EllRange r = parse_ell_range(ell_text);
      opts.ell_lo = r.lo;
      opts.ell_hi = r.hi;
      opts.oracle = oracle;
      opts.seed = seed;
      if (!all_families) {
        if (family_text.empty())
          throw parameter_error("verify needs --family or --all");
        opts.family = parse_family_or_throw(family_text);
      }
      const std::vector<CheckResult> results = run_verify(opts);
      columns = {"check", "status", "detail"};
      for (const CheckResult& res : results) {
        nlohmann::json row;
        row["check"] = res.name;
        row["status"] = res.pass ? "PASS" : "FAIL";
        row["detail"] = res.detail;
        rows.push_back(std::move(row));
      }
      if (!all_passed(results)) exit_code = 1;
    } else if (c_sf->parsed()) {
      command = "squarefree";
      if (c_sf->count("--n") > 0) {
        columns = {"n", "squarefree"};
        nlohmann::json row;
        row["n"] = sf_n;
        row["squarefree"] = is_squarefree(sf_n);
        rows.push_back(std::move(row));
      } else if (sf_d > 0) {
        columns = {"d", "x"};
        const SquareWitness w = square_divisor_scan(sf_d, sf_xmax);
        nlohmann::json row;
        row["d"] = w.d;
        row["x"] = w.x ? nlohmann::json(*w.x) : nlohmann::json();
        rows.push_back(std::move(row));
      } else {
        throw parameter_error("squarefree needs --d or --n");
      }
    }

    emit(render_report(*fmt, command, columns, rows), out_path);
    return exit_code;
  } catch (const parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const scale_error& e) {
    std::cerr << "scale error: " << e.what() << "\n";
    return 2;
  } catch (const malformed_element_error& e) {
    std::cerr << "malformed element: " << e.what() << "\n";
    return 2;
  } catch (const mismatch_error& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
