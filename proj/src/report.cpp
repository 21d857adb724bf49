#include "tgmaps/report.hpp"

#include <sstream>

#include "tgmaps/catalog.hpp"
#include "tgmaps/tuples.hpp"

namespace tgmaps {

std::optional<OutFormat> parse_format(std::string_view name) {
  if (name == "table") return OutFormat::Table;
  if (name == "json") return OutFormat::Json;
  if (name == "csv") return OutFormat::Csv;
  return std::nullopt;
}

nlohmann::json descriptor_json(const FamilyDescriptor& d) {
  nlohmann::json j;
  j["family"] = std::string(family_name(d.family));
  if (d.family != Family::ElementaryAbelian8) j["ell"] = d.ell;
  return j;
}

FamilyDescriptor descriptor_from_json(const nlohmann::json& j) {
  const auto fam = parse_family(j.at("family").get<std::string>());
  if (!fam) throw parameter_error("unknown family name in descriptor");
  FamilyDescriptor d{*fam, 0};
  if (*fam != Family::ElementaryAbelian8) d.ell = j.at("ell").get<int>();
  return normalized(d);
}

nlohmann::json map_record_json(const GroupInstance& g, const MapRecord& rec) {
  nlohmann::json j;
  j["family"] = std::string(family_name(rec.group.family));
  j["ell"] = rec.group.family == Family::ElementaryAbelian8 ? 0 : rec.group.ell;
  j["map_type"] = std::string(map_type_name(rec.map_type));
  nlohmann::json words = nlohmann::json::array();
  for (int i = 0; i < tuple_arity(rec.tuple.kind); ++i)
    words.push_back(g.word(rec.tuple.parts[static_cast<std::size_t>(i)]));
  j["tuple"] = std::move(words);
  j["chi"] = rec.chi;
  j["V"] = rec.vertices;
  j["E"] = rec.edges;
  j["F"] = rec.faces;
  j["passes_filter"] = rec.passes_filter;
  return j;
}

namespace {

std::string cell_text(const nlohmann::json& v, char array_sep) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string s;
    for (const auto& item : v) {
      if (!s.empty()) s += array_sep;
      s += cell_text(item, array_sep);
    }
    return s;
  }
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

std::string render_report(OutFormat fmt, std::string_view command,
                          const std::vector<std::string>& columns,
                          const std::vector<nlohmann::json>& rows) {
  std::ostringstream out;
  switch (fmt) {
    case OutFormat::Json: {
      nlohmann::json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = std::string(command);
      doc["results"] = rows;
      out << doc.dump(2) << "\n";
      break;
    }
    case OutFormat::Csv: {
      for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i)
          out << (i ? "," : "")
              << cell_text(row.contains(columns[i]) ? row[columns[i]] : nlohmann::json(),
                           ';');
        out << "\n";
      }
      break;
    }
    case OutFormat::Table: {
      std::vector<std::vector<std::string>> grid;
      grid.push_back(columns);
      for (const auto& row : rows) {
        std::vector<std::string> line;
        for (const std::string& c : columns)
          line.push_back(cell_text(row.contains(c) ? row[c] : nlohmann::json(), ','));
        grid.push_back(std::move(line));
      }
      std::vector<std::size_t> width(columns.size(), 0);
      for (const auto& line : grid)
        for (std::size_t i = 0; i < line.size(); ++i)
          width[i] = std::max(width[i], line[i].size());
      for (std::size_t r = 0; r < grid.size(); ++r) {
        std::string line;
        for (std::size_t i = 0; i < grid[r].size(); ++i) {
          if (i) line += "  ";
          line += grid[r][i];
          if (i + 1 < grid[r].size())
            line += std::string(width[i] - grid[r][i].size(), ' ');
        }
        out << line << "\n";
      }
      break;
    }
  }
  return out.str();
}

}  // namespace tgmaps
