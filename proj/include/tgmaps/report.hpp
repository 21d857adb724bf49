#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tgmaps/group.hpp"
#include "tgmaps/maps.hpp"

namespace tgmaps {

enum class OutFormat { Table, Json, Csv };

std::optional<OutFormat> parse_format(std::string_view name);

inline constexpr int kSchemaVersion = 1;

// Descriptor serialization: {"family":"DihedralTimesZ2","ell":3}; ell is
// omitted for ElementaryAbelian8.
nlohmann::json descriptor_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const nlohmann::json& j);

nlohmann::json map_record_json(const GroupInstance& g, const MapRecord& rec);

// Renders rows with the given column order. Table pads columns; CSV joins
// with commas (array cells are ';'-joined words); JSON wraps the rows as
// {schema_version, command, results}. Output ends with a newline.
std::string render_report(OutFormat fmt, std::string_view command,
                          const std::vector<std::string>& columns,
                          const std::vector<nlohmann::json>& rows);

}  // namespace tgmaps
