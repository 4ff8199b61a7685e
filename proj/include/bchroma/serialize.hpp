#pragma once

#include "bchroma/coloring.hpp"
#include "bchroma/constructions.hpp"
#include "bchroma/graph.hpp"
#include "bchroma/solver.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace bchroma {

inline constexpr const char* schema_version = "bchroma/1";

/// {"schema","k","colors":{label:color},"b_vertices":{color:label}}.
nlohmann::json certificate_to_json(const Graph& g, const BColoringCertificate& cert);
/// Inverse of certificate_to_json; labels are resolved against g. Throws ParseError.
BColoringCertificate certificate_from_json(const Graph& g, const nlohmann::json& j);

nlohmann::json budget_to_json(const Budget& budget);
nlohmann::json search_report_to_json(const Graph& g, const SearchReport& report);
nlohmann::json count_report_to_json(const CountReport& report);

/// {"schema","rows","cols","cells":[[...]],"circled":[[r,c],...]}; empty cells are null.
nlohmann::json grid_to_json(const GridColoring& grid);
GridColoring grid_from_json(const nlohmann::json& j);
/// Right-aligned table, circled cells in parentheses, empty cells as '.'.
std::string grid_to_text(const GridColoring& grid);

/// Graphviz rendering. With a certificate, vertices are filled by color class
/// and b-vertices drawn with a double border.
std::string to_dot(const Graph& g, const BColoringCertificate* cert = nullptr);

} // namespace bchroma
