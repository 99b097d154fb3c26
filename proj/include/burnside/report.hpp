#pragma once

#include <json.hpp>

#include "burnside/global_ops.hpp"

namespace burnside {

nlohmann::json element_to_json(const BurnsideElement& x);
BurnsideElement element_from_json(const nlohmann::json& j);

/// {"axiom", "instance", "status", "lhs", "rhs"} per entry.
nlohmann::json report_to_json(const Report& r);

std::string render_report_text(const Report& r, bool show_passes = false);

/// Class legend and the classical table of marks (rows = coset spaces G/H,
/// columns = fixing subgroups; the transpose of the internal orientation).
nlohmann::json marks_to_json(const GroupPtr& g);

}  // namespace burnside
