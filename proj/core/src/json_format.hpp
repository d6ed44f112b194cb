#pragma once

// Internal: serialises nlohmann::json with every floating-point number
// printed at 17 significant digits, which nlohmann's own dump() does not do.

#include <string>

#include "json.hpp"

namespace triwalk::detail {

std::string format_double(double x);
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace triwalk::detail
