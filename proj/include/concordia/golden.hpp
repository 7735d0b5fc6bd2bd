#pragma once

#include <vector>

#include "concordia/catalog.hpp"

namespace concordia {

/// The worked examples as pass/fail rows.  Rows whose name starts with
/// "conjecture:" pin conjectural values and do not count as failures.
std::vector<CheckRow> golden_suite();

}  // namespace concordia
