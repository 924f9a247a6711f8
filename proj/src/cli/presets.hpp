#pragma once

#include <string>

#include "cli/csv.hpp"

namespace viscowave::cli {

/// Writes the curves of preset fig1..fig4. The output depends only on the
/// preset name; `threads` affects speed, not values.
void write_figure(const std::string& name, CsvWriter& out, int threads);

}  // namespace viscowave::cli
