#pragma once

#include <string_view>

namespace knotnum::embedded {

// Contents of data/layout_plans.txt and data/reference_table.tsv, compiled in.
std::string_view layout_plans();
std::string_view reference_table();

} // namespace knotnum::embedded
