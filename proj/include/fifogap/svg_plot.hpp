#pragma once

#include <span>
#include <string>
#include <string_view>

#include "fifogap/experiment.hpp"

namespace fifogap {

/// File-name-safe stem for a distribution label ("LogNormal(1,1)" -> "LogNormal_1_1").
std::string svg_file_stem(std::string_view distribution);

/// Self-contained SVG with two panels sharing a log-scaled block-size axis:
/// left, mean ratio_lb..ratio_ub band plus mean bound_ratio; right, mean
/// gap_lower. `rows` must belong to one distribution, any order.
std::string render_distribution_svg(std::string_view distribution,
                                    std::span<const BlockSummary> rows);

}  // namespace fifogap
