#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "netdyn/measures.hpp"

namespace netdyn {

inline constexpr const char* kSeriesCsvHeader =
    "pair_index,combination,sum,normalized_sum,relative_sum,edge_modification";

/// One row per (pair, series), ordered by pair then by combination index
/// (custom series last). Reals use 9 significant digits.
void write_series_csv(std::ostream& out, std::span<const MeasureSeries> series);

/// "%.9g" rendering used by every numeric export.
std::string format_real(double value);

}  // namespace netdyn
