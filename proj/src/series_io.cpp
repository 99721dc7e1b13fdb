#include "netdyn/series_io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <vector>

namespace netdyn {

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_series_csv(std::ostream& out, std::span<const MeasureSeries> series) {
  std::vector<const MeasureSeries*> order;
  for (const auto& s : series) order.push_back(&s);
  std::ranges::stable_sort(order, [](const MeasureSeries* a, const MeasureSeries* b) {
    const int ka = a->combination.value_or(1000);
    const int kb = b->combination.value_or(1000);
    return ka < kb;
  });

  std::size_t pairs = 0;
  for (const auto* s : order) pairs = std::max(pairs, s->points.size());

  out << kSeriesCsvHeader << '\n';
  for (std::size_t i = 0; i < pairs; ++i) {
    for (const auto* s : order) {
      if (i >= s->points.size()) continue;
      const auto& p = s->points[i];
      out << p.pair_index << ','
          << (s->combination ? std::to_string(*s->combination) : "custom") << ','
          << format_real(p.sum) << ',' << format_real(p.normalized_sum) << ','
          << format_real(p.relative_sum) << ','
          << format_real(p.edge_modification) << '\n';
    }
  }
}

}  // namespace netdyn
