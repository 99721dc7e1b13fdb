#include "netdyn/synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "netdyn/error.hpp"

namespace netdyn {

void SynthSpec::validate() const {
  if (node_count < 2) throw SpecError("node count must be at least 2");
  if (span_days < 1) throw SpecError("span must be at least 1 day");
  if (!(alpha > 1.5 && alpha < 2.5)) {
    throw SpecError("alpha " + std::to_string(alpha) +
                    " outside the open interval (1.5, 2.5)");
  }
  if (min_gap_seconds < 1) throw SpecError("minimum gap must be at least 1 second");
}

namespace {

// std::mt19937_64's output sequence is fixed by the standard; the
// std:: distributions are not, so uniforms are derived here directly.
__extension__ using uint128 = unsigned __int128;

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on (0, 1], 53-bit resolution.
  double unit() { return static_cast<double>((engine_() >> 11) + 1) * 0x1p-53; }

  // Uniform on [0, bound), Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound) {
    uint128 m = static_cast<uint128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<uint128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::string synth_node_label(int index, int node_count) {
  const auto width = std::to_string(node_count - 1).size();
  std::string digits = std::to_string(index);
  return "n" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

std::vector<EventRecord> generate_log(const SynthSpec& spec) {
  spec.validate();
  PortableRng rng(spec.seed);

  std::vector<NodeId> labels;
  labels.reserve(static_cast<std::size_t>(spec.node_count));
  for (int i = 0; i < spec.node_count; ++i) {
    labels.emplace_back(synth_node_label(i, spec.node_count));
  }

  const double span = static_cast<double>(spec.span_days) * kSecondsPerDay;
  const double min_gap = static_cast<double>(spec.min_gap_seconds);
  const double tail = -1.0 / (spec.alpha - 1.0);
  const auto draw_gap = [&] { return min_gap * std::pow(rng.unit(), tail); };
  const auto others = static_cast<std::uint64_t>(spec.node_count - 1);

  std::vector<EventRecord> events;
  for (int sender = 0; sender < spec.node_count; ++sender) {
    // Start each sender part-way into its first gap.
    double t = draw_gap() * (1.0 - rng.unit());
    while (t < span) {
      auto recipient = static_cast<int>(rng.below(others));
      if (recipient >= sender) ++recipient;
      events.push_back({labels[static_cast<std::size_t>(sender)],
                        labels[static_cast<std::size_t>(recipient)],
                        static_cast<std::int64_t>(std::floor(t))});
      t += draw_gap();
    }
  }
  std::ranges::stable_sort(events, {}, &EventRecord::timestamp);
  return events;
}

std::vector<double> sender_gaps(std::span<const EventRecord> events) {
  std::map<NodeId, std::vector<std::int64_t>> times;
  for (const auto& e : events) times[e.sender].push_back(e.timestamp);
  std::vector<double> gaps;
  for (const auto& [sender, ts] : times) {
    for (std::size_t i = 1; i < ts.size(); ++i) {
      gaps.push_back(static_cast<double>(ts[i] - ts[i - 1]));
    }
  }
  return gaps;
}

double fit_truncated_power_law(std::span<const double> samples, double lower,
                               double upper) {
  if (!(lower > 0.0 && upper > lower)) {
    throw Error("power-law fit needs 0 < lower < upper");
  }
  double log_sum = 0.0;
  std::size_t n = 0;
  for (double x : samples) {
    if (x >= lower && x <= upper) {
      log_sum += std::log(x / lower);
      ++n;
    }
  }
  if (n < 2) throw Error("power-law fit needs at least 2 samples in range");
  const double mean_log = log_sum / static_cast<double>(n);

  if (std::isinf(upper)) return 1.0 + 1.0 / mean_log;  // Hill estimator

  // Score of the log-likelihood in theta = alpha - 1 for the density
  // proportional to x^-(theta + 1) on [lower, upper]. It is decreasing in
  // theta, so bisection finds the unique root.
  const double log_ratio = std::log(upper / lower);
  const auto score = [&](double theta) {
    if (std::fabs(theta) < 1e-12) return log_ratio / 2.0 - mean_log;
    return 1.0 / theta - mean_log - log_ratio / std::expm1(theta * log_ratio);
  };
  double lo = -50.0;
  double hi = 50.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (score(mid) > 0.0 ? lo : hi) = mid;
  }
  return 1.0 + 0.5 * (lo + hi);
}

}  // namespace netdyn
