#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "netdyn/differential.hpp"
#include "netdyn/error.hpp"
#include "netdyn/events.hpp"
#include "netdyn/series_io.hpp"
#include "netdyn/snapshot_io.hpp"
#include "netdyn/svg.hpp"

namespace netdyn::cli {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.push_back(trim(text.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view token, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw SpecError(std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

EventLog load_log(const fs::path& path, bool skip_bad_lines, std::ostream& warn) {
  auto in = open_input(path);
  try {
    EventLog log = read_event_log(in, {skip_bad_lines});
    if (log.self_loops_dropped > 0) {
      warn << "warning: dropped " << log.self_loops_dropped << " self-loop events\n";
    }
    if (log.bad_lines_skipped > 0) {
      warn << "warning: skipped " << log.bad_lines_skipped << " malformed lines\n";
    }
    return log;
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

SliceResult slice_log(EventLog log, const WindowSpec& spec, std::ostream& warn) {
  SliceResult slices = slice_windows(std::move(log.events), spec);
  if (slices.dropped_before_origin > 0) {
    warn << "warning: dropped " << slices.dropped_before_origin
         << " events before the window origin\n";
  }
  if (slices.dropped_trailing > 0) {
    warn << "warning: dropped " << slices.dropped_trailing
         << " trailing events outside the last complete window\n";
  }
  return slices;
}

std::string windows_manifest(const SliceResult& slices,
                             const std::vector<GraphSnapshot>& snapshots) {
  std::ostringstream out;
  out << "# index start end nodes edges\n";
  for (std::size_t i = 0; i < slices.windows.size(); ++i) {
    const auto& w = slices.windows[i];
    out << w.index << ' ' << w.start << ' ' << w.end << ' '
        << snapshots[i].nodes().size() << ' ' << snapshots[i].edges().size() << '\n';
  }
  return out.str();
}

std::string two_digits(int index) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02d", index);
  return buf;
}

void write_all(const std::map<fs::path, std::string>& files) {
  for (const auto& [path, text] : files) write_file_atomic(path, text);
}

}  // namespace

CombinationSelection parse_combinations(const std::string& text) {
  CombinationSelection sel;
  for (auto token : split(text, ',')) {
    if (token == "all") {
      for (int i = 1; i <= static_cast<int>(kCombinationCount); ++i) {
        sel.indices.push_back(i);
      }
    } else if (token.find(':') != std::string_view::npos) {
      const auto parts = split(token, ':');
      if (parts.size() != 5) {
        throw SpecError("coefficient vector '" + std::string(token) +
                        "' needs 5 components");
      }
      std::array<double, 5> v{};
      for (std::size_t i = 0; i < 5; ++i) v[i] = parse_number<double>(parts[i], "coefficient");
      sel.custom.emplace_back(v[0], v[1], v[2], v[3], v[4]);
    } else {
      const int index = parse_number<int>(token, "combination index");
      combination(index);  // range check
      sel.indices.push_back(index);
    }
  }
  std::ranges::sort(sel.indices);
  const auto dups = std::ranges::unique(sel.indices);
  sel.indices.erase(dups.begin(), dups.end());
  if (sel.indices.empty() && sel.custom.empty()) {
    throw SpecError("no combinations selected");
  }
  return sel;
}

void write_file_atomic(const fs::path& path, const std::string& text) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw Error("failed writing " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

void cmd_synth(const SynthSpec& spec, const fs::path& output, std::ostream& out) {
  const auto events = generate_log(spec);
  std::ostringstream text;
  text << "# sender,recipient,unix_seconds\n";
  write_event_log(text, events);
  write_file_atomic(output, text.str());

  out << "events: " << events.size() << '\n';
  if (!events.empty()) {
    out << "span: " << events.front().timestamp << " .. " << events.back().timestamp
        << " (" << spec.span_days << " days)\n";
  }
}

void cmd_run(const RunConfig& config, std::ostream& out, std::ostream& warn) {
  config.windows.validate();
  const auto slices =
      slice_log(load_log(config.input, config.skip_bad_lines, warn), config.windows, warn);
  if (slices.windows.size() < 2) {
    throw Error("need at least 2 complete windows, got " +
                std::to_string(slices.windows.size()));
  }
  const auto snapshots = build_snapshots(slices);
  const auto diffs = consecutive_diffs(snapshots);

  std::vector<std::pair<std::string, MeasureSeries>> series;
  for (int index : config.combinations.indices) {
    series.emplace_back("_c" + two_digits(index),
                        measure_series(diffs, combination(index), index));
  }
  for (std::size_t i = 0; i < config.combinations.custom.size(); ++i) {
    series.emplace_back("_custom" + std::to_string(i + 1),
                        measure_series(diffs, config.combinations.custom[i]));
  }

  std::map<fs::path, std::string> files;
  files[config.output_dir / "windows.txt"] = windows_manifest(slices, snapshots);
  for (const auto& [suffix, s] : series) {
    const MeasureSeries normalized = normalize_series(s);
    std::ostringstream csv;
    const MeasureSeries& exported = config.normalized_csv ? normalized : s;
    write_series_csv(csv, std::span(&exported, 1));
    files[config.output_dir / (config.prefix + suffix + ".csv")] = csv.str();

    if (!config.emit_svg) continue;
    const std::array<std::pair<const char*, double MeasurePoint::*>, 4> measures = {{
        {"sum", &MeasurePoint::sum},
        {"normalized_sum", &MeasurePoint::normalized_sum},
        {"relative_sum", &MeasurePoint::relative_sum},
        {"edge_modification", &MeasurePoint::edge_modification},
    }};
    for (const auto& [name, field] : measures) {
      std::vector<double> values;
      for (const auto& p : normalized.points) values.push_back(p.*field);
      std::ostringstream svg;
      write_line_chart_svg(svg, config.prefix + suffix + " " + name + " (normalized)",
                           values);
      files[config.output_dir / (config.prefix + suffix + "_" + name + ".svg")] = svg.str();
    }
  }

  fs::create_directories(config.output_dir);
  write_all(files);
  out << "windows: " << slices.windows.size() << '\n'
      << "pairs: " << diffs.size() << '\n'
      << "series: " << series.size() << '\n';
}

void cmd_diff(const fs::path& a, const fs::path& b, std::ostream& out) {
  const auto load = [](const fs::path& path) {
    auto in = open_input(path);
    try {
      return read_snapshot(in);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), path.string() + ": " + e.what());
    }
  };
  const GraphSnapshot first = load(a);
  const GraphSnapshot second = load(b);
  const auto t = diff(first, second);

  out << "[new nodes] V+ " << t.added_nodes.size() << '\n';
  for (const auto& n : t.added_nodes) out << n.str() << '\n';
  out << "[departed nodes] V- " << t.removed_nodes.size() << '\n';
  for (const auto& n : t.removed_nodes) out << n.str() << '\n';
  out << "[new connections] E+ " << t.added_edges.size() << '\n';
  for (const auto& e : t.added_edges) out << e.from.str() << ' ' << e.to.str() << '\n';
  out << "[lost connections] E- " << t.removed_edges.size() << '\n';
  for (const auto& e : t.removed_edges) out << e.from.str() << ' ' << e.to.str() << '\n';
  out << "[changed strength] E^delta " << t.modified_weights.size() << '\n';
  char buf[32];
  for (const auto& m : t.modified_weights) {
    std::snprintf(buf, sizeof buf, "%+.9f", m.delta);
    out << m.from.str() << ' ' << m.to.str() << ' ' << buf << '\n';
  }

  const auto ones = CoefficientVector::ones();
  const auto guarded = [&](auto&& f) -> std::string {
    try {
      return format_real(f());
    } catch (const DegenerateInputError&) {
      return "undefined";
    }
  };
  out << "[measures] coefficients 1,1,1,1,1\n"
      << "sum " << format_real(sum_distance(t, ones)) << '\n'
      << "normalized_sum " << guarded([&] { return normalized_sum(t, ones); }) << '\n'
      << "relative_sum " << guarded([&] { return relative_sum(t, ones); }) << '\n'
      << "edge_modification " << format_real(edge_modification(t)) << '\n';
}

void cmd_slice(const fs::path& input, const WindowSpec& windows,
               const fs::path& output_dir, bool skip_bad_lines, std::ostream& out,
               std::ostream& warn) {
  windows.validate();
  const auto slices = slice_log(load_log(input, skip_bad_lines, warn), windows, warn);
  const auto snapshots = build_snapshots(slices);

  std::map<fs::path, std::string> files;
  files[output_dir / "windows.txt"] = windows_manifest(slices, snapshots);
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "window_%03zu.snap", slices.windows[i].index);
    std::ostringstream text;
    write_snapshot(text, snapshots[i]);
    files[output_dir / name] = text.str();
  }
  fs::create_directories(output_dir);
  write_all(files);
  out << "windows: " << snapshots.size() << '\n';
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "netdyn: graph differential tuples and distance measures over "
      "time-windowed communication networks.\n\n"
      "Event log: one '<sender>,<recipient>,<unix_seconds>' per line, '#' "
      "comments.\n"
      "Snapshot: '# nodes: <n> edges: <m>', then 'N <id>' lines, then "
      "'E <from> <to> <weight>' lines."};
  app.require_subcommand(1);

  SynthSpec spec;
  fs::path synth_out;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic bursty event log");
  synth->add_option("--nodes", spec.node_count, "Number of nodes (>= 2)")->capture_default_str();
  synth->add_option("--days", spec.span_days, "Span of the log in days")->capture_default_str();
  synth->add_option("--alpha", spec.alpha, "Interevent exponent, in (1.5, 2.5)")->capture_default_str();
  synth->add_option("--min-gap", spec.min_gap_seconds, "Smallest interevent gap in seconds")
      ->capture_default_str();
  synth->add_option("--seed", spec.seed, "RNG seed (mt19937_64)")->capture_default_str();
  synth->add_option("-o,--output", synth_out, "Output event log")->required();

  RunConfig run_config;
  std::string combinations_text = "7,31";
  std::optional<std::int64_t> origin;
  const auto add_window_flags = [&](CLI::App* cmd) {
    cmd->add_option("--window", run_config.windows.window_days, "Window length in days")
        ->capture_default_str();
    cmd->add_option("--step", run_config.windows.step_days, "Window step in days")
        ->capture_default_str();
    cmd->add_option("--origin", origin, "First window start (unix seconds)");
    cmd->add_flag("--skip-bad-lines", run_config.skip_bad_lines,
                  "Skip and count malformed log lines");
  };

  auto* run = app.add_subcommand("run", "Slice, diff and measure an event log");
  run->add_option("input", run_config.input, "Event log")->required();
  add_window_flags(run);
  run->add_option("--combinations", combinations_text,
                  "'all', indices 1..31, or a:b:c:d:e vectors, comma separated")
      ->capture_default_str();
  run->add_option("-o,--output-dir", run_config.output_dir, "Output directory")->required();
  run->add_option("--prefix", run_config.prefix, "Output file prefix")->capture_default_str();
  run->add_flag("--svg", run_config.emit_svg, "Also write normalized SVG line charts");
  run->add_flag("--normalized", run_config.normalized_csv,
                "Write max-normalized values to the CSVs");

  fs::path diff_a, diff_b;
  auto* diff_cmd = app.add_subcommand("diff", "Differential tuple of two snapshot files");
  diff_cmd->add_option("first", diff_a, "Earlier snapshot")->required();
  diff_cmd->add_option("second", diff_b, "Later snapshot")->required();

  fs::path slice_dir;
  auto* slice = app.add_subcommand("slice", "Write one snapshot file per window");
  slice->add_option("input", run_config.input, "Event log")->required();
  add_window_flags(slice);
  slice->add_option("-o,--output-dir", slice_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    run_config.windows.origin = origin;
    if (synth->parsed()) {
      cmd_synth(spec, synth_out, out);
    } else if (run->parsed()) {
      run_config.combinations = parse_combinations(combinations_text);
      cmd_run(run_config, out, err);
    } else if (diff_cmd->parsed()) {
      cmd_diff(diff_a, diff_b, out);
    } else if (slice->parsed()) {
      cmd_slice(run_config.input, run_config.windows, slice_dir,
                run_config.skip_bad_lines, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace netdyn::cli
