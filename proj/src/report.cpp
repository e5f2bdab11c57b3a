#include "wsnsim/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <thread>

namespace wsnsim {

std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_hash(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

namespace {

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string();
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double stddev_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

SummaryRow summary_of(const SimResult& result) {
  SummaryRow row;
  row.protocol = protocol_name(result.config.protocol);
  row.n = result.config.n_nodes;
  row.seed = result.config.seed;
  row.deployment_hash = result.deployment_hash;
  row.avg_dissipated_J = result.avg_dissipated_J;
  row.fnd_s = result.fnd_s;
  row.hnd_s = result.hnd_s;
  row.lnd_s = result.lnd_s;
  row.rounds_run = result.rounds_run;
  return row;
}

void write_rounds_csv(std::ostream& os, const SimResult& result) {
  os << kRoundsHeader << '\n';
  const std::string protocol = protocol_name(result.config.protocol);
  for (const RoundReport& r : result.rounds) {
    os << protocol << ',' << result.config.n_nodes << ',' << result.config.seed << ','
       << r.round_index << ',' << fmt_double(r.time_start) << ',' << r.alive_count << ','
       << r.unreachable_count << ',' << r.ch_count << ','
       << fmt_double(r.energy_dissipated_this_round) << ',' << fmt_double(r.total_residual)
       << '\n';
  }
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << kSummaryHeader << '\n';
  for (const SummaryRow& r : rows) {
    os << r.protocol << ',' << r.n << ',' << r.seed << ',' << fmt_hash(r.deployment_hash) << ','
       << fmt_double(r.avg_dissipated_J) << ',' << fmt_opt(r.fnd_s) << ',' << fmt_opt(r.hnd_s)
       << ',' << fmt_opt(r.lnd_s) << ',' << r.rounds_run << '\n';
  }
}

std::vector<std::uint64_t> SweepSpec::seeds() const {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(seed_count));
  for (int i = 0; i < seed_count; ++i) {
    out.push_back(mix_seed(master_seed, kSweepStream + static_cast<std::uint64_t>(i)));
  }
  return out;
}

void SweepSpec::validate() const {
  if (node_counts.empty()) throw ConfigError("sweep.node_counts", "must not be empty");
  if (protocols.empty()) throw ConfigError("sweep.protocols", "must not be empty");
  if (seed_count < 1) throw ConfigError("sweep.seed_count", "must be at least 1");
  for (int n : node_counts) {
    if (n < 2) throw ConfigError("sweep.node_counts", "every count must be at least 2");
  }
}

SweepResult run_sweep(const SweepSpec& spec, int jobs) {
  spec.validate();
  spec.base.validate();
  const std::vector<std::uint64_t> seeds = spec.seeds();

  SweepResult sweep;
  sweep.spec = spec;
  for (Protocol protocol : spec.protocols) {
    for (int n : spec.node_counts) {
      for (std::uint64_t seed : seeds) {
        CellResult cell;
        cell.protocol = protocol;
        cell.n = n;
        cell.seed = seed;
        sweep.cells.push_back(cell);
      }
    }
  }

  auto run_cell = [&spec](CellResult& cell) {
    SimConfig cfg = spec.base;
    cfg.protocol = cell.protocol;
    cfg.n_nodes = cell.n;
    cfg.seed = cell.seed;
    cfg.run_until = RunUntil::TimeCap;
    cell.energy_run = run_simulation(cfg);
    cfg.run_until = RunUntil::AllDead;
    cell.lifetime_run = run_simulation(cfg);
    assert(cell.energy_run.deployment_hash == cell.lifetime_run.deployment_hash);
  };

  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(sweep.cells.size()));

  if (jobs <= 1) {
    for (CellResult& cell : sweep.cells) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= sweep.cells.size()) break;
          run_cell(sweep.cells[i]);
        }
      });
    }
    for (std::thread& w : workers) w.join();
  }
  return sweep;
}

std::vector<SummaryRow> sweep_summary_rows(const SweepResult& sweep) {
  std::vector<SummaryRow> rows;
  rows.reserve(sweep.cells.size());
  for (const CellResult& cell : sweep.cells) {
    // energy metric from the capped run, lifetime marks from the full run
    SummaryRow row = summary_of(cell.lifetime_run);
    row.avg_dissipated_J = cell.energy_run.avg_dissipated_J;
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::vector<FigRow> aggregate(const SweepResult& sweep,
                              double (*metric)(const CellResult&), bool skip_nan) {
  // (n, protocol-order) -> samples over seeds
  std::map<std::pair<int, int>, std::vector<double>> groups;
  std::map<int, Protocol> order;
  for (std::size_t p = 0; p < sweep.spec.protocols.size(); ++p) {
    order[static_cast<int>(p)] = sweep.spec.protocols[p];
  }
  auto proto_index = [&sweep](Protocol pr) {
    for (std::size_t p = 0; p < sweep.spec.protocols.size(); ++p) {
      if (sweep.spec.protocols[p] == pr) return static_cast<int>(p);
    }
    return 0;
  };
  for (const CellResult& cell : sweep.cells) {
    const double v = metric(cell);
    if (skip_nan && std::isnan(v)) continue;
    groups[{cell.n, proto_index(cell.protocol)}].push_back(v);
  }
  std::vector<FigRow> rows;
  for (const auto& [key, xs] : groups) {
    FigRow row;
    row.n = key.first;
    row.protocol = protocol_name(order[key.second]);
    row.mean = mean_of(xs);
    row.stddev = stddev_of(xs);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<FigRow> fig1_rows(const SweepResult& sweep) {
  return aggregate(
      sweep, [](const CellResult& c) { return c.energy_run.avg_dissipated_J; }, false);
}

std::vector<FigRow> fig2_rows(const SweepResult& sweep) {
  return aggregate(
      sweep,
      [](const CellResult& c) {
        return c.lifetime_run.fnd_s ? *c.lifetime_run.fnd_s
                                    : std::numeric_limits<double>::quiet_NaN();
      },
      true);
}

void write_fig_csv(std::ostream& os, const char* header, const std::vector<FigRow>& rows) {
  os << header << '\n';
  for (const FigRow& r : rows) {
    os << r.n << ',' << r.protocol << ',' << fmt_double(r.mean) << ',' << fmt_double(r.stddev)
       << '\n';
  }
}

void write_fig_svg(std::ostream& os, const std::string& title, const std::string& y_label,
                   const std::vector<FigRow>& rows) {
  const double width = 720, height = 480;
  const double ml = 90, mr = 170, mt = 50, mb = 70;
  const double plot_w = width - ml - mr, plot_h = height - mt - mb;

  int x_min = rows.empty() ? 0 : rows.front().n, x_max = x_min;
  double y_max = 0.0;
  std::map<std::string, std::vector<std::pair<int, double>>> series;
  for (const FigRow& r : rows) {
    x_min = std::min(x_min, r.n);
    x_max = std::max(x_max, r.n);
    y_max = std::max(y_max, r.mean);
    series[r.protocol].emplace_back(r.n, r.mean);
  }
  if (x_max == x_min) x_max = x_min + 1;
  if (y_max <= 0.0) y_max = 1.0;
  y_max *= 1.05;

  auto sx = [&](double n) { return ml + (n - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double v) { return mt + plot_h - v / y_max * plot_h; };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";
  os << "  <text x=\"" << ml + plot_w / 2 << "\" y=\"" << mt - 20
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" << title
     << "</text>\n";

  // axes
  os << "  <line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
     << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + plot_h
     << "\" stroke=\"black\"/>\n";
  os << "  <text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 15
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">nodes</text>\n";
  os << "  <text x=\"20\" y=\"" << mt + plot_h / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        "transform=\"rotate(-90 20 "
     << mt + plot_h / 2 << ")\">" << y_label << "</text>\n";

  // x ticks at every node count present
  std::map<int, bool> xticks;
  for (const FigRow& r : rows) xticks[r.n] = true;
  for (const auto& [n, _] : xticks) {
    const double x = sx(n);
    os << "  <line x1=\"" << x << "\" y1=\"" << mt + plot_h << "\" x2=\"" << x << "\" y2=\""
       << mt + plot_h + 5 << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << x << "\" y=\"" << mt + plot_h + 22
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << n
       << "</text>\n";
  }
  // five y ticks
  for (int i = 0; i <= 4; ++i) {
    const double v = y_max * i / 4.0;
    const double y = sy(v);
    os << "  <line x1=\"" << ml - 5 << "\" y1=\"" << y << "\" x2=\"" << ml << "\" y2=\"" << y
       << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << ml - 9 << "\" y=\"" << y + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt_double(std::round(v * 1e4) / 1e4) << "</text>\n";
  }

  int color = 0;
  for (const auto& [name, pts] : series) {
    os << "  <polyline fill=\"none\" stroke=\"" << palette[color % 4]
       << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) os << ' ';
      os << fmt_double(sx(pts[i].first)) << ',' << fmt_double(sy(pts[i].second));
    }
    os << "\"/>\n";
    const double ly = mt + 20 + 22 * color;
    os << "  <line x1=\"" << ml + plot_w + 14 << "\" y1=\"" << ly << "\" x2=\""
       << ml + plot_w + 44 << "\" y2=\"" << ly << "\" stroke=\"" << palette[color % 4]
       << "\" stroke-width=\"2\"/>\n";
    os << "  <text x=\"" << ml + plot_w + 50 << "\" y=\"" << ly + 4
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << name << "</text>\n";
    ++color;
  }
  os << "</svg>\n";
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os.imbue(std::locale::classic());
  return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
  os.flush();
  if (!os.good()) throw IoError("failed while writing " + path.string());
}

}  // namespace

void write_run_outputs(const SimResult& result, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());

  {
    const auto path = dir / "rounds.csv";
    auto os = open_out(path);
    write_rounds_csv(os, result);
    finish(os, path);
  }
  {
    const auto path = dir / "summary.csv";
    auto os = open_out(path);
    write_summary_csv(os, {summary_of(result)});
    finish(os, path);
  }
}

void write_sweep_outputs(const SweepResult& sweep, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());

  {
    const auto path = dir / "summary.csv";
    auto os = open_out(path);
    write_summary_csv(os, sweep_summary_rows(sweep));
    finish(os, path);
  }
  const std::vector<FigRow> f1 = fig1_rows(sweep);
  const std::vector<FigRow> f2 = fig2_rows(sweep);
  {
    const auto path = dir / "fig1.csv";
    auto os = open_out(path);
    write_fig_csv(os, kFig1Header, f1);
    finish(os, path);
  }
  {
    const auto path = dir / "fig2.csv";
    auto os = open_out(path);
    write_fig_csv(os, kFig2Header, f2);
    finish(os, path);
  }
  {
    const auto path = dir / "fig1.svg";
    auto os = open_out(path);
    write_fig_svg(os, "Average dissipated energy per node", "energy (J)", f1);
    finish(os, path);
  }
  {
    const auto path = dir / "fig2.svg";
    auto os = open_out(path);
    write_fig_svg(os, "Network lifetime (first node death)", "time (s)", f2);
    finish(os, path);
  }
}

}  // namespace wsnsim
