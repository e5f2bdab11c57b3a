#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "wsnsim/engine.hpp"

namespace wsnsim {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal form, '.' separator, locale-free.
std::string fmt_double(double v);
std::string fmt_hash(std::uint64_t h);  // 16 hex digits

inline constexpr const char* kRoundsHeader =
    "protocol,n,seed,round,time_s,alive,unreachable,ch_count,round_dissipated_J,total_residual_J";
inline constexpr const char* kSummaryHeader =
    "protocol,n,seed,deployment_hash,avg_dissipated_J,fnd_s,hnd_s,lnd_s,rounds_run";
inline constexpr const char* kFig1Header = "n,protocol,mean_avg_dissipated_J,stddev";
inline constexpr const char* kFig2Header = "n,protocol,mean_fnd_s,stddev";

struct SummaryRow {
  std::string protocol;
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t deployment_hash = 0;
  double avg_dissipated_J = 0.0;
  std::optional<double> fnd_s;
  std::optional<double> hnd_s;
  std::optional<double> lnd_s;
  int rounds_run = 0;
};

SummaryRow summary_of(const SimResult& result);

void write_rounds_csv(std::ostream& os, const SimResult& result);
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

// Experiment matrix. Every cell inherits `base`; protocol, node count, seed
// and the run-until mode are overridden per run.
struct SweepSpec {
  std::vector<int> node_counts{50, 100, 150, 200, 250, 300, 350, 400};
  std::vector<Protocol> protocols{Protocol::Lmeec, Protocol::Leach};
  std::uint64_t master_seed = 1;
  int seed_count = 5;
  SimConfig base;

  std::vector<std::uint64_t> seeds() const;
  void validate() const;
};

// Each cell runs twice on one deployment: a time-capped run for the energy
// metric and an until-all-dead run for the lifetime marks.
struct CellResult {
  Protocol protocol = Protocol::Lmeec;
  int n = 0;
  std::uint64_t seed = 0;
  SimResult energy_run;
  SimResult lifetime_run;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<CellResult> cells;
};

SweepResult run_sweep(const SweepSpec& spec, int jobs = 0);

std::vector<SummaryRow> sweep_summary_rows(const SweepResult& sweep);

struct FigRow {
  int n = 0;
  std::string protocol;
  double mean = 0.0;
  double stddev = 0.0;
};

std::vector<FigRow> fig1_rows(const SweepResult& sweep);  // mean avg dissipated energy
std::vector<FigRow> fig2_rows(const SweepResult& sweep);  // mean first-node-death time

void write_fig_csv(std::ostream& os, const char* header, const std::vector<FigRow>& rows);
void write_fig_svg(std::ostream& os, const std::string& title, const std::string& y_label,
                   const std::vector<FigRow>& rows);

// rounds.csv + summary.csv for a single run.
void write_run_outputs(const SimResult& result, const std::string& out_dir);
// summary.csv, fig1/fig2 csv + svg for a sweep.
void write_sweep_outputs(const SweepResult& sweep, const std::string& out_dir);

}  // namespace wsnsim
