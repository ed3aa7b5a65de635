#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdlab/equilibrium.hpp"
#include "cdlab/error.hpp"
#include "cdlab/measure.hpp"
#include "json.hpp"

namespace cdlab {

enum class ExperimentKind { szego, algebra, offdiag, heatmap, bm, symbol_distance };

const char* to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(const std::string& name);

struct MeasureSpec {
  std::string kind = "circle";  // circle | interval | arcsine | file
  int node_factor = 4;          // nodes = max(node_factor * k, min_nodes)
  int min_nodes = 256;
  std::string path;             // measure JSON for kind == "file"

  int node_count(int k) const;
  QuadratureMeasure build(int k) const;
};

// Arc selectors take angles in [0, 2pi); interval selectors take Re z.
struct RegionSelector {
  std::string kind = "arc";  // arc | interval
  double lo = 0.0;
  double hi = 0.0;
};

IndexSet resolve_region(const QuadratureMeasure& mu, const RegionSelector& r);

// Accepts plain numbers and pi multiples: "pi", "3pi/2", "0.5pi", "-pi/4".
double parse_angle(const std::string& text);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::szego;
  std::vector<int> k_values;
  MeasureSpec measure_spec;
  // [f, g]; missing entries fall back to per-experiment defaults.
  std::vector<std::string> symbol_specs;
  double p = 2.0;
  std::vector<RegionSelector> regions;  // offdiag: [A, B]
  std::string output_path;
  bool timing = true;       // false writes 0 in the seconds column
  bool export_spectra = false;

  // Throws parse_error on a violated invariant.
  void validate() const;

  std::string symbol_f() const;
  std::string symbol_g() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& c);

struct RateFit {
  double slope;
  double intercept;
  double residual;  // RMS of log-residuals
};

/// Least-squares slope of log(value) against log(k).
RateFit fit_rate(const std::vector<std::pair<double, double>>& series);

struct ReportRow {
  int k = 0;
  std::size_t n_k = 0;
  double quantity = 0.0;
  std::optional<double> limit;  // always from the equilibrium module
  double seconds = 0.0;

  std::optional<double> gap() const;
};

struct Report {
  ExperimentConfig config;
  std::vector<ReportRow> rows;      // ascending k
  std::vector<std::string> header;  // "# key=value" lines
  std::vector<std::string> footer;
  std::optional<RateFit> fit;
};

// Failure while running a sweep; carries the offending k.
class ExperimentFailure : public Error {
public:
  ExperimentFailure(int k, const Error& cause);
  int k() const noexcept { return k_; }
  ErrorKind cause_kind() const noexcept { return cause_; }

private:
  int k_;
  ErrorKind cause_;
};

/// Runs the sweep (k-values in parallel up to CDLAB_THREADS workers) and
/// returns rows in ascending-k order. Does not touch the filesystem unless
/// the experiment exports side files (heatmap, spectra).
Report run_experiment(const ExperimentConfig& config);

void write_report_csv(std::ostream& os, const Report& report);

/// run_experiment + write_report_csv to config.output_path (stdout when
/// empty).
Report run(const ExperimentConfig& config);

std::size_t worker_count();

}  // namespace cdlab
