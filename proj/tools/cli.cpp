#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cdlab/error.hpp"
#include "cdlab/experiments.hpp"

namespace cdlab::cli {

namespace {

struct Flags {
  std::string config_path;
  std::string k_list;
  std::string measure;
  std::string measure_file;
  std::optional<int> node_factor;
  std::optional<int> min_nodes;
  std::string symbol_f;
  std::string symbol_g;
  std::optional<double> p;
  std::string region_kind;
  std::string region_a;
  std::string region_b;
  std::string out;
  bool no_timing = false;
  bool export_spectra = false;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_path, "JSON config mirroring ExperimentConfig");
  sub->add_option("--k", f.k_list, "comma-separated ascending k values");
  sub->add_option("--measure", f.measure, "circle | interval | arcsine | file");
  sub->add_option("--measure-file", f.measure_file, "measure JSON (implies --measure file)");
  sub->add_option("--node-factor", f.node_factor, "nodes = max(factor * k, min-nodes)");
  sub->add_option("--min-nodes", f.min_nodes, "lower bound on quadrature size");
  sub->add_option("--symbol-f", f.symbol_f, "first symbol (registry name)");
  sub->add_option("--symbol-g", f.symbol_g, "second symbol / spectral test function");
  sub->add_option("--p", f.p, "Schatten exponent (>= 1)");
  sub->add_option("--region-kind", f.region_kind, "arc | interval (offdiag)");
  sub->add_option("--region-a", f.region_a, "lo,hi of region A (e.g. 0,pi/2)");
  sub->add_option("--region-b", f.region_b, "lo,hi of region B");
  sub->add_option("--out", f.out, "report CSV path (stdout when omitted)");
  sub->add_flag("--no-timing", f.no_timing, "write 0 in the seconds column");
  sub->add_flag("--export-spectra", f.export_spectra, "szego: write per-k spectrum CSVs");
}

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ks.push_back(k);
    } catch (const std::exception&) {
      fail(ErrorKind::parse_error, "bad k value '" + item + "'");
    }
  }
  return ks;
}

RegionSelector parse_region(const std::string& kind, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    fail(ErrorKind::parse_error, "region must be 'lo,hi', got '" + text + "'");
  return {kind, parse_angle(text.substr(0, comma)), parse_angle(text.substr(comma + 1))};
}

ExperimentConfig build_config(const std::string& experiment, const Flags& f) {
  ExperimentConfig c;
  if (!f.config_path.empty()) {
    std::ifstream is(f.config_path);
    if (!is) fail(ErrorKind::parse_error, "cannot read config '" + f.config_path + "'");
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::parse_error, std::string("config JSON: ") + e.what());
    }
    if (j.is_object() && j.contains("experiment") && j["experiment"] != experiment)
      fail(ErrorKind::parse_error, "config experiment '" + j["experiment"].dump() +
                                       "' does not match subcommand '" + experiment + "'");
    c = config_from_json(j);
  }
  c.experiment = experiment_from_string(experiment);
  if (!f.k_list.empty()) c.k_values = parse_k_list(f.k_list);
  if (!f.measure.empty()) c.measure_spec.kind = f.measure;
  if (!f.measure_file.empty()) {
    c.measure_spec.kind = "file";
    c.measure_spec.path = f.measure_file;
  }
  if (f.node_factor) c.measure_spec.node_factor = *f.node_factor;
  if (f.min_nodes) c.measure_spec.min_nodes = *f.min_nodes;
  if (!f.symbol_f.empty() || !f.symbol_g.empty()) {
    const std::string sf = !f.symbol_f.empty() ? f.symbol_f : c.symbol_f();
    const std::string sg = !f.symbol_g.empty() ? f.symbol_g : c.symbol_g();
    c.symbol_specs = {sf, sg};
  }
  if (f.p) c.p = *f.p;
  if (!f.region_a.empty() || !f.region_b.empty()) {
    if (f.region_a.empty() || f.region_b.empty())
      fail(ErrorKind::parse_error, "--region-a and --region-b go together");
    const std::string kind = !f.region_kind.empty()
                                 ? f.region_kind
                                 : (c.measure_spec.kind == "circle" ? "arc" : "interval");
    c.regions = {parse_region(kind, f.region_a), parse_region(kind, f.region_b)};
  }
  if (!f.out.empty()) c.output_path = f.out;
  if (f.no_timing) c.timing = false;
  if (f.export_spectra) c.export_spectra = true;
  c.validate();
  return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cdlab: Bergman kernel and Toeplitz operator convergence experiments"};
  app.require_subcommand(1);
  Flags flags;
  for (const char* name :
       {"szego", "algebra", "offdiag", "heatmap", "bm", "symbol_distance"})
    add_flags(app.add_subcommand(name, std::string("run the ") + name + " sweep"), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cdlab: " << e.what() << '\n';
    return kExitConfig;
  }

  const std::string experiment = app.get_subcommands().front()->get_name();
  ExperimentConfig config;
  try {
    config = build_config(experiment, flags);
  } catch (const Error& e) {
    err << "cdlab: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    Report report = run_experiment(config);
    if (config.output_path.empty()) {
      write_report_csv(out, report);
    } else {
      std::ofstream os(config.output_path);
      if (!os) {
        err << "cdlab: cannot open output '" << config.output_path << "'\n";
        return kExitConfig;
      }
      write_report_csv(os, report);
    }
  } catch (const ExperimentFailure& e) {
    err << "cdlab: numerical failure at k=" << e.k() << ": " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "cdlab: " << e.what() << '\n';
    return e.kind() == ErrorKind::parse_error ? kExitConfig : kExitNumerical;
  }
  return kExitOk;
}

}  // namespace cdlab::cli
