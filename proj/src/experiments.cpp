#include "cdlab/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <thread>

#include "cdlab/basis.hpp"
#include "cdlab/io.hpp"
#include "cdlab/kernel.hpp"
#include "cdlab/operator.hpp"
#include "cdlab/summation.hpp"
#include "cdlab/symbols.hpp"

namespace cdlab {

using nlohmann::json;

namespace {

constexpr double kRegionTol = 1e-12;

struct Names {
  ExperimentKind kind;
  const char* name;
};

constexpr Names kExperimentNames[] = {
    {ExperimentKind::szego, "szego"},
    {ExperimentKind::algebra, "algebra"},
    {ExperimentKind::offdiag, "offdiag"},
    {ExperimentKind::heatmap, "heatmap"},
    {ExperimentKind::bm, "bm"},
    {ExperimentKind::symbol_distance, "symbol_distance"},
};

std::string default_symbol_f(ExperimentKind kind) {
  return kind == ExperimentKind::heatmap ? "x2" : "cos";
}

std::string default_symbol_g(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::szego: return "x2";
    case ExperimentKind::algebra: return "cos";
    case ExperimentKind::symbol_distance: return "zero";
    default: return "one";
  }
}

std::vector<RegionSelector> default_regions(const std::string& measure_kind) {
  if (measure_kind == "circle")
    return {{"arc", 0.0, std::numbers::pi / 2},
            {"arc", std::numbers::pi, 1.5 * std::numbers::pi}};
  return {{"interval", -0.9, -0.3}, {"interval", 0.3, 0.9}};
}

std::optional<EquilibriumMeasure> maybe_equilibrium(const QuadratureMeasure& mu) {
  if (mu.support_tag() == SupportTag::custom) return std::nullopt;
  return equilibrium_for(mu);
}

std::filesystem::path side_file(const ExperimentConfig& c, int k,
                                const std::string& what) {
  std::filesystem::path out =
      c.output_path.empty() ? std::filesystem::path("cdlab_" + std::string(to_string(c.experiment)))
                            : std::filesystem::path(c.output_path);
  const std::string name = out.stem().string() + "_k" + std::to_string(k) + "_" + what + ".csv";
  return out.parent_path() / name;
}

void write_side_file(const std::filesystem::path& path,
                     const std::function<void(std::ostream&)>& body) {
  std::ofstream os(path);
  if (!os) fail(ErrorKind::invalid_argument, "cannot open " + path.string());
  body(os);
}

ReportRow run_single(const ExperimentConfig& c, int k) {
  const auto start = std::chrono::steady_clock::now();
  const QuadratureMeasure mu = c.measure_spec.build(k);
  const WeightedSpace space(k - 1, k);
  const OrthonormalBasis basis = orthonormalize(mu, space);
  const SymbolDesc f = make_symbol(c.symbol_f());
  const SymbolDesc g = make_symbol(c.symbol_g());
  const auto eq = maybe_equilibrium(mu);
  const ExportTags tags{k, f.name, c.measure_spec.kind};

  ReportRow row;
  row.k = k;
  row.n_k = basis.dimension();

  switch (c.experiment) {
    case ExperimentKind::szego: {
      const ToeplitzMatrix t = toeplitz(basis, mu, f);
      row.quantity = spectral_statistic(t, as_real_function(g));
      if (eq) row.limit = integrate(*eq, compose_outer(as_real_function(g), g.name, f).fn);
      if (c.export_spectra)
        write_side_file(side_file(c, k, "spectrum"),
                        [&](std::ostream& os) { write_spectrum_csv(os, spectrum(t), tags); });
      break;
    }
    case ExperimentKind::algebra:
      row.quantity = algebra_defect(basis, mu, f, g, c.p);
      break;
    case ExperimentKind::offdiag: {
      const auto regions =
          c.regions.empty() ? default_regions(c.measure_spec.kind) : c.regions;
      const KernelTable table = kernel_table(basis, mu);
      row.quantity = bergman_mass(table, mu, resolve_region(mu, regions[0]),
                                  resolve_region(mu, regions[1]));
      break;
    }
    case ExperimentKind::heatmap: {
      const KernelTable table = kernel_table(basis, mu);
      const std::vector<double> density = diagonal_density(table, mu);
      std::vector<double> terms(mu.size());
      for (std::size_t a = 0; a < mu.size(); ++a) terms[a] = f.fn(mu.nodes()[a]) * density[a];
      row.quantity = pairwise_sum(std::span<const double>(terms));
      if (eq) row.limit = integrate(*eq, f.fn);
      const ExportTags ktags{k, "-", c.measure_spec.kind};
      write_side_file(side_file(c, k, "kernel"),
                      [&](std::ostream& os) { write_kernel_csv(os, table, ktags); });
      write_side_file(side_file(c, k, "density"),
                      [&](std::ostream& os) { write_density_csv(os, table, mu, ktags); });
      break;
    }
    case ExperimentKind::bm:
      row.quantity = std::log(bm_constant(basis, default_bm_grid(mu))) / k;
      break;
    case ExperimentKind::symbol_distance: {
      row.quantity = symbol_distance(basis, mu, f, g);
      if (eq) {
        const SymbolDesc diff = difference(f, g);
        row.limit = integrate(*eq, [fn = diff.fn](Complex z) { return std::abs(fn(z)); });
      }
      break;
    }
  }
  if (c.timing)
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::optional<RateFit> try_fit(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 3) return std::nullopt;
  for (const auto& [k, v] : series)
    if (!(v > 0.0)) return std::nullopt;
  return fit_rate(series);
}

double json_angle(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_angle(v.get<std::string>());
  fail(ErrorKind::parse_error, "region bound must be a number or string");
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  for (const auto& n : kExperimentNames)
    if (n.kind == kind) return n.name;
  return "unknown";
}

ExperimentKind experiment_from_string(const std::string& name) {
  for (const auto& n : kExperimentNames)
    if (name == n.name) return n.kind;
  fail(ErrorKind::parse_error, "unknown experiment '" + name + "'");
}

int MeasureSpec::node_count(int k) const {
  return std::max(node_factor * k, min_nodes);
}

QuadratureMeasure MeasureSpec::build(int k) const {
  const int m = node_count(k);
  if (kind == "circle") return circle_lebesgue(m);
  if (kind == "interval") return interval_lebesgue(m);
  if (kind == "arcsine") return arcsine(m);
  if (kind == "file") {
    std::ifstream is(path);
    if (!is) fail(ErrorKind::parse_error, "cannot read measure file '" + path + "'");
    json j;
    try {
      is >> j;
    } catch (const json::exception& e) {
      fail(ErrorKind::parse_error, std::string("measure file: ") + e.what());
    }
    return measure_from_json(j);
  }
  fail(ErrorKind::parse_error, "unknown measure kind '" + kind + "'");
}

double parse_angle(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  const auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::parse_error, "bad angle '" + raw + "'");
    }
  };
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return num(text);
  std::string coef = text.substr(0, pos);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double value = std::numbers::pi;
  if (coef == "-") value = -value;
  else if (!coef.empty() && coef != "+") value *= num(coef);
  const std::string rest = text.substr(pos + 2);
  if (!rest.empty()) {
    if (rest[0] != '/') fail(ErrorKind::parse_error, "bad angle '" + raw + "'");
    const double den = num(rest.substr(1));
    if (den == 0.0) fail(ErrorKind::parse_error, "bad angle '" + raw + "'");
    value /= den;
  }
  return value;
}

IndexSet resolve_region(const QuadratureMeasure& mu, const RegionSelector& r) {
  IndexSet out;
  for (std::size_t a = 0; a < mu.size(); ++a) {
    const Complex z = mu.nodes()[a];
    bool in = false;
    if (r.kind == "arc") {
      double theta = std::arg(z);
      if (theta < 0.0) theta += 2.0 * std::numbers::pi;
      for (double t : {theta, theta + 2.0 * std::numbers::pi})
        in = in || (t >= r.lo - kRegionTol && t <= r.hi + kRegionTol);
    } else if (r.kind == "interval") {
      in = z.real() >= r.lo - kRegionTol && z.real() <= r.hi + kRegionTol;
    } else {
      fail(ErrorKind::parse_error, "unknown region kind '" + r.kind + "'");
    }
    if (in) out.push_back(a);
  }
  return out;
}

std::string ExperimentConfig::symbol_f() const {
  return !symbol_specs.empty() ? symbol_specs[0] : default_symbol_f(experiment);
}

std::string ExperimentConfig::symbol_g() const {
  return symbol_specs.size() > 1 ? symbol_specs[1] : default_symbol_g(experiment);
}

void ExperimentConfig::validate() const {
  if (k_values.empty()) fail(ErrorKind::parse_error, "k_values must be nonempty");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] < 1) fail(ErrorKind::parse_error, "k_values must be positive");
    if (i > 0 && k_values[i] <= k_values[i - 1])
      fail(ErrorKind::parse_error, "k_values must be strictly ascending");
  }
  if (!(p >= 1.0)) fail(ErrorKind::parse_error, "p must be >= 1");
  const auto& mk = measure_spec.kind;
  if (mk != "circle" && mk != "interval" && mk != "arcsine" && mk != "file")
    fail(ErrorKind::parse_error, "unknown measure kind '" + mk + "'");
  if (mk == "file" && measure_spec.path.empty())
    fail(ErrorKind::parse_error, "measure kind 'file' requires a path");
  if (measure_spec.node_factor < 1 || measure_spec.min_nodes < 1)
    fail(ErrorKind::parse_error, "node_factor and min_nodes must be >= 1");
  if (symbol_specs.size() > 2)
    fail(ErrorKind::parse_error, "at most two symbol specs (f, g)");
  make_symbol(symbol_f());
  make_symbol(symbol_g());
  if (!regions.empty() && regions.size() != 2)
    fail(ErrorKind::parse_error, "regions must list exactly two selectors");
  for (const auto& r : regions) {
    if (r.kind != "arc" && r.kind != "interval")
      fail(ErrorKind::parse_error, "unknown region kind '" + r.kind + "'");
    if (!(r.lo <= r.hi)) fail(ErrorKind::parse_error, "region lo must be <= hi");
  }
  if (experiment == ExperimentKind::offdiag && regions.empty() && mk == "file")
    fail(ErrorKind::parse_error, "offdiag on a measure file needs explicit regions");
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::parse_error, "config must be a JSON object");
  static const char* known[] = {"experiment", "k_values", "measure_spec",
                                "symbol_specs", "p", "regions", "output_path",
                                "timing", "export_spectra"};
  for (const auto& [key, _] : j.items())
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* s) { return key == s; }) == std::end(known))
      fail(ErrorKind::parse_error, "unknown config field '" + key + "'");
  ExperimentConfig c;
  try {
    if (j.contains("experiment"))
      c.experiment = experiment_from_string(j.at("experiment").get<std::string>());
    if (j.contains("k_values")) c.k_values = j.at("k_values").get<std::vector<int>>();
    if (j.contains("measure_spec")) {
      const json& m = j.at("measure_spec");
      if (m.is_string()) {
        c.measure_spec.kind = m.get<std::string>();
      } else {
        c.measure_spec.kind = m.value("kind", c.measure_spec.kind);
        c.measure_spec.node_factor = m.value("node_factor", c.measure_spec.node_factor);
        c.measure_spec.min_nodes = m.value("min_nodes", c.measure_spec.min_nodes);
        c.measure_spec.path = m.value("path", c.measure_spec.path);
      }
    }
    if (j.contains("symbol_specs"))
      c.symbol_specs = j.at("symbol_specs").get<std::vector<std::string>>();
    if (j.contains("p")) c.p = j.at("p").get<double>();
    if (j.contains("regions"))
      for (const auto& r : j.at("regions"))
        c.regions.push_back({r.value("kind", std::string("arc")), json_angle(r.at("lo")),
                             json_angle(r.at("hi"))});
    if (j.contains("output_path")) c.output_path = j.at("output_path").get<std::string>();
    if (j.contains("timing")) c.timing = j.at("timing").get<bool>();
    if (j.contains("export_spectra")) c.export_spectra = j.at("export_spectra").get<bool>();
  } catch (const json::exception& e) {
    fail(ErrorKind::parse_error, std::string("config: ") + e.what());
  }
  return c;
}

json to_json(const ExperimentConfig& c) {
  json regions = json::array();
  for (const auto& r : c.regions) regions.push_back({{"kind", r.kind}, {"lo", r.lo}, {"hi", r.hi}});
  json measure{{"kind", c.measure_spec.kind},
               {"node_factor", c.measure_spec.node_factor},
               {"min_nodes", c.measure_spec.min_nodes}};
  if (!c.measure_spec.path.empty()) measure["path"] = c.measure_spec.path;
  return json{{"experiment", to_string(c.experiment)},
              {"k_values", c.k_values},
              {"measure_spec", measure},
              {"symbol_specs", c.symbol_specs},
              {"p", c.p},
              {"regions", regions},
              {"output_path", c.output_path},
              {"timing", c.timing},
              {"export_spectra", c.export_spectra}};
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 3)
    fail(ErrorKind::degenerate_series, "fit_rate needs at least 3 points");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [k, v] : series) {
    if (!(k > 0.0) || !(v > 0.0) || !std::isfinite(v))
      fail(ErrorKind::degenerate_series, "fit_rate needs positive k and values");
    xs.push_back(std::log(k));
    ys.push_back(std::log(v));
  }
  const double n = static_cast<double>(xs.size());
  const double xbar = pairwise_sum(std::span<const double>(xs)) / n;
  const double ybar = pairwise_sum(std::span<const double>(ys)) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  if (!(sxx > 0.0)) fail(ErrorKind::degenerate_series, "fit_rate needs distinct k");
  RateFit fit{};
  fit.slope = sxy / sxx;
  fit.intercept = ybar - fit.slope * xbar;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    rss += r * r;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

std::optional<double> ReportRow::gap() const {
  if (!limit) return std::nullopt;
  return std::abs(quantity - *limit);
}

ExperimentFailure::ExperimentFailure(int k, const Error& cause)
    : Error(cause.kind(), "k=" + std::to_string(k) + ": " + cause.what()),
      k_(k),
      cause_(cause.kind()) {}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CDLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = static_cast<std::size_t>(v);
  }
  return n;
}

Report run_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t count = config.k_values.size();
  std::vector<ReportRow> rows(count);
  std::vector<std::optional<Error>> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = run_single(config, config.k_values[i]);
      } catch (const Error& e) {
        errors[i] = e;
      }
    }
  };
  const std::size_t threads = std::min(worker_count(), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < count; ++i)
    if (errors[i]) throw ExperimentFailure(config.k_values[i], *errors[i]);

  Report report;
  report.config = config;
  report.rows = std::move(rows);
  report.header = {
      "experiment=" + std::string(to_string(config.experiment)),
      "measure=" + config.measure_spec.kind,
      "symbol_f=" + config.symbol_f(),
      "symbol_g=" + config.symbol_g(),
      "p=" + format_double(config.p),
  };
  if (config.measure_spec.kind == "file") report.header.push_back("limit=unknown support");

  std::vector<std::pair<double, double>> quantities;
  std::vector<std::pair<double, double>> gaps;
  for (const auto& r : report.rows) {
    quantities.emplace_back(r.k, r.quantity);
    if (auto g = r.gap()) gaps.emplace_back(r.k, *g);
  }
  if ((report.fit = try_fit(quantities)))
    report.footer.push_back("fit quantity slope=" + format_double(report.fit->slope) +
                            " residual=" + format_double(report.fit->residual));
  if (gaps.size() == count)
    if (auto gf = try_fit(gaps))
      report.footer.push_back("fit gap slope=" + format_double(gf->slope) +
                              " residual=" + format_double(gf->residual));
  return report;
}

void write_report_csv(std::ostream& os, const Report& report) {
  for (const auto& h : report.header) os << "# " << h << '\n';
  os << "k,n_k,quantity,limit,gap,seconds\n";
  for (const auto& r : report.rows) {
    os << r.k << ',' << r.n_k << ',' << format_double(r.quantity) << ',';
    if (r.limit) os << format_double(*r.limit);
    os << ',';
    if (auto g = r.gap()) os << format_double(*g);
    os << ',' << format_double(r.seconds) << '\n';
  }
  for (const auto& f : report.footer) os << "# " << f << '\n';
}

Report run(const ExperimentConfig& config) {
  Report report = run_experiment(config);
  if (config.output_path.empty()) {
    write_report_csv(std::cout, report);
  } else {
    std::ofstream os(config.output_path);
    if (!os) fail(ErrorKind::invalid_argument, "cannot open " + config.output_path);
    write_report_csv(os, report);
  }
  return report;
}

}  // namespace cdlab
