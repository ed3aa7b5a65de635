#include "cdlab/io.hpp"

#include <cstdio>
#include <ostream>

#include "cdlab/error.hpp"

namespace cdlab {

using nlohmann::json;

json to_json(const QuadratureMeasure& mu) {
  json nodes = json::array();
  for (const Complex& z : mu.nodes()) nodes.push_back({z.real(), z.imag()});
  return json{{"nodes", nodes},
              {"weights", mu.weights()},
              {"support_tag", to_string(mu.support_tag())},
              {"exactness", mu.exactness()}};
}

QuadratureMeasure measure_from_json(const json& j) {
  try {
    std::vector<Complex> nodes;
    for (const auto& node : j.at("nodes")) {
      if (node.is_number()) {
        nodes.emplace_back(node.get<double>(), 0.0);
      } else {
        if (!node.is_array() || node.size() != 2)
          fail(ErrorKind::parse_error, "node must be [re, im]");
        nodes.emplace_back(node[0].get<double>(), node[1].get<double>());
      }
    }
    auto weights = j.at("weights").get<std::vector<double>>();
    const SupportTag tag = support_tag_from_string(j.value("support_tag", "custom"));
    const int exactness = j.value("exactness", 0);
    return QuadratureMeasure(std::move(nodes), std::move(weights), exactness, tag);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse_error, std::string("measure JSON: ") + e.what());
  }
}

json to_json(const OrthonormalBasis& basis) {
  json rows = json::array();
  const CMatrix& c = basis.coeffs();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < c.cols(); ++j)
      row.push_back({c(i, j).real(), c(i, j).imag()});
    rows.push_back(row);
  }
  return json{{"coeffs", rows},
              {"degree_bound", basis.space().degree_bound},
              {"tensor_power", basis.space().tensor_power},
              {"gram_condition", basis.gram_condition()},
              {"route", to_string(basis.route())}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void tag_prefix(std::ostream& os, const ExportTags& tags) {
  os << tags.k << ',' << tags.symbol << ',' << tags.measure << ',';
}

}  // namespace

void write_kernel_csv(std::ostream& os, const KernelTable& table,
                      const ExportTags& tags) {
  os << "k,symbol,measure,a,b,re,im,abs2\n";
  const CMatrix& k = table.values();
  for (Eigen::Index a = 0; a < k.rows(); ++a)
    for (Eigen::Index b = 0; b < k.cols(); ++b) {
      tag_prefix(os, tags);
      os << a << ',' << b << ',' << format_double(k(a, b).real()) << ','
         << format_double(k(a, b).imag()) << ',' << format_double(std::norm(k(a, b)))
         << '\n';
    }
}

void write_density_csv(std::ostream& os, const KernelTable& table,
                       const QuadratureMeasure& mu, const ExportTags& tags) {
  const std::vector<double> density = diagonal_density(table, mu);
  os << "k,symbol,measure,re,im,weight,density\n";
  for (std::size_t a = 0; a < mu.size(); ++a) {
    tag_prefix(os, tags);
    os << format_double(mu.nodes()[a].real()) << ','
       << format_double(mu.nodes()[a].imag()) << ','
       << format_double(mu.weights()[a]) << ',' << format_double(density[a]) << '\n';
  }
}

void write_matrix_csv(std::ostream& os, const CMatrix& m, const ExportTags& tags) {
  os << "k,symbol,measure,i,j,re,im\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      tag_prefix(os, tags);
      os << i << ',' << j << ',' << format_double(m(i, j).real()) << ','
         << format_double(m(i, j).imag()) << '\n';
    }
}

void write_spectrum_csv(std::ostream& os, const SpectralMeasure& s,
                        const ExportTags& tags) {
  os << "k,symbol,measure,index,eigenvalue\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    tag_prefix(os, tags);
    os << i << ',' << format_double(s.eigenvalues[i]) << '\n';
  }
}

}  // namespace cdlab
