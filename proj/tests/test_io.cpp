#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cdlab/basis.hpp"
#include "cdlab/error.hpp"
#include "cdlab/io.hpp"
#include "cdlab/kernel.hpp"
#include "cdlab/measure.hpp"
#include "cdlab/operator.hpp"
#include "cdlab/symbols.hpp"

using namespace cdlab;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST(MeasureJson, RoundTripIsExact) {
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> w(1e-6, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 40);
    std::vector<Complex> nodes;
    std::vector<double> weights;
    for (int a = 0; a < m; ++a) {
      nodes.emplace_back(u(rng), u(rng));
      weights.push_back(w(rng));
    }
    const auto mu = from_points(nodes, weights);
    const auto back = measure_from_json(json::parse(to_json(mu).dump()));
    ASSERT_EQ(back.size(), mu.size());
    EXPECT_EQ(back.support_tag(), SupportTag::custom);
    EXPECT_EQ(back.exactness(), mu.exactness());
    for (std::size_t a = 0; a < mu.size(); ++a) {
      EXPECT_EQ(back.nodes()[a], mu.nodes()[a]);
      EXPECT_EQ(back.weights()[a], mu.weights()[a]);
    }
  }
}

TEST(MeasureJson, ShippedRulesKeepTheirTags) {
  for (const auto& mu : {circle_lebesgue(12), interval_lebesgue(9), arcsine(7)}) {
    const auto back = measure_from_json(json::parse(to_json(mu).dump()));
    EXPECT_EQ(back.support_tag(), mu.support_tag());
    EXPECT_EQ(back.exactness(), mu.exactness());
    EXPECT_EQ(back.nodes(), mu.nodes());
  }
}

TEST(MeasureJson, BareNumbersAreRealNodes) {
  const auto mu = measure_from_json(json::parse(R"({"nodes": [-0.5, 0.5], "weights": [1, 1]})"));
  EXPECT_EQ(mu.support_tag(), SupportTag::custom);
  EXPECT_EQ(mu.nodes()[0], Complex(-0.5, 0.0));
  EXPECT_DOUBLE_EQ(mu.total_mass(), 2.0);
}

TEST(MeasureJson, MalformedInputIsAParseError) {
  for (const char* text : {R"({"weights": [1]})", R"({"nodes": [[1, 2, 3]], "weights": [1]})",
                           R"({"nodes": [0.1], "weights": "x"})"}) {
    try {
      measure_from_json(json::parse(text));
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse_error) << text;
    }
  }
  // Placement is still checked after parsing.
  EXPECT_THROW(measure_from_json(json::parse(R"({"nodes": [[0.5, 0]], "weights": [1],
                                                 "support_tag": "circle"})")),
               Error);
}

TEST(BasisJson, CarriesCoefficientsAndMetadata) {
  const auto mu = interval_lebesgue(16);
  const auto basis = orthonormalize(mu, WeightedSpace(3, 4));
  const json j = to_json(basis);
  EXPECT_EQ(j.at("degree_bound").get<int>(), 3);
  EXPECT_EQ(j.at("tensor_power").get<int>(), 4);
  EXPECT_EQ(j.at("route").get<std::string>(), "orthogonal");
  EXPECT_DOUBLE_EQ(j.at("gram_condition").get<double>(), basis.gram_condition());
  ASSERT_EQ(j.at("coeffs").size(), 4u);
  for (int i = 0; i < 4; ++i)
    for (int jj = 0; jj < 4; ++jj) {
      EXPECT_EQ(j["coeffs"][i][jj][0].get<double>(), basis.coeffs()(i, jj).real());
      EXPECT_EQ(j["coeffs"][i][jj][1].get<double>(), basis.coeffs()(i, jj).imag());
    }
}

TEST(FormatDouble, RoundTrips) {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 100; ++i) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Csv, KernelLayout) {
  const auto mu = circle_lebesgue(4);
  const auto basis = orthonormalize(mu, WeightedSpace(1, 2));
  const auto table = kernel_table(basis, mu);
  std::ostringstream os;
  write_kernel_csv(os, table, {2, "cos", "circle"});
  const auto ls = lines(os.str());
  ASSERT_EQ(ls.size(), 1u + 16u);
  EXPECT_EQ(ls[0], "k,symbol,measure,a,b,re,im,abs2");
  const auto f = fields(ls[1]);
  ASSERT_EQ(f.size(), 8u);
  EXPECT_EQ(f[0], "2");
  EXPECT_EQ(f[1], "cos");
  EXPECT_EQ(f[2], "circle");
  // K(1, 1) = 1 + |z|^2 = 2 on the circle.
  EXPECT_DOUBLE_EQ(std::stod(f[5]), 2.0);
  EXPECT_DOUBLE_EQ(std::stod(f[7]), 4.0);
}

TEST(Csv, DensityLayoutSumsToOne) {
  const auto mu = interval_lebesgue(20);
  const auto basis = orthonormalize(mu, WeightedSpace(4, 5));
  const auto table = kernel_table(basis, mu);
  std::ostringstream os;
  write_density_csv(os, table, mu, {});
  const auto ls = lines(os.str());
  ASSERT_EQ(ls.size(), 21u);
  EXPECT_EQ(ls[0], "k,symbol,measure,re,im,weight,density");
  double total = 0.0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    ASSERT_EQ(f.size(), 7u);
    EXPECT_EQ(f[1], "-");
    total += std::stod(f[6]);
  }
  EXPECT_NEAR(total, 1.0, 1e-13);
}

TEST(Csv, MatrixAndSpectrumLayout) {
  const auto t = legendre_toeplitz(make_symbol("x"), 3);
  std::ostringstream om;
  write_matrix_csv(om, t.entries(), {3, "x", "interval"});
  const auto ml = lines(om.str());
  ASSERT_EQ(ml.size(), 10u);
  EXPECT_EQ(ml[0], "k,symbol,measure,i,j,re,im");
  EXPECT_EQ(fields(ml[2])[3], "0");
  EXPECT_EQ(fields(ml[2])[4], "1");

  std::ostringstream os;
  write_spectrum_csv(os, spectrum(t), {3, "x", "interval"});
  const auto sl = lines(os.str());
  ASSERT_EQ(sl.size(), 4u);
  EXPECT_EQ(sl[0], "k,symbol,measure,index,eigenvalue");
  // Gauss-Legendre nodes of order 3: 0, +-sqrt(3/5).
  EXPECT_NEAR(std::stod(fields(sl[1])[4]), -std::sqrt(0.6), 1e-14);
  EXPECT_NEAR(std::stod(fields(sl[2])[4]), 0.0, 1e-14);
}
