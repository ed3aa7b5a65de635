#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Core>

namespace cdlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Real-valued function of a point in the plane (symbols, metric weights,
// measure perturbations).
using PlaneFunction = std::function<double(Complex)>;

// Real-valued function of a real variable (spectral test functions,
// functional calculus).
using RealFunction = std::function<double(double)>;

using IndexSet = std::vector<std::size_t>;

}  // namespace cdlab
