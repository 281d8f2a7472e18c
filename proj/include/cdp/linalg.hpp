#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace cdp {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

bool is_hermitian(const CMat& m, double tol = 1e-12);

/// Hermitian within tol and minimum eigenvalue >= -tol.
bool is_psd(const CMat& m, double tol);

double hs_norm(const CMat& m);
double trace_norm(const CMat& m);

/// Ascending eigenvalues of a Hermitian matrix.
RVec hermitian_eigenvalues(const CMat& m);
double min_eigenvalue(const CMat& m);

CVec eigenvalues(const CMat& m);

CMat kron(const CMat& a, const CMat& b);

double max_abs_diff(const CMat& a, const CMat& b);
bool approx_equal(const CMat& a, const CMat& b, double tol);

/// Multiset comparison after descending sort.
bool same_real_multiset(std::vector<double> a, std::vector<double> b, double tol);

std::vector<double> sorted_descending(std::vector<double> v);

}  // namespace cdp
