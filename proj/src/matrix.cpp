#include "spectraltk/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spectraltk {

EigenDecomposition jacobi_eigensolve(const Matrix& m, int max_sweeps) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("eigensolve needs a square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12)
        throw std::invalid_argument("eigensolve needs a symmetric matrix");

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  const double tol = 1e-14 * n;

  auto off = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  bool converged = (n == 1);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const double aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          const double api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    if (off() <= tol) converged = true;
  }
  if (!converged) throw std::runtime_error("jacobi eigensolve did not converge");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });

  EigenDecomposition dec;
  dec.values.resize(n);
  dec.vectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    dec.values[j] = a(order[j], order[j]);
    // sign convention: largest-magnitude entry positive
    int arg = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(v(i, order[j])) > std::abs(v(arg, order[j]))) arg = i;
    const double sgn = v(arg, order[j]) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) dec.vectors(i, j) = sgn * v(i, order[j]);
  }

  // certify ||M v_j - l_j v_j||_inf and orthonormality defect
  double resid = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double r = -dec.values[j] * dec.vectors(i, j);
      for (int k = 0; k < n; ++k) r += m(i, k) * dec.vectors(k, j);
      resid = std::max(resid, std::abs(r));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double dot = 0.0;
      for (int k = 0; k < n; ++k) dot += dec.vectors(k, i) * dec.vectors(k, j);
      resid = std::max(resid, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  dec.residual_tol = resid;
  return dec;
}

}  // namespace spectraltk
