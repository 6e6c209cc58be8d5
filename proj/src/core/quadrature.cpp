#include "fraclab/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "fraclab/errors.hpp"
#include "fraclab/gamma.hpp"

namespace fraclab::quad {

Rule gauss_legendre(std::size_t n) {
  require(n >= 1, "quad.degenerate", "Gauss-Legendre needs at least one node");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (double(i) + 0.75) / (double(n) + 0.5));
    double p1 = 0.0;
    for (int it = 0; it < 100; ++it) {
      p1 = 1.0;
      double p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * double(j) + 1.0) * x * p2 - double(j) * p3) / (double(j) + 1.0);
      }
      const double dp = double(n) * (x * p1 - p2) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one clean-up pass after convergence
        if (it > 0) break;
      }
    }
    // recompute derivative at the converged node for the weight
    double q1 = 1.0, q2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double q3 = q2;
      q2 = q1;
      q1 = ((2.0 * double(j) + 1.0) * x * q2 - double(j) * q3) / (double(j) + 1.0);
    }
    const double dp = double(n) * (x * q1 - q2) / (x * x - 1.0);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    r.weights[n - 1 - i] = r.weights[i];
  }
  return r;
}

Rule gauss_jacobi01(std::size_t n, double expo) {
  require(n >= 1, "quad.degenerate", "Gauss-Jacobi needs at least one node");
  require(expo > -1.0, "quad.weight-exponent", "Jacobi exponent must exceed -1");
  // Weight (1+x)^b on [-1,1] with b = expo, a = 0; mapped to s = (1+x)/2.
  const double a = 0.0, b = expo;
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 1);
  const double apb = a + b;
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = double(k);
    double ak;
    if (k == 0)
      ak = (b - a) / (apb + 2.0);
    else
      ak = (b * b - a * a) /
           ((2.0 * kk + apb) * (2.0 * kk + apb + 2.0));
    diag[Eigen::Index(k)] = ak;
    if (k + 1 < n) {
      const double k1 = kk + 1.0;
      double bk;
      if (k == 0)
        bk = 4.0 * (a + 1.0) * (b + 1.0) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
      else
        bk = 4.0 * k1 * (k1 + a) * (k1 + b) * (k1 + apb) /
             ((2.0 * k1 + apb) * (2.0 * k1 + apb) * (2.0 * k1 + apb + 1.0) *
              (2.0 * k1 + apb - 1.0));
      sub[Eigen::Index(k)] = std::sqrt(bk);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n > 1 ? Eigen::Index(n - 1) : 0));
  if (es.info() != Eigen::Success)
    throw_numerical("quad.eigensolver", "Jacobi recurrence eigensolve failed");
  // mu0 = int_{-1}^{1} (1+x)^b dx = 2^{b+1} / (b+1)
  const double mu0 = std::pow(2.0, b + 1.0) / (b + 1.0);
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = es.eigenvalues()[Eigen::Index(k)];
    const double v0 = es.eigenvectors()(0, Eigen::Index(k));
    // map to [0,1] with weight s^expo: s = (1+x)/2, ds = dx/2,
    // (1+x)^b = (2s)^b, so  int_0^1 s^b f = 2^{-b-1} int_{-1}^1 (1+x)^b f.
    r.nodes[k] = 0.5 * (1.0 + x);
    r.weights[k] = mu0 * v0 * v0 * std::pow(2.0, -b - 1.0);
  }
  return r;
}

std::vector<double> simpson_weights(std::size_t n_intervals, double h) {
  require(n_intervals >= 2, "quad.grid-too-coarse", "Simpson needs at least 2 intervals");
  std::vector<double> w(n_intervals + 1, 0.0);
  std::size_t n_simpson = n_intervals;
  bool tail38 = false;
  if (n_intervals % 2 != 0) {
    require(n_intervals >= 3, "quad.grid-too-coarse", "odd interval count needs >= 3");
    n_simpson = n_intervals - 3;
    tail38 = true;
  }
  for (std::size_t i = 0; i + 2 <= n_simpson; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (tail38) {
    const std::size_t s = n_simpson;
    w[s] += 3.0 * h / 8.0;
    w[s + 1] += 9.0 * h / 8.0;
    w[s + 2] += 9.0 * h / 8.0;
    w[s + 3] += 3.0 * h / 8.0;
  }
  return w;
}

std::vector<double> trapezoid_weights(std::size_t n_intervals, double h) {
  require(n_intervals >= 1, "quad.grid-too-coarse", "trapezoid needs at least 1 interval");
  std::vector<double> w(n_intervals + 1, h);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  return w;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& t,
                                         const std::vector<double>& values) {
  require(t.size() == values.size() && t.size() >= 2, "quad.grid-mismatch",
          "cumulative integral needs matching node and value arrays");
  std::vector<double> out(values.size(), 0.0);
  for (std::size_t j = 1; j < values.size(); ++j)
    out[j] = out[j - 1] + 0.5 * (t[j] - t[j - 1]) * (values[j] + values[j - 1]);
  return out;
}

}  // namespace fraclab::quad
