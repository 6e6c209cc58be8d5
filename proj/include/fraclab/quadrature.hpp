#pragma once

#include <cstddef>
#include <vector>

namespace fraclab::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1], nodes ascending. Newton iteration on P_n.
Rule gauss_legendre(std::size_t n);

// Gauss rule for  int_0^1 s^expo f(s) ds  (Jacobi weight with the
// singular/vanishing factor at s = 0), expo > -1. Golub-Welsch on the
// Jacobi recurrence, symmetric tridiagonal eigensolve.
Rule gauss_jacobi01(std::size_t n, double expo);

// Composite Simpson weights for n_intervals uniform intervals of width h.
// Odd interval counts finish with a 3/8 block. n_intervals >= 2.
std::vector<double> simpson_weights(std::size_t n_intervals, double h);

// Trapezoid weights (h/2, h, ..., h, h/2).
std::vector<double> trapezoid_weights(std::size_t n_intervals, double h);

// In-place cumulative integral of piecewise-linear samples on nodes t:
// out[j] = int_0^{t_j}. Exact for the linear interpolant.
std::vector<double> cumulative_trapezoid(const std::vector<double>& t,
                                         const std::vector<double>& values);

}  // namespace fraclab::quad
