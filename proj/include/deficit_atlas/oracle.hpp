#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "deficit_atlas/entropy.hpp"
#include "deficit_atlas/errors.hpp"
#include "deficit_atlas/state.hpp"

// Brute-force matrix route for the post-measurement spectrum, kept independent
// of the analytic formulas so the two can check each other.

namespace deficit_atlas {

using HermitianMatrix4 = std::array<std::array<std::complex<double>, 4>, 4>;

/// Averaged post-measurement density matrix for a projective measurement with
/// polar angle theta and azimuthal angle phi on qubit B. Upper triangle is
/// the conjugate of the written lower triangle.
inline HermitianMatrix4 oracle_post_matrix(const XxzState& x, double theta, double phi) {
  const double ct2 = std::cos(theta) * std::cos(theta);
  const double st2 = std::sin(theta) * std::sin(theta);
  const double s2t = std::sin(2.0 * theta);
  const std::complex<double> e = std::polar(1.0, phi);

  HermitianMatrix4 m{};
  m[0][0] = 1.0 + x.s1 + (x.s1 + x.c3) * ct2;
  m[1][1] = 1.0 - x.c3 + (x.s1 + x.c3) * st2;
  m[2][2] = 1.0 - x.c3 - (x.s1 - x.c3) * st2;
  m[3][3] = 1.0 - x.s1 - (x.s1 - x.c3) * ct2;
  m[1][0] = 0.5 * (x.s1 + x.c3) * e * s2t;
  m[2][0] = 0.5 * x.c1 * e * s2t;
  m[2][1] = x.c1 * st2;
  m[3][0] = x.c1 * e * e * st2;
  m[3][1] = -0.5 * x.c1 * e * s2t;
  m[3][2] = 0.5 * (x.s1 - x.c3) * e * s2t;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m[i][j] = std::conj(m[j][i]);
  for (auto& row : m)
    for (auto& v : row) v *= 0.25;
  return m;
}

/// Eigenvalues by cyclic Jacobi rotations on the real symmetric embedding
/// [[A, -B], [B, A]] of m = A + iB; each eigenvalue of m appears twice.
/// Sorted descending.
inline Spectrum4 oracle_spectrum(const HermitianMatrix4& m) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(m[i][j] - std::conj(m[j][i])) > 1e-12)
        throw DomainError("oracle_spectrum: matrix not Hermitian");

  constexpr int n = 8;
  double a[n][n];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a[i][j] = m[i][j].real();
      a[i + 4][j + 4] = m[i][j].real();
      a[i][j + 4] = -m[i][j].imag();
      a[i + 4][j] = m[i][j].imag();
    }

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (std::sqrt(2.0 * off) < 1e-13) {
      Spectrum4 s{};
      std::array<double, n> d;
      for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = a[i][i];
      std::sort(d.begin(), d.end(), std::greater<>());
      for (int k = 0; k < 4; ++k) s.p[static_cast<size_t>(k)] = d[static_cast<size_t>(2 * k)];
      return s;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  throw ConvergenceError("oracle_spectrum: Jacobi did not converge in 100 sweeps");
}

}  // namespace deficit_atlas
