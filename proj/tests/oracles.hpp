#pragma once

// Reference computations used to cross-check the library. Each one is
// written out by hand and avoids the library's own numerics.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;

inline const double kPi = std::acos(-1.0);
inline const C kI{0.0, 1.0};

inline Mat zeros(std::size_t r, std::size_t c) {
  return Mat(r, std::vector<C>(c, C{}));
}

inline Mat eye(std::size_t n) {
  auto m = zeros(n, n);
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1.0;
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  auto out = zeros(a.size(), b.front().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

inline Mat add(const Mat& a, const Mat& b, C scale_b = 1.0) {
  auto out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] += scale_b * b[i][j];
  }
  return out;
}

inline Mat scale(const Mat& a, C s) {
  auto out = a;
  for (auto& row : out) {
    for (auto& x : row) x *= s;
  }
  return out;
}

inline Mat adjoint(const Mat& a) {
  auto out = zeros(a.front().size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = std::conj(a[i][j]);
  }
  return out;
}

// Gauss-Jordan with full pivoting.
inline Mat inverse(Mat a) {
  const std::size_t n = a.size();
  auto inv = eye(n);
  std::vector<std::size_t> col_perm(n);
  for (std::size_t k = 0; k < n; ++k) col_perm[k] = k;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k;
    std::size_t pc = k;
    double best = -1.0;
    for (std::size_t i = k; i < n; ++i) {
      for (std::size_t j = k; j < n; ++j) {
        if (std::abs(a[i][j]) > best) {
          best = std::abs(a[i][j]);
          pr = i;
          pc = j;
        }
      }
    }
    if (best == 0.0) throw std::runtime_error("oracle: singular");
    std::swap(a[k], a[pr]);
    std::swap(inv[k], inv[pr]);
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][pc]);
      std::swap(col_perm[k], col_perm[pc]);
    }
    const C p = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= p;
      inv[k][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const C f = a[i][k];
      if (f == C{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  // Column swaps of a become row swaps of its inverse.
  Mat out = zeros(n, n);
  for (std::size_t k = 0; k < n; ++k) out[col_perm[k]] = inv[k];
  return out;
}

// Laplace expansion; fine for n <= 6.
inline C determinant(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  C det{};
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<C> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * a[0][c] * determinant(minor);
  }
  return det;
}

inline double max_diff(const Mat& a, const Mat& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  }
  return d;
}

// -(A + ik B)^{-1} (A - ik B)
inline Mat scatter(const Mat& a, const Mat& b, double energy) {
  const double k = std::sqrt(energy);
  return scale(matmul(inverse(add(a, b, kI * k)), add(a, b, -kI * k)), -1.0);
}

// Closed-form Robin reflection amplitude.
inline C robin(double phi, double energy) {
  const double k = std::sqrt(energy);
  return -(std::cos(phi) - kI * k * std::sin(phi)) / (std::cos(phi) + kI * k * std::sin(phi));
}

// Reflection after an insertion, summing the multiple-reflection series
// U22 + U21 S U12 + U21 S U11 S U12 + ...
inline C reflection_series(C s, C u11, C u12, C u21, C u22, int terms = 4000) {
  C total = u22;
  C bounce = u21 * s * u12;
  for (int t = 0; t < terms; ++t) {
    total += bounce;
    bounce *= s * u11;
  }
  return total;
}

inline C transmission_series(C sij, C sii, C u11, C u12, int terms = 4000) {
  C total{};
  C bounce = sij * u12;
  for (int t = 0; t < terms; ++t) {
    total += bounce;
    bounce *= sii * u11;
  }
  return total;
}

// Dense random complex matrix with standard normal entries.
inline Mat ginibre(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> g;
  auto m = zeros(r, c);
  for (auto& row : m) {
    for (auto& x : row) x = C{g(rng), g(rng)};
  }
  return m;
}

// Unitary from a Hermitian generator via the Cayley transform
// (I - iH)^{-1}(I + iH); independent of the library's QR-based sampler.
inline Mat cayley_unitary(std::size_t n, std::uint64_t seed) {
  auto g = ginibre(n, n, seed);
  auto h = scale(add(g, adjoint(g)), 0.5);
  auto ih = scale(h, kI);
  return matmul(inverse(add(eye(n), ih, -1.0)), add(eye(n), ih));
}

inline double unitarity_residual(const Mat& u) {
  auto r = add(matmul(adjoint(u), u), eye(u.size()), -1.0);
  double s = 0.0;
  for (auto& row : r) {
    for (auto& x : row) s += std::norm(x);
  }
  return std::sqrt(s);
}

}  // namespace oracle
