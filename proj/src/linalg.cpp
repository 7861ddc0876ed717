#include "qwire/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "qwire/errors.hpp"

namespace qwire {

namespace {

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw ShapeError(std::string(op) + ": matrix is " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected square");
  }
}

// In-place LU with partial pivoting; lu holds L (unit diagonal, below) and U.
struct LuFactors {
  ComplexMatrix lu;
  std::vector<std::size_t> pivots;
  int sign = 1;
};

LuFactors lu_decompose(const ComplexMatrix& m) {
  LuFactors f{m, std::vector<std::size_t>(m.rows()), 1};
  const std::size_t n = m.rows();
  auto& a = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > best) {
        best = std::abs(a(r, k));
        p = r;
      }
    }
    f.pivots[k] = p;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      f.sign = -f.sign;
    }
    if (a(k, k) == Complex{}) continue;
    for (std::size_t r = k + 1; r < n; ++r) {
      const Complex factor = a(r, k) / a(k, k);
      a(r, k) = factor;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return f;
}

void check_invertible(const ComplexMatrix& m, const char* op) {
  const auto sv = singular_values(m);
  const double smallest = sv.back();
  if (!(sv.front() > 0.0) || smallest <= kRankTolerance * sv.front()) {
    throw SingularMatrixError(std::string(op) +
                                  ": matrix is singular (smallest singular "
                                  "value " +
                                  std::to_string(smallest) + ")",
                              smallest);
  }
}

ComplexMatrix lu_solve(const LuFactors& f, ComplexMatrix rhs) {
  const std::size_t n = f.lu.rows();
  const auto& a = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    if (f.pivots[k] != k) {
      for (std::size_t c = 0; c < rhs.cols(); ++c) {
        std::swap(rhs(k, c), rhs(f.pivots[k], c));
      }
    }
  }
  for (std::size_t c = 0; c < rhs.cols(); ++c) {
    for (std::size_t r = 1; r < n; ++r) {
      Complex acc = rhs(r, c);
      for (std::size_t k = 0; k < r; ++k) acc -= a(r, k) * rhs(k, c);
      rhs(r, c) = acc;
    }
    for (std::size_t r = n; r-- > 0;) {
      Complex acc = rhs(r, c);
      for (std::size_t k = r + 1; k < n; ++k) acc -= a(r, k) * rhs(k, c);
      rhs(r, c) = acc / a(r, r);
    }
  }
  return rhs;
}

}  // namespace

ComplexMatrix multiply(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  return lhs * rhs;
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  require_square(m, "inverse");
  check_invertible(m, "inverse");
  return lu_solve(lu_decompose(m), ComplexMatrix::identity(m.rows()));
}

ComplexMatrix solve(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_square(lhs, "solve");
  if (rhs.rows() != lhs.rows()) {
    throw ShapeError("solve: right-hand side has wrong row count");
  }
  check_invertible(lhs, "solve");
  return lu_solve(lu_decompose(lhs), rhs);
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  // Work on columns of the taller orientation; g is stored column-major.
  const bool tall = m.rows() >= m.cols();
  const std::size_t rows = tall ? m.rows() : m.cols();
  const std::size_t cols = tall ? m.cols() : m.rows();
  std::vector<Complex> g(rows * cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) {
      g[c * rows + r] = tall ? m(r, c) : std::conj(m(c, r));
    }
  }
  auto col = [&](std::size_t c) { return g.data() + c * rows; };

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        Complex* gp = col(p);
        Complex* gq = col(q);
        double alpha = 0.0;
        double beta = 0.0;
        Complex gamma{};
        for (std::size_t r = 0; r < rows; ++r) {
          alpha += std::norm(gp[r]);
          beta += std::norm(gq[r]);
          gamma += std::conj(gp[r]) * gq[r];
        }
        const double abs_gamma = std::abs(gamma);
        if (abs_gamma == 0.0 || abs_gamma <= eps * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        // Rotate gq's phase so the coupling is real, then a real rotation.
        const Complex phase = std::conj(gamma) / abs_gamma;
        const double zeta = (beta - alpha) / (2.0 * abs_gamma);
        const double t = std::copysign(1.0, zeta) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < rows; ++r) {
          const Complex x = gp[r];
          const Complex y = gq[r] * phase;
          gp[r] = c * x - s * y;
          gq[r] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < rows; ++r) sum += std::norm(col(c)[r]);
    sv[c] = std::sqrt(sum);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

std::size_t numeric_rank(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("numeric_rank: tol must be positive");
  const auto sv = singular_values(m);
  if (!(sv.front() > 0.0)) return 0;
  const double cutoff = tol * sv.front();
  return static_cast<std::size_t>(
      std::count_if(sv.begin(), sv.end(), [&](double s) { return s > cutoff; }));
}

double unitarity_residual(const ComplexMatrix& m) {
  require_square(m, "unitarity_residual");
  return frobenius_norm(m.adjoint() * m - ComplexMatrix::identity(m.rows()));
}

double hermiticity_residual(const ComplexMatrix& m) {
  require_square(m, "hermiticity_residual");
  return frobenius_norm(m - m.adjoint());
}

Complex determinant(const ComplexMatrix& m) {
  require_square(m, "determinant");
  const auto f = lu_decompose(m);
  Complex det = static_cast<double>(f.sign);
  for (std::size_t k = 0; k < m.rows(); ++k) det *= f.lu(k, k);
  return det;
}

ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
  require_square(m, "nearest_unitary");
  ComplexMatrix x = m;
  for (int iter = 0; iter < 100; ++iter) {
    ComplexMatrix next = 0.5 * (x + inverse(x).adjoint());
    const double step = frobenius_norm(next - x);
    x = std::move(next);
    if (step <= 1e-15 * std::sqrt(static_cast<double>(m.rows()))) break;
  }
  return x;
}

ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ArgumentError("haar_random_unitary: n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  // Columns of a complex Ginibre matrix.
  std::vector<std::vector<Complex>> q(n, std::vector<Complex>(n));
  for (auto& column : q) {
    for (auto& z : column) z = Complex(normal(rng), normal(rng));
  }
  // Modified Gram-Schmidt, applied twice for orthogonality to working
  // precision. The normalisation leaves diag(R) real and positive, which is
  // the phase convention that makes Q Haar distributed.
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot{};
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(q[k][r]) * q[j][r];
        for (std::size_t r = 0; r < n; ++r) q[j][r] -= dot * q[k][r];
      }
    }
    double norm = 0.0;
    for (const auto& z : q[j]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : q[j]) z /= norm;
  }
  ComplexMatrix u(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) u(r, c) = q[c][r];
  }
  return u;
}

}  // namespace qwire
