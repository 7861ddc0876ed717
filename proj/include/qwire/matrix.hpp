#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qwire {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sizes used throughout the library are
/// small (n <= 64), so everything is stored by value.
class ComplexMatrix {
 public:
  /// rows x cols zero matrix; both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major `entries`. Throws ShapeError on a size
  /// mismatch and ArgumentError on non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries);

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  ComplexMatrix adjoint() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// Horizontal concatenation (lhs | rhs).
ComplexMatrix hconcat(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

double frobenius_norm(const ComplexMatrix& m);

/// Largest |lhs_ij - rhs_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

}  // namespace qwire
