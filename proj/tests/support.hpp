#pragma once

#include <cstddef>
#include <vector>

#include "oracles.hpp"
#include "qwire/matrix.hpp"

namespace support {

inline oracle::Mat to_mat(const qwire::ComplexMatrix& m) {
  auto out = oracle::zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline qwire::ComplexMatrix from_mat(const oracle::Mat& m) {
  qwire::ComplexMatrix out(m.size(), m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
  }
  return out;
}

inline double diff(const qwire::ComplexMatrix& a, const oracle::Mat& b) {
  return oracle::max_diff(to_mat(a), b);
}

}  // namespace support
