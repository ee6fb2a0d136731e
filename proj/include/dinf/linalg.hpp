#pragma once

#include <gmpxx.h>

#include <vector>

namespace dinf {

// dense row-major matrix over Q
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpq_class> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  mpq_class& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const mpq_class& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
};

int rank(QMatrix m);
QMatrix multiply(const QMatrix& x, const QMatrix& y);

}  // namespace dinf
