#include "dinf/linalg.hpp"

#include <utility>

namespace dinf {

int rank(QMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (sgn(m(i, c)) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(piv, j));
    for (int i = r + 1; i < m.rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      mpq_class f = m(i, c) / m(r, c);
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

QMatrix multiply(const QMatrix& x, const QMatrix& y) {
  QMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (sgn(x(i, k)) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

}  // namespace dinf
