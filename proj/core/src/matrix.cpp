#include "lgr/matrix.hpp"

#include <stdexcept>

namespace lgr {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("matrix product: inner dimensions differ");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det: matrix is not square");
  const int n = m.rows();
  if (n == 0) return 1;

  /* Clear denominators row by row; det scales by the product of the lcms. */
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                        m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      mpz_class q = l / m.at(i, j).get_den();
      a[i][j] = m.at(i, j).get_num() * q;
    }
    scale *= l;
  }

  /* Bareiss: after step k every entry is a (k+1)-minor of the original, and
   * the division by the previous pivot is exact. Row swaps only flip sign. */
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  Rat r(sign * a[n - 1][n - 1], scale);
  r.canonicalize();
  return r;
}

RatMatrix submatrix(const RatMatrix& m, const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  RatMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      s.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j]);
  return s;
}

Rat minor_det(const RatMatrix& m, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor_det: index lists of unequal length");
  auto check = [](const std::vector<int>& idx, int bound, const char* what) {
    for (size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 1 || idx[i] > bound)
        throw std::invalid_argument(std::string("minor_det: ") + what +
                                    " index out of range");
      if (i > 0 && idx[i] <= idx[i - 1])
        throw std::invalid_argument(std::string("minor_det: ") + what +
                                    " indices not strictly increasing");
    }
  };
  check(rows, m.rows(), "row");
  check(cols, m.cols(), "column");
  std::vector<int> r0, c0;
  for (int i : rows) r0.push_back(i - 1);
  for (int j : cols) c0.push_back(j - 1);
  return det(submatrix(m, r0, c0));
}

int rank(const RatMatrix& m) {
  std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (int j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace lgr
