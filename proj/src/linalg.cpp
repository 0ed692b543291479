#include "fresco/linalg.hpp"

#include <algorithm>

namespace fresco {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x == 0; });
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("QMatrix product shape mismatch");
  QMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      if (x(i, l) == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y(l, j) != 0) r(i, j) += x(i, l) * y(l, j);
    }
  return r;
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  QMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
  QMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

QMatrix transpose(const QMatrix& x) {
  QMatrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

QMatrix hstack(const QMatrix& x, const QMatrix& y) {
  QMatrix r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (int j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
  }
  return r;
}

Rref rref(QMatrix m) {
  Rref out;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
    Scalar inv = 1 / m(row, col);
    for (int j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Scalar f = m(i, col);
      for (int j = col; j < m.cols; ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.r = std::move(m);
  return out;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

QMatrix nullspace(const QMatrix& m) {
  Rref e = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (int p : e.pivots) is_piv[p] = true;
  std::vector<int> free;
  for (int j = 0; j < m.cols; ++j)
    if (!is_piv[j]) free.push_back(j);
  QMatrix n(m.cols, static_cast<int>(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    n(free[f], f) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) n(e.pivots[r], f) = -e.r(r, free[f]);
  }
  return n;
}

QMatrix left_nullspace(const QMatrix& m) { return transpose(nullspace(transpose(m))); }

bool solve(const QMatrix& m, const QMatrix& rhs, QMatrix& x) {
  Rref e = rref(hstack(m, rhs));
  int np = static_cast<int>(e.pivots.size());
  if (np > 0 && e.pivots.back() >= m.cols) return false;
  x = QMatrix(m.cols, rhs.cols);
  for (int r = 0; r < np; ++r)
    for (int j = 0; j < rhs.cols; ++j) x(e.pivots[r], j) = e.r(r, m.cols + j);
  return true;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  QMatrix x;
  if (rank(m) != m.rows || !solve(m, QMatrix::identity(m.rows), x)) throw std::domain_error("singular matrix");
  return x;
}

Scalar determinant(QMatrix m) {
  int n = m.rows;
  Scalar det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Scalar f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}


// Faddeev-LeVerrier
std::vector<Scalar> charpoly(const QMatrix& m) {
  int n = m.rows;
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    QMatrix s = mk;
    for (int i = 0; i < n; ++i) s(i, i) += c[n - k + 1];
    mk = m * s;
    Scalar tr = 0;
    for (int i = 0; i < n; ++i) tr += mk(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

SMatrix SMatrix::identity(int n, int order) {
  SMatrix m(n, n, order);
  for (int i = 0; i < n; ++i) m(i, i)[0] = 1;
  return m;
}

SMatrix SMatrix::from_columns(const std::vector<SVec>& cs) {
  int r = cs.empty() ? 0 : static_cast<int>(cs[0].size());
  SMatrix m;
  m.rows = r;
  m.cols = static_cast<int>(cs.size());
  m.a.resize(static_cast<size_t>(r) * m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (int i = 0; i < r; ++i) m(i, j) = cs[j][i];
  return m;
}

int SMatrix::order() const {
  int o = a.empty() ? 0 : a[0].order();
  for (const auto& s : a) o = std::min(o, s.order());
  return o;
}

SVec SMatrix::column(int j) const {
  SVec v;
  for (int i = 0; i < rows; ++i) v.push_back((*this)(i, j));
  return v;
}

QMatrix SMatrix::coeff(int n) const {
  QMatrix q(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) q(i, j) = (*this)(i, j)[n];
  return q;
}

SMatrix SMatrix::truncated(int m) const {
  SMatrix r = *this;
  for (auto& s : r.a) s = s.truncated(m);
  return r;
}

SMatrix operator*(const SMatrix& x, const SMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("SMatrix product shape mismatch");
  int n = std::min(x.order(), y.order());
  SMatrix r(x.rows, y.cols, n);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j)
      for (int l = 0; l < x.cols; ++l) {
        if (x(i, l).is_zero() || y(l, j).is_zero()) continue;
        r(i, j) += mul(x(i, l), y(l, j));
      }
  return r;
}

SMatrix operator+(const SMatrix& x, const SMatrix& y) {
  SMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

SMatrix operator-(const SMatrix& x, const SMatrix& y) {
  SMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

SVec operator*(const SMatrix& x, const SVec& v) {
  int n = std::min(x.order(), order_of(v));
  SVec r(x.rows, TruncSeries(n));
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      if (x(i, l).is_zero() || v[l].is_zero()) continue;
      r[i] += mul(x(i, l), v[l]);
    }
  return r;
}

SMatrix transpose(const SMatrix& x) {
  SMatrix r(x.cols, x.rows, 0);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

SMatrix inverse(const SMatrix& m) {
  int k = m.rows, n = m.order();
  QMatrix inv0 = inverse(m.coeff(0));
  std::vector<QMatrix> mc, xc;
  for (int t = 0; t <= n; ++t) mc.push_back(m.coeff(t));
  xc.push_back(inv0);
  for (int t = 1; t <= n; ++t) {
    QMatrix acc(k, k);
    for (int s = 1; s <= t; ++s)
      if (!mc[s].is_zero()) acc = acc + mc[s] * xc[t - s];
    QMatrix neg = inv0 * acc;
    for (auto& q : neg.a) q = -q;
    xc.push_back(neg);
  }
  SMatrix r(k, k, n);
  for (int t = 0; t <= n; ++t)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r(i, j)[t] = xc[t](i, j);
  return r;
}

int order_of(const SVec& v) {
  int o = v.empty() ? 0 : v[0].order();
  for (const auto& s : v) o = std::min(o, s.order());
  return o;
}

SVec truncated(const SVec& v, int m) {
  SVec r;
  for (const auto& s : v) r.push_back(s.truncated(m));
  return r;
}

SVec add(const SVec& x, const SVec& y) {
  SVec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

SVec sub(const SVec& x, const SVec& y) {
  SVec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

SVec scale(const TruncSeries& s, const SVec& v) {
  SVec r;
  for (const auto& x : v) r.push_back(mul(s, x));
  return r;
}

SVec scale(const Scalar& s, const SVec& v) {
  SVec r;
  for (const auto& x : v) r.push_back(fresco::scale(s, x));
  return r;
}

SVec derive_shift2(const SVec& v) {
  SVec r;
  for (const auto& x : v) {
    TruncSeries y(x.order());
    for (int n = 2; n <= x.order(); ++n) y[n] = x[n - 1] * (n - 1);
    r.push_back(y);
  }
  return r;
}

bool is_zero(const SVec& v) {
  return std::all_of(v.begin(), v.end(), [](const TruncSeries& s) { return s.is_zero(); });
}

int valuation(const SVec& v) {
  int val = order_of(v) + 1;
  for (const auto& s : v) val = std::min(val, s.valuation());
  return val;
}

SVec unit_vector(int k, int i, int order) {
  SVec v(k, TruncSeries(order));
  v[i][0] = 1;
  return v;
}

QMatrix coeff(const SVec& v, int n) {
  QMatrix q(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) q(static_cast<int>(i), 0) = v[i][n];
  return q;
}

}  // namespace fresco
