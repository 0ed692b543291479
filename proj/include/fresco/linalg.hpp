#pragma once

#include "fresco/series.hpp"

#include <vector>

namespace fresco {

// Dense rational matrix, row major.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  static QMatrix identity(int n);

  Scalar& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;
};

QMatrix operator*(const QMatrix& x, const QMatrix& y);
QMatrix operator+(const QMatrix& x, const QMatrix& y);
QMatrix operator-(const QMatrix& x, const QMatrix& y);
QMatrix transpose(const QMatrix& x);
QMatrix hstack(const QMatrix& x, const QMatrix& y);

struct Rref {
  QMatrix r;
  std::vector<int> pivots;
};
Rref rref(QMatrix m);
int rank(const QMatrix& m);
// columns span the right kernel
QMatrix nullspace(const QMatrix& m);
// rows span the left kernel (w m = 0)
QMatrix left_nullspace(const QMatrix& m);
// one solution of m x = rhs (rhs may have several columns); false when inconsistent
bool solve(const QMatrix& m, const QMatrix& rhs, QMatrix& x);
QMatrix inverse(const QMatrix& m);
Scalar determinant(QMatrix m);
// monic characteristic polynomial det(z - m), coefficients low to high
std::vector<Scalar> charpoly(const QMatrix& m);

using SVec = std::vector<TruncSeries>;

// Matrix of power series; column j holds the image of the j-th basis vector.
struct SMatrix {
  int rows = 0, cols = 0;
  std::vector<TruncSeries> a;

  SMatrix() = default;
  SMatrix(int r, int c, int order) : rows(r), cols(c), a(static_cast<size_t>(r) * c, TruncSeries(order)) {}
  static SMatrix identity(int n, int order);
  static SMatrix from_columns(const std::vector<SVec>& cols);

  TruncSeries& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const TruncSeries& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  int order() const;
  SVec column(int j) const;
  QMatrix coeff(int n) const;
  SMatrix truncated(int m) const;
  bool operator==(const SMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

SMatrix operator*(const SMatrix& x, const SMatrix& y);
SMatrix operator+(const SMatrix& x, const SMatrix& y);
SMatrix operator-(const SMatrix& x, const SMatrix& y);
SVec operator*(const SMatrix& x, const SVec& v);
SMatrix transpose(const SMatrix& x);
SMatrix inverse(const SMatrix& m);

int order_of(const SVec& v);
SVec truncated(const SVec& v, int m);
SVec add(const SVec& x, const SVec& y);
SVec sub(const SVec& x, const SVec& y);
SVec scale(const TruncSeries& s, const SVec& v);
SVec scale(const Scalar& s, const SVec& v);
SVec derive_shift2(const SVec& v);  // b^2 v'
bool is_zero(const SVec& v);
int valuation(const SVec& v);
SVec unit_vector(int k, int i, int order);
QMatrix coeff(const SVec& v, int n);

}  // namespace fresco
