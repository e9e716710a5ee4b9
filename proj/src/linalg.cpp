#include "kron/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "kron/errors.hpp"

namespace kron {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec Mat::col(int j) const {
  Vec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

void Mat::set_col(int j, const Vec& v) {
  for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

Mat mat_mul(const Mat& A, const Mat& B) {
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      double aik = A(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
    }
  return C;
}

Vec mat_vec(const Mat& A, const Vec& x) {
  Vec y(A.rows, 0.0);
  for (int i = 0; i < A.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < A.cols; ++j) s += A(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(const Vec& x) { return std::sqrt(dot(x, x)); }

double norm_inf(const Vec& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::fabs(v));
  return m;
}

double norm_p(const Vec& x, double p) {
  if (std::isinf(p)) return norm_inf(x);
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::fabs(v);
    return s;
  }
  if (p == 2.0) return norm2(x);
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), p);
  return std::pow(s, 1.0 / p);
}

Vec vec_sub(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec vec_add(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec vec_scale(const Vec& x, double s) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] * s;
  return r;
}

double determinant(Mat A) {
  int n = A.rows;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(A(i, k)) > std::fabs(A(piv, k))) piv = i;
    if (A(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(k, j));
      det = -det;
    }
    det *= A(k, k);
    for (int i = k + 1; i < n; ++i) {
      double f = A(i, k) / A(k, k);
      for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
    }
  }
  return det;
}

Mat inverse(Mat A) {
  int n = A.rows;
  Mat inv = Mat::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(A(i, k)) > std::fabs(A(piv, k))) piv = i;
    if (std::fabs(A(piv, k)) < 1e-300)
      throw RankDeficiencyError("inverse: pivot collapsed, matrix is singular");
    if (piv != k)
      for (int j = 0; j < n; ++j) {
        std::swap(A(piv, j), A(k, j));
        std::swap(inv(piv, j), inv(k, j));
      }
    double d = A(k, k);
    for (int j = 0; j < n; ++j) {
      A(k, j) /= d;
      inv(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      double f = A(i, k);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        A(i, j) -= f * A(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

QrResult qr_decompose(const Mat& A) {
  int n = A.rows;
  Mat R = A;
  Mat Q = Mat::identity(n);
  // Householder reflections applied from the left; Q accumulates them.
  for (int k = 0; k < n - 1; ++k) {
    double nx = 0.0;
    for (int i = k; i < n; ++i) nx += R(i, k) * R(i, k);
    nx = std::sqrt(nx);
    if (nx < 1e-300) continue;
    double alpha = (R(k, k) > 0) ? -nx : nx;
    Vec v(n, 0.0);
    v[k] = R(k, k) - alpha;
    for (int i = k + 1; i < n; ++i) v[i] = R(i, k);
    double vv = dot(v, v);
    if (vv < 1e-300) continue;
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = k; i < n; ++i) s += v[i] * R(i, j);
      s *= 2.0 / vv;
      for (int i = k; i < n; ++i) R(i, j) -= s * v[i];
    }
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int i = k; i < n; ++i) s += v[i] * Q(j, i);
      s *= 2.0 / vv;
      for (int i = k; i < n; ++i) Q(j, i) -= s * v[i];
    }
  }
  // Fix signs so diag(R) > 0.
  for (int k = 0; k < n; ++k) {
    if (R(k, k) < 0) {
      for (int j = 0; j < n; ++j) R(k, j) = -R(k, j);
      for (int i = 0; i < n; ++i) Q(i, k) = -Q(i, k);
    }
    for (int i = k + 1; i < n; ++i) R(i, k) = 0.0;  // clean numerical dust
  }
  return {Q, R};
}

}  // namespace kron
