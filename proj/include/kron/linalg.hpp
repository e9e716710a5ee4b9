#pragma once

#include <cmath>
#include <vector>

namespace kron {

using Vec = std::vector<double>;

// Small dense matrix, row-major. Dimensions stay tiny (d <= 8 for lattice
// work), so everything here is plain O(n^3) with partial pivoting.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n);

  Vec col(int j) const;
  void set_col(int j, const Vec& v);
};

Mat mat_mul(const Mat& A, const Mat& B);
Vec mat_vec(const Mat& A, const Vec& x);
Mat transpose(const Mat& A);

double dot(const Vec& x, const Vec& y);
double norm2(const Vec& x);
double norm_inf(const Vec& x);
// L^p norm; p = INFINITY selects the max norm. Requires p >= 1.
double norm_p(const Vec& x, double p);

Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_scale(const Vec& x, double s);

// Determinant via LU with partial pivoting.
double determinant(Mat A);

// Inverse via Gauss-Jordan. Throws RankDeficiencyError on pivot collapse.
Mat inverse(Mat A);

// QR factorization A = Q R with R upper triangular, diag(R) > 0
// (Householder, signs fixed afterwards). A must be square, full rank.
struct QrResult {
  Mat q;
  Mat r;
};
QrResult qr_decompose(const Mat& A);

}  // namespace kron
