#include "ssp/matq.hpp"

namespace ssp {

Mat mat_identity(int n) {
  Mat m(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

bool mat_is_square(const Mat& a) {
  for (const auto& row : a)
    if (row.size() != a.size()) return false;
  return !a.empty();
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  Mat c(n, std::vector<Rat>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Mat mat_transpose(const Mat& a) {
  size_t n = a.size(), m = a[0].size();
  Mat t(m, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

bool mat_is_symmetric(const Mat& a) {
  if (!mat_is_square(a)) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j] != a[j][i]) return false;
  return true;
}

Rat mat_det(Mat a) {
  if (!mat_is_square(a)) throw domain_error("mat_det: not square");
  int n = static_cast<int>(a.size());
  Rat det = 1;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

Mat mat_inverse(const Mat& a) {
  if (!mat_is_square(a)) throw domain_error("mat_inverse: not square");
  int n = static_cast<int>(a.size());
  Mat w = a;
  Mat inv = mat_identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (w[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw domain_error("mat_inverse: singular matrix");
    std::swap(w[piv], w[k]);
    std::swap(inv[piv], inv[k]);
    Rat d = w[k][k];
    for (int j = 0; j < n; ++j) {
      w[k][j] /= d;
      inv[k][j] /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w[i][k] == 0) continue;
      Rat f = w[i][k];
      for (int j = 0; j < n; ++j) {
        w[i][j] -= f * w[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

std::vector<Rat> mat_apply(const Mat& a, const std::vector<Rat>& x) {
  std::vector<Rat> y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace ssp
