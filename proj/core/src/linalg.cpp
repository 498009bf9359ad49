#include "quatgraphs/linalg.hpp"

#include <algorithm>

namespace quatgraphs {

IntMat int_identity(int n) {
  IntMat m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  int n = (int)a.size(), k = (int)b.size(), m = (int)b[0].size();
  IntMat c(n, IntVec(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

bool int_eq(const IntMat& a, const IntMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Int bareiss_det(IntMat a) {
  int n = (int)a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = t / prev;  // exact by Bareiss
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Rat rat_det(RatMat a) {
  int n = (int)a.size();
  if (n == 0) return 1;
  // Clear denominators row by row, then Bareiss.
  Rat factor = 1;
  IntMat b(n, IntVec(n));
  for (int i = 0; i < n; ++i) {
    Int common = 1;
    for (int j = 0; j < n; ++j) common = boost::multiprecision::lcm(common, den(a[i][j]));
    factor /= Rat(common);
    for (int j = 0; j < n; ++j) {
      Rat scaled = a[i][j] * Rat(common);
      QG_CHECK(den(scaled) == 1, "rat_det scaling");
      b[i][j] = num(scaled);
    }
  }
  return factor * Rat(bareiss_det(b));
}

std::vector<Int> leading_minors(const IntMat& a) {
  int n = (int)a.size();
  std::vector<Int> out;
  for (int k = 1; k <= n; ++k) {
    IntMat sub(k, IntVec(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = a[i][j];
    out.push_back(bareiss_det(sub));
  }
  return out;
}

IntMat hnf_columns(IntMat a) {
  if (a.empty()) return a;
  int rows = (int)a.size();
  int cols = (int)a[0].size();
  int pivot_col = 0;
  for (int r = 0; r < rows && pivot_col < cols; ++r) {
    // Eliminate across columns pivot_col..cols-1 in row r by column gcd steps.
    for (;;) {
      int nz = -1;
      for (int c = pivot_col + 1; c < cols; ++c)
        if (a[r][c] != 0) {
          nz = c;
          break;
        }
      if (a[r][pivot_col] == 0) {
        if (nz < 0) break;
        for (int i = 0; i < rows; ++i) std::swap(a[i][pivot_col], a[i][nz]);
        continue;
      }
      if (nz < 0) break;
      // Reduce column nz by the pivot column (Euclid on row r).
      Int q = a[r][nz] / a[r][pivot_col];
      if (q != 0)
        for (int i = 0; i < rows; ++i) a[i][nz] -= q * a[i][pivot_col];
      if (a[r][nz] != 0)
        for (int i = 0; i < rows; ++i) std::swap(a[i][pivot_col], a[i][nz]);
    }
    if (a[r][pivot_col] == 0) continue;  // no pivot in this row
    if (a[r][pivot_col] < 0)
      for (int i = 0; i < rows; ++i) a[i][pivot_col] = -a[i][pivot_col];
    // Reduce earlier columns at this row into [0, pivot).
    for (int c = 0; c < pivot_col; ++c) {
      Int q = a[r][c] / a[r][pivot_col];
      if (a[r][c] - q * a[r][pivot_col] < 0) q -= 1;
      if (q != 0)
        for (int i = 0; i < rows; ++i) a[i][c] -= q * a[i][pivot_col];
    }
    ++pivot_col;
  }
  // Drop zero columns (those at index >= pivot_col are zero by construction).
  for (auto& row : a) row.resize(pivot_col);
  return a;
}

IntMat int_kernel(const IntMat& a) {
  int rows = (int)a.size();
  int cols = (int)a[0].size();
  // Column-reduce [a; I] and collect the I-parts of zero columns of a.
  IntMat work(rows + cols, IntVec(cols, 0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) work[i][j] = a[i][j];
  for (int j = 0; j < cols; ++j) work[rows + j][j] = 1;

  int pivot_col = 0;
  for (int r = 0; r < rows && pivot_col < cols; ++r) {
    for (;;) {
      int nz = -1;
      for (int c = pivot_col + 1; c < cols; ++c)
        if (work[r][c] != 0) {
          nz = c;
          break;
        }
      if (work[r][pivot_col] == 0) {
        if (nz < 0) break;
        for (int i = 0; i < rows + cols; ++i)
          std::swap(work[i][pivot_col], work[i][nz]);
        continue;
      }
      if (nz < 0) break;
      Int q = work[r][nz] / work[r][pivot_col];
      if (q != 0)
        for (int i = 0; i < rows + cols; ++i)
          work[i][nz] -= q * work[i][pivot_col];
      if (work[r][nz] != 0)
        for (int i = 0; i < rows + cols; ++i)
          std::swap(work[i][pivot_col], work[i][nz]);
    }
    if (work[r][pivot_col] != 0) ++pivot_col;
  }
  IntMat ker(cols, IntVec(0));
  int nk = 0;
  for (int c = pivot_col; c < cols; ++c) {
    bool zero = true;
    for (int r = 0; r < rows; ++r)
      if (work[r][c] != 0) zero = false;
    QG_CHECK(zero, "kernel column not annihilated");
    for (int j = 0; j < cols; ++j) ker[j].push_back(work[rows + j][c]);
    ++nk;
  }
  if (nk == 0)
    return IntMat(cols, IntVec(0));
  return ker;  // cols x nk, columns are kernel vectors
}

RatMat rat_inverse(const RatMat& a) {
  int n = (int)a.size();
  RatMat m = a;
  RatMat inv(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    QG_CHECK(piv >= 0, "singular matrix in rat_inverse");
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    Rat d = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  int n = (int)a.size(), k = (int)b.size(), m = (int)b[0].size();
  RatMat c(n, std::vector<Rat>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

std::vector<Rat> rat_apply(const RatMat& a, const std::vector<Rat>& x) {
  std::vector<Rat> y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace quatgraphs
