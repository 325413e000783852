#ifndef QPC_LINALG_HPP
#define QPC_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qpc/rational.hpp"

namespace qpc {

// Small dense exact linear algebra. Matrices are row-major
// vector<vector<...>>; an m x n matrix maps column vectors of length n
// to column vectors of length m.

using MatQ = std::vector<std::vector<Rat>>;
using VecQ = std::vector<Rat>;

inline MatQ mat_zero(std::size_t rows, std::size_t cols) {
  return MatQ(rows, VecQ(cols, Rat(0)));
}

inline MatQ mat_identity(std::size_t n) {
  MatQ m = mat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline MatQ mat_mul(const MatQ& a, const MatQ& b) {
  std::size_t rows = a.size();
  std::size_t inner = rows ? a[0].size() : 0;
  std::size_t cols = b.empty() ? 0 : b[0].size();
  MatQ c = mat_zero(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline VecQ mat_apply(const MatQ& a, const VecQ& x) {
  VecQ y(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline MatQ mat_transpose(const MatQ& a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  MatQ t = mat_zero(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

/// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(MatQ& m) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline std::size_t rank(MatQ m) { return rref(m).size(); }

/// Basis of the right kernel {x : a x = 0}, one column vector per element.
inline std::vector<VecQ> kernel_basis(MatQ a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<VecQ> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves a x = b; returns one solution if consistent.
inline std::optional<VecQ> solve(MatQ a, VecQ b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a);
  VecQ x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in augmented column
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

// ---------------------------------------------------------------------------
// Linear algebra over F_p (p < 2^31), used for point counting.

using u64 = std::uint64_t;
using MatP = std::vector<std::vector<u64>>;

inline u64 inv_mod(u64 a, u64 p) {
  // extended Euclid
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<u64>(t);
}

/// In-place RREF over F_p; returns pivot columns. Rows are pruned to rank.
inline std::vector<std::size_t> rref_mod(MatP& m, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] % p == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    u64 inv = inv_mod(m[r][c] % p, p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] % p) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      u64 f = m[i][c] % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline std::size_t rank_mod(MatP m, u64 p) { return rref_mod(m, p).size(); }

/// Right kernel over F_p; `cols` is passed explicitly so 0-row matrices keep
/// their column count.
inline std::vector<std::vector<u64>> kernel_mod(MatP a, std::size_t cols, u64 p) {
  auto pivots = rref_mod(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto piv : pivots) is_pivot[piv] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - a[r][free] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Membership of v in the row space of an RREF matrix.
inline bool in_rowspace_mod(const MatP& rrefm,
                            const std::vector<std::size_t>& pivots,
                            std::vector<u64> v, u64 p) {
  for (std::size_t r = 0; r < rrefm.size(); ++r) {
    u64 f = v[pivots[r]] % p;
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = (v[j] + (p - f) * rrefm[r][j]) % p;
  }
  for (u64 x : v)
    if (x % p != 0) return false;
  return true;
}

}  // namespace qpc

#endif
