#pragma once
// Independent reference constructions for the unit tests. Nothing here goes
// through the catalog or the solvers under test.

#include <gmpxx.h>

#include <array>
#include <vector>

#include "s4lie/algebra.hpp"

namespace oracle {

using s4lie::Algebra;
using s4lie::Field;
using s4lie::Matrix;
using s4lie::MulEntry;
using s4lie::Index;
using Dense = std::vector<std::vector<mpq_class>>;

inline std::size_t dense_rank(Dense m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// c[i][j][k] as a dense cube.
struct Table {
  std::size_t n;
  std::vector<mpq_class> c;
  explicit Table(std::size_t n_) : n(n_), c(n_ * n_ * n_, 0) {}
  mpq_class& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
  const mpq_class& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
};

inline Table table_of(const Algebra& a) {
  Table t(a.dim());
  for (const auto& e : a.mul_entries()) t.at(e.i, e.j, e.k) += e.c.rational_part();
  return t;
}

inline Algebra algebra_of(const Table& t, std::optional<Dense> bar = {}, std::optional<Dense> form = {}) {
  const Field q;
  std::vector<MulEntry> mul;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k)
        if (t.at(i, j, k) != 0)
          mul.push_back({Index(i), Index(j), Index(k), q.make(t.at(i, j, k))});
  auto mat = [&](const Dense& d) {
    Matrix m(t.n, t.n, q);
    for (std::size_t r = 0; r < t.n; ++r)
      for (std::size_t c = 0; c < t.n; ++c)
        if (d[r][c] != 0) m.set(r, c, q.make(d[r][c]));
    return m;
  };
  std::optional<Matrix> b, f;
  if (bar) b = mat(*bar);
  if (form) f = mat(*form);
  return Algebra(q, t.n, mul, b, f);
}

inline Dense diag(std::size_t n, const std::vector<mpq_class>& d) {
  Dense m(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = d[i];
  return m;
}

// Hamilton quaternions 1, i, j, k with conjugation and polar form 2 delta.
inline Algebra quaternions() {
  Table t(4);
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t.at(a, b, idx[a][b]) = sign[a][b];
  return algebra_of(t, diag(4, {1, -1, -1, -1}), diag(4, {2, 2, 2, 2}));
}

// Octonions from the Fano plane: e_a e_b = e_c on the lines below (cyclically).
inline Algebra octonions() {
  Table t(8);
  const int lines[7][3] = {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}};
  for (int a = 0; a < 8; ++a) {
    t.at(0, a, a) = 1;
    t.at(a, 0, a) = 1;
  }
  for (int a = 1; a < 8; ++a) t.at(a, a, 0) = -1;
  for (const auto& l : lines)
    for (int r = 0; r < 3; ++r) {
      const int x = l[r], y = l[(r + 1) % 3], z = l[(r + 2) % 3];
      t.at(x, y, z) = 1;
      t.at(y, x, z) = -1;
    }
  return algebra_of(t, diag(8, {1, -1, -1, -1, -1, -1, -1, -1}), diag(8, {2, 2, 2, 2, 2, 2, 2, 2}));
}

// Symmetric n x n rational matrices with x.y = (xy + yx)/2 and bar = id.
// Basis E_ii, then E_ij + E_ji for i < j.
inline Algebra jordan(std::size_t n) {
  std::vector<Dense> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Dense m(n, std::vector<mpq_class>(n, 0));
    m[i][i] = 1;
    basis.push_back(m);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Dense m(n, std::vector<mpq_class>(n, 0));
      m[i][j] = m[j][i] = 1;
      basis.push_back(m);
    }
  const std::size_t d = basis.size();
  auto mul = [&](const Dense& x, const Dense& y) {
    Dense z(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) z[i][j] += (x[i][k] * y[k][j] + y[i][k] * x[k][j]) / 2;
    return z;
  };
  // coordinates: diagonal entries, then upper entries
  auto coords = [&](const Dense& z) {
    std::vector<mpq_class> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(z[i][i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) c.push_back(z[i][j]);
    return c;
  };
  Table t(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto c = coords(mul(basis[a], basis[b]));
      for (std::size_t k = 0; k < d; ++k) t.at(a, b, k) = c[k];
    }
  std::vector<mpq_class> ones(d, 1);
  return algebra_of(t, diag(d, ones));
}

// Unknowns D[r][c] (n^2 of them): D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0,
// plus D B = B D when bar is given. Returns dim of the solution space.
inline std::size_t derivation_dim(const Table& t, const Dense* bar = nullptr) {
  const std::size_t n = t.n, u = n * n;
  Dense eqs;
  auto var = [&](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // coefficient of e_k
        std::vector<mpq_class> row(u, 0);
        for (std::size_t m = 0; m < n; ++m) row[var(k, m)] += t.at(i, j, m);
        for (std::size_t m = 0; m < n; ++m) {
          row[var(m, i)] -= t.at(m, j, k);
          row[var(m, j)] -= t.at(i, m, k);
        }
        eqs.push_back(std::move(row));
      }
  if (bar)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<mpq_class> row(u, 0);
        for (std::size_t m = 0; m < n; ++m) {
          row[var(r, m)] += (*bar)[m][c];
          row[var(m, c)] -= (*bar)[r][m];
        }
        eqs.push_back(std::move(row));
      }
  return u - dense_rank(std::move(eqs));
}

// Dimension of the space of triples (d0, d1, d2) with
//   bar(d_i)(e_a e_b) = d_{i+1}(e_a) e_b + e_a d_{i+2}(e_b),   bar(d) = B d B,
// for every basis pair; without bar this is stri.
inline std::size_t triality_dim(const Table& t, const Dense* bar = nullptr) {
  const std::size_t n = t.n, u = 3 * n * n;
  auto var = [&](std::size_t i, std::size_t r, std::size_t c) { return (i % 3) * n * n + r * n + c; };
  Dense eqs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<mpq_class> row(u, 0);
          // lhs: sum_m c[a][b][m] * (B d_i B)[k][m]
          for (std::size_t m = 0; m < n; ++m) {
            if (t.at(a, b, m) == 0) continue;
            if (!bar) {
              row[var(i, k, m)] += t.at(a, b, m);
              continue;
            }
            for (std::size_t p = 0; p < n; ++p)
              for (std::size_t q = 0; q < n; ++q)
                if ((*bar)[k][p] != 0 && (*bar)[q][m] != 0)
                  row[var(i, p, q)] += t.at(a, b, m) * (*bar)[k][p] * (*bar)[q][m];
          }
          for (std::size_t m = 0; m < n; ++m) {
            row[var(i + 1, m, a)] -= t.at(m, b, k);
            row[var(i + 2, m, b)] -= t.at(a, m, k);
          }
          eqs.push_back(std::move(row));
        }
  return u - dense_rank(std::move(eqs));
}

inline Dense dense_of(const Matrix& m) {
  Dense d(m.rows(), std::vector<mpq_class>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) d[r][e.index] = e.value.rational_part();
  return d;
}

// Same solves with scalars of an arbitrary field (Q(sqrt d) included).
using s4lie::Scalar;
using SDense = std::vector<std::vector<Scalar>>;

inline std::size_t dense_rank(SDense m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      Scalar f = m[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

// c(i, j, k) of an algebra over any field.
inline std::vector<Scalar> cube(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> c(n * n * n, a.field().zero());
  for (const auto& e : a.mul_entries()) c[(e.i * n + e.j) * n + e.k] += e.c;
  return c;
}

inline std::size_t derivation_dim_any(const Algebra& a) {
  const std::size_t n = a.dim(), u = n * n;
  const auto c = cube(a);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& { return c[(i * n + j) * n + k]; };
  SDense eqs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Scalar> row(u, a.field().zero());
        for (std::size_t m = 0; m < n; ++m) {
          row[k * n + m] += at(i, j, m);
          row[m * n + i] -= at(m, j, k);
          row[m * n + j] -= at(i, m, k);
        }
        eqs.push_back(std::move(row));
      }
  return u - dense_rank(std::move(eqs));
}

inline std::size_t stri_dim_any(const Algebra& a) {
  const std::size_t n = a.dim(), u = 3 * n * n;
  const auto c = cube(a);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& { return c[(i * n + j) * n + k]; };
  auto var = [&](std::size_t i, std::size_t r, std::size_t col) { return (i % 3) * n * n + r * n + col; };
  SDense eqs;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Scalar> row(u, a.field().zero());
          for (std::size_t m = 0; m < n; ++m) {
            row[var(i, k, m)] += at(x, y, m);
            row[var(i + 1, m, x)] -= at(m, y, k);
            row[var(i + 2, m, y)] -= at(x, m, k);
          }
          eqs.push_back(std::move(row));
        }
  return u - dense_rank(std::move(eqs));
}

}  // namespace oracle
