#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination, kernel or derivation code: matrices are plain
// nested vectors and the derivation equations are written out entry by
// entry from the bilinear identity.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "pushout/bimodule.hpp"

namespace oracle {

using Q = mpq_class;
using Rows = std::vector<std::vector<Q>>;

// Forward elimination only; counts pivots.
inline std::size_t rank(Rows m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline Rows rows_of(const pushout::Matrix& m) {
  Rows out(m.rows(), std::vector<Q>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline std::size_t nullity(const Rows& m, std::size_t cols) { return cols - rank(m); }

// Raw copy of an algebra and module: c[i][j][k], lam[i][r][s], rho[i][r][s].
struct Raw {
  std::size_t na = 0, nx = 0;
  std::vector<std::vector<std::vector<Q>>> c;
  std::vector<Rows> lam, rho;
};

inline Raw raw(const pushout::Bimodule& x) {
  const auto& a = *x.alg();
  Raw out;
  out.na = a.dim();
  out.nx = x.dim();
  out.c.assign(out.na, std::vector<std::vector<Q>>(out.na, std::vector<Q>(out.na)));
  for (std::size_t i = 0; i < out.na; ++i)
    for (std::size_t j = 0; j < out.na; ++j)
      for (std::size_t k = 0; k < out.na; ++k) out.c[i][j][k] = a.structure_constant(i, j, k);
  for (std::size_t i = 0; i < out.na; ++i) {
    out.lam.push_back(rows_of(x.left(i)));
    out.rho.push_back(rows_of(x.right(i)));
  }
  return out;
}

// Unknown D[r][c] (row r of X, column c of A) sits at index r * na + c.
// One equation per (i, j, r):
//   sum_k c(i,j,k) D[r][k] - sum_s lam_i[r][s] D[s][j] - sum_s rho_j[r][s] D[s][i] = 0
inline std::size_t z1_dim(const Raw& w) {
  const std::size_t unknowns = w.nx * w.na;
  Rows eqs;
  for (std::size_t i = 0; i < w.na; ++i)
    for (std::size_t j = 0; j < w.na; ++j)
      for (std::size_t r = 0; r < w.nx; ++r) {
        std::vector<Q> row(unknowns);
        for (std::size_t k = 0; k < w.na; ++k) row[r * w.na + k] += w.c[i][j][k];
        for (std::size_t s = 0; s < w.nx; ++s) {
          row[s * w.na + j] -= w.lam[i][r][s];
          row[s * w.na + i] -= w.rho[j][r][s];
        }
        eqs.push_back(std::move(row));
      }
  return nullity(eqs, unknowns);
}

// Rank of x -> (a -> a.x - x.a), one column per basis vector of X.
inline std::size_t b1_dim(const Raw& w) {
  Rows cols;
  for (std::size_t u = 0; u < w.nx; ++u) {
    std::vector<Q> col;
    for (std::size_t c = 0; c < w.na; ++c)
      for (std::size_t r = 0; r < w.nx; ++r) col.push_back(w.lam[c][r][u] - w.rho[c][r][u]);
    cols.push_back(std::move(col));
  }
  return rank(cols);
}

// Checks the derivation rule on every basis pair by direct summation.
inline bool is_derivation(const Raw& w, const Rows& d) {
  for (std::size_t i = 0; i < w.na; ++i)
    for (std::size_t j = 0; j < w.na; ++j)
      for (std::size_t r = 0; r < w.nx; ++r) {
        Q lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < w.na; ++k) lhs += w.c[i][j][k] * d[r][k];
        for (std::size_t s = 0; s < w.nx; ++s) rhs += w.lam[i][r][s] * d[s][j] + w.rho[j][r][s] * d[s][i];
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace oracle
