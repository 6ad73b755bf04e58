#pragma once

// Integer lattices: Hermite normal form and integer kernels, all in exact
// arbitrary-precision arithmetic.

#include <utility>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/scalars.hpp"

namespace qweyl {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

namespace detail {

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Brings rows[.][0..width) to row echelon form by unimodular row operations
// applied to whole rows (so any trailing columns ride along). Returns the
// number of nonzero rows in the leading block; they come first.
inline std::size_t echelonize(IntMatrix& rows, std::size_t width) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = pivot_row; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer f = floor_div(rows[r][col], rows[pivot_row][col]);
        for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * rows[pivot_row][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }
  return pivot_row;
}

}  // namespace detail

/// Row Hermite normal form of the lattice spanned by `rows`: echelon, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
/// Two row lists span the same lattice iff their forms are equal.
inline IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width) throw InstanceError("ragged integer matrix");
  const std::size_t rank = detail::echelonize(rows, width);
  rows.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t col = 0;
    while (rows[i][col] == 0) ++col;
    if (rows[i][col] < 0)
      for (auto& e : rows[i]) e = -e;
    for (std::size_t k = 0; k < i; ++k) {
      Integer f = detail::floor_div(rows[k][col], rows[i][col]);
      if (f == 0) continue;
      for (std::size_t c = 0; c < width; ++c) rows[k][c] -= f * rows[i][c];
    }
  }
  return rows;
}

/// A Z-basis (in Hermite normal form) of {u in Z^cols : M u = 0}.
inline IntMatrix integer_kernel(const IntMatrix& m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw InstanceError("integer matrix row has wrong width");
  // Rows of [M^T | I]; unimodular row operations keep [M^T | I] = U [M^T | I]
  // so rows whose left block vanishes carry kernel vectors on the right.
  const std::size_t height = m.size();
  IntMatrix aug(cols, IntVector(height + cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < height; ++i) aug[j][i] = m[i][j];
    aug[j][height + j] = 1;
  }
  const std::size_t rank = detail::echelonize(aug, height);
  IntMatrix kernel;
  for (std::size_t r = rank; r < aug.size(); ++r)
    kernel.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(height), aug[r].end());
  return hermite_normal_form(std::move(kernel));
}

/// Membership of u in the lattice with Hermite-form basis `hnf`.
inline bool lattice_contains(const IntMatrix& hnf, IntVector u) {
  for (const auto& row : hnf) {
    std::size_t col = 0;
    while (row[col] == 0) ++col;
    for (std::size_t c = 0; c < col; ++c)
      if (u[c] != 0) return false;
    if (u[col] % row[col] != 0) return false;
    Integer f = u[col] / row[col];
    for (std::size_t c = 0; c < u.size(); ++c) u[c] -= f * row[c];
  }
  for (const auto& e : u)
    if (e != 0) return false;
  return true;
}

}  // namespace qweyl
