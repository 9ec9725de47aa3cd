#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "specht/field.hpp"

namespace specht {

template <class T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& fill)
      : rows(r), cols(c), a(r * c, fill) {}

  T& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
  }
};

template <class F>
struct Echelon {
  Matrix<typename F::Elem> mat;  // reduced row-echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Reduced row echelon form. Pivot choice is deterministic: first nonzero
// entry in column order, scanning rows top to bottom.
template <class F>
Echelon<F> row_echelon(const F& f, Matrix<typename F::Elem> m) {
  Echelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && f.is_zero(m.at(p, c))) ++p;
    if (p == m.rows) continue;
    m.swap_rows(p, r);
    typename F::Elem inv_pivot = f.div(f.one(), m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j)
      m.at(r, j) = f.mul(m.at(r, j), inv_pivot);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      typename F::Elem factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = out.pivots.size();
  out.mat = std::move(m);
  return out;
}

template <class F>
std::size_t rank_of(const F& f, Matrix<typename F::Elem> m) {
  return row_echelon(f, std::move(m)).rank;
}

// Basis of the null space {x : m x = 0}; size = cols - rank.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel(
    const F& f, const Matrix<typename F::Elem>& m) {
  Echelon<F> e = row_echelon(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<typename F::Elem> x(m.cols, f.zero());
    x[fc] = f.one();
    for (std::size_t r = 0; r < e.rank; ++r)
      x[e.pivots[r]] = f.neg(e.mat.at(r, fc));
    basis.push_back(std::move(x));
  }
  return basis;
}

// Solves a x = b; empty result when the system is inconsistent. Free
// variables, if any, are set to zero.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(
    const F& f, const Matrix<typename F::Elem>& a,
    const std::vector<typename F::Elem>& b) {
  if (b.size() != a.rows) throw std::invalid_argument("solve: size mismatch");
  Matrix<typename F::Elem> aug(a.rows, a.cols + 1, f.zero());
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i];
  }
  Echelon<F> e = row_echelon(f, std::move(aug));
  for (std::size_t r = 0; r < e.rank; ++r)
    if (e.pivots[r] == a.cols) return std::nullopt;
  std::vector<typename F::Elem> x(a.cols, f.zero());
  for (std::size_t r = 0; r < e.rank; ++r)
    x[e.pivots[r]] = e.mat.at(r, a.cols);
  return x;
}

}  // namespace specht
