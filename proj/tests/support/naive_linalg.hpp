#pragma once

// Independent oracles for the exact kernels: cofactor-expansion
// determinants and a from-scratch minor enumerator. Deliberately kept
// free of the library's Bareiss / elimination code paths.

#include <cstdlib>
#include <optional>
#include <vector>

#include "tnfactor/matrix.hpp"

namespace test_support {

using tnfactor::Matrix;
using tnfactor::Rational;

inline Rational naive_det_rows(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<Rational>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(a[i][jj]);
      sub.push_back(std::move(row));
    }
    Rational term = a[0][j] * naive_det_rows(sub);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

inline Rational naive_det(const Matrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at_exact(i, j);
  return naive_det_rows(rows);
}

struct NaiveVerdict {
  bool holds = true;
  std::vector<std::size_t> witness_rows, witness_cols;
  Rational witness_value{0};
};

namespace detail {

inline void subsets_of_order(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>* out) {
  std::vector<std::size_t> cur;
  // Plain recursive lexicographic generation.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out->push_back(cur);
      return;
    }
    for (std::size_t v = start; v + (k - cur.size()) <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

} // namespace detail

/// First violating minor (orders 1..k, lexicographic row sets then
/// column sets) of the TP (strict) or TN (nonstrict) condition.
inline NaiveVerdict naive_check(const Matrix& a, std::size_t k, bool strict) {
  for (std::size_t order = 1; order <= k; ++order) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    detail::subsets_of_order(a.rows(), order, &row_sets);
    detail::subsets_of_order(a.cols(), order, &col_sets);
    for (const auto& rows : row_sets)
      for (const auto& cols : col_sets) {
        std::vector<std::vector<Rational>> sub(order, std::vector<Rational>(order));
        for (std::size_t i = 0; i < order; ++i)
          for (std::size_t j = 0; j < order; ++j) sub[i][j] = a.at_exact(rows[i], cols[j]);
        Rational d = naive_det_rows(sub);
        bool bad = strict ? d.sign() <= 0 : d.sign() < 0;
        if (bad) return NaiveVerdict{false, rows, cols, d};
      }
  }
  return NaiveVerdict{};
}

} // namespace test_support
