#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "tnfactor/radical.hpp"
#include "tnfactor/rational.hpp"

namespace tnfactor {

enum class ScalarKind { exact, radical, floating };

std::string to_string(ScalarKind k);

/// Dense rectangular matrix over one scalar kind, immutable after
/// construction. Float entries are validated finite; exact and radical
/// entries are canonical by construction of their scalar types.
class Matrix {
public:
  static Matrix exact(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  static Matrix radical(std::size_t rows, std::size_t cols, std::vector<Radical> data);
  static Matrix floating(std::size_t rows, std::size_t cols, std::vector<double> data);
  static Matrix identity(std::size_t n);

  template <class F>
  static Matrix build_exact(std::size_t rows, std::size_t cols, F&& entry) {
    std::vector<Rational> data;
    data.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) data.push_back(entry(i, j));
    return exact(rows, cols, std::move(data));
  }

  template <class F>
  static Matrix build_floating(std::size_t rows, std::size_t cols, F&& entry) {
    std::vector<double> data;
    data.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) data.push_back(entry(i, j));
    return floating(rows, cols, std::move(data));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  ScalarKind kind() const { return kind_; }

  const Rational& at_exact(std::size_t i, std::size_t j) const;
  const Radical& at_radical(std::size_t i, std::size_t j) const;
  double at_floating(std::size_t i, std::size_t j) const;

  const std::vector<Rational>& exact_data() const;
  const std::vector<Radical>& radical_data() const;
  const std::vector<double>& floating_data() const;

  /// Entry as a display string in the scalar-core formats.
  std::string entry_str(std::size_t i, std::size_t j) const;

  Matrix to_floating() const;
  Matrix transposed() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  Matrix(std::size_t rows, std::size_t cols, ScalarKind kind);
  void check_index(std::size_t i, std::size_t j) const;

  std::size_t rows_, cols_;
  ScalarKind kind_;
  std::variant<std::vector<Rational>, std::vector<Radical>, std::vector<double>> data_;
};

/// Equal-length, strictly increasing 0-based row/column index sets
/// selecting a square submatrix.
struct MinorSpec {
  std::vector<std::size_t> rows, cols;

  MinorSpec(std::vector<std::size_t> r, std::vector<std::size_t> c);
  std::size_t order() const { return rows.size(); }
};

/// Product with exact kind promotion: exact*exact stays exact,
/// float*float stays float, and any product involving radicals resolves
/// entrywise through radical_mul. A radical accumulation that mixes a
/// rational part with an unresolved radical part (or two different
/// radicands) cannot be represented and raises an Error.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// Exact determinant by fraction-free Bareiss elimination (rows are
/// cleared to integers first, so all intermediate divisions are exact
/// integer divisions).
Rational det_exact(const Matrix& a);

/// Float determinant by LU with partial pivoting.
double det_float(const Matrix& a);

/// Rank over the rationals via fraction-free elimination with full
/// pivot search.
std::size_t rank_exact(const Matrix& a);

Matrix submatrix(const Matrix& a, const MinorSpec& spec);
Rational minor_exact(const Matrix& a, const MinorSpec& spec);
double minor_float(const Matrix& a, const MinorSpec& spec);

} // namespace tnfactor
