#include "tnfactor/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

namespace tnfactor {

std::string to_string(ScalarKind k) {
  switch (k) {
    case ScalarKind::exact: return "exact";
    case ScalarKind::radical: return "radical";
    case ScalarKind::floating: return "float";
  }
  return "?";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, ScalarKind kind)
    : rows_(rows), cols_(cols), kind_(kind) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

Matrix Matrix::exact(std::size_t rows, std::size_t cols, std::vector<Rational> data) {
  Matrix m(rows, cols, ScalarKind::exact);
  if (data.size() != rows * cols) throw Error("matrix data size does not match dimensions");
  m.data_ = std::move(data);
  return m;
}

Matrix Matrix::radical(std::size_t rows, std::size_t cols, std::vector<Radical> data) {
  Matrix m(rows, cols, ScalarKind::radical);
  if (data.size() != rows * cols) throw Error("matrix data size does not match dimensions");
  m.data_ = std::move(data);
  return m;
}

Matrix Matrix::floating(std::size_t rows, std::size_t cols, std::vector<double> data) {
  Matrix m(rows, cols, ScalarKind::floating);
  if (data.size() != rows * cols) throw Error("matrix data size does not match dimensions");
  for (double v : data)
    if (!std::isfinite(v)) throw Error("float matrix entries must be finite");
  m.data_ = std::move(data);
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  return build_exact(n, n, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
}

void Matrix::check_index(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error("matrix index out of range");
}

const Rational& Matrix::at_exact(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return exact_data()[i * cols_ + j];
}

const Radical& Matrix::at_radical(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return radical_data()[i * cols_ + j];
}

double Matrix::at_floating(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return floating_data()[i * cols_ + j];
}

const std::vector<Rational>& Matrix::exact_data() const {
  if (kind_ != ScalarKind::exact) throw Error("matrix is not of exact kind");
  return std::get<std::vector<Rational>>(data_);
}

const std::vector<Radical>& Matrix::radical_data() const {
  if (kind_ != ScalarKind::radical) throw Error("matrix is not of radical kind");
  return std::get<std::vector<Radical>>(data_);
}

const std::vector<double>& Matrix::floating_data() const {
  if (kind_ != ScalarKind::floating) throw Error("matrix is not of float kind");
  return std::get<std::vector<double>>(data_);
}

std::string Matrix::entry_str(std::size_t i, std::size_t j) const {
  check_index(i, j);
  switch (kind_) {
    case ScalarKind::exact: return at_exact(i, j).str();
    case ScalarKind::radical: return at_radical(i, j).str();
    case ScalarKind::floating: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", at_floating(i, j));
      return buf;
    }
  }
  return "?";
}

Matrix Matrix::to_floating() const {
  std::vector<double> data;
  data.reserve(rows_ * cols_);
  switch (kind_) {
    case ScalarKind::exact:
      for (const auto& v : exact_data()) data.push_back(to_double(v));
      break;
    case ScalarKind::radical:
      for (const auto& v : radical_data()) data.push_back(to_double(v));
      break;
    case ScalarKind::floating:
      data = floating_data();
      break;
  }
  return floating(rows_, cols_, std::move(data));
}

Matrix Matrix::transposed() const {
  auto transpose_into = [&](const auto& src) {
    auto out = src;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = src[i * cols_ + j];
    return out;
  };
  switch (kind_) {
    case ScalarKind::exact: return exact(cols_, rows_, transpose_into(exact_data()));
    case ScalarKind::radical: return radical(cols_, rows_, transpose_into(radical_data()));
    case ScalarKind::floating: return floating(cols_, rows_, transpose_into(floating_data()));
  }
  throw Error("unreachable");
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.kind_ == b.kind_ && a.data_ == b.data_;
}

MinorSpec::MinorSpec(std::vector<std::size_t> r, std::vector<std::size_t> c)
    : rows(std::move(r)), cols(std::move(c)) {
  if (rows.empty() || rows.size() != cols.size())
    throw Error("minor spec needs equal-length, nonempty index sets");
  for (const auto* idx : {&rows, &cols})
    for (std::size_t i = 1; i < idx->size(); ++i)
      if ((*idx)[i - 1] >= (*idx)[i])
        throw Error("minor spec indices must be strictly increasing");
}

namespace {

// Per-entry accumulator for radical matrix products: a rational part
// plus at most one unresolved radical term. Anything else cannot be
// represented by the scalar model.
class RadicalSum {
public:
  void add(const RadicalProduct& term) {
    if (std::holds_alternative<Rational>(term)) {
      rational_ += std::get<Rational>(term);
      return;
    }
    const Radical& t = std::get<Radical>(term);
    if (t.is_zero()) return;
    if (radical_.is_zero()) {
      radical_ = t;
    } else if (radical_.radicand() == t.radicand()) {
      radical_ = Radical(radical_.coefficient() + t.coefficient(), radical_.radicand());
    } else {
      throw Error("irreducible radical product: radicands sqrt(" + radical_.radicand().str() +
                  ") and sqrt(" + t.radicand().str() + ") cannot be combined");
    }
  }

  Radical result() const {
    if (radical_.is_zero()) return Radical::from_rational(rational_);
    if (rational_.is_zero()) return radical_;
    throw Error("irreducible radical product: rational part " + rational_.str() +
                " cannot be combined with " + radical_.str());
  }

private:
  Rational rational_{0};
  Radical radical_{};
};

Matrix mul_exact(const Matrix& a, const Matrix& b) {
  std::vector<Rational> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational acc(0);
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at_exact(i, k) * b.at_exact(k, j);
      out.push_back(std::move(acc));
    }
  return Matrix::exact(a.rows(), b.cols(), std::move(out));
}

Matrix mul_floating(const Matrix& a, const Matrix& b) {
  std::vector<double> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at_floating(i, k) * b.at_floating(k, j);
      out.push_back(acc);
    }
  return Matrix::floating(a.rows(), b.cols(), std::move(out));
}

Radical radical_entry(const Matrix& m, std::size_t i, std::size_t j) {
  if (m.kind() == ScalarKind::radical) return m.at_radical(i, j);
  return Radical::from_rational(m.at_exact(i, j));
}

Matrix mul_radical(const Matrix& a, const Matrix& b) {
  std::vector<Radical> out;
  out.reserve(a.rows() * b.cols());
  bool all_rational = true;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      RadicalSum sum;
      for (std::size_t k = 0; k < a.cols(); ++k)
        sum.add(radical_mul(radical_entry(a, i, k), radical_entry(b, k, j)));
      Radical r = sum.result();
      all_rational = all_rational && r.is_rational();
      out.push_back(std::move(r));
    }
  if (all_rational) {
    std::vector<Rational> exact_out;
    exact_out.reserve(out.size());
    for (const auto& r : out) exact_out.push_back(r.as_rational());
    return Matrix::exact(a.rows(), b.cols(), std::move(exact_out));
  }
  return Matrix::radical(a.rows(), b.cols(), std::move(out));
}

} // namespace

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw Error("dimension mismatch in matrix product: " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                std::to_string(b.cols()));
  bool a_fl = a.kind() == ScalarKind::floating, b_fl = b.kind() == ScalarKind::floating;
  if (a_fl != b_fl)
    throw Error("kind mismatch in matrix product: float matrices multiply only with float");
  if (a_fl) return mul_floating(a, b);
  if (a.kind() == ScalarKind::exact && b.kind() == ScalarKind::exact) return mul_exact(a, b);
  return mul_radical(a, b);
}

namespace {

// Scales each row by the lcm of its denominators. Returns the integer
// matrix and the product of all row scales.
std::vector<mpz_class> clear_denominators(const Matrix& a, mpz_class* scale_product) {
  std::vector<mpz_class> out(a.rows() * a.cols());
  *scale_product = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class row_lcm(1);
    for (std::size_t j = 0; j < a.cols(); ++j)
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
              a.at_exact(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& v = a.at_exact(i, j);
      out[i * a.cols() + j] = v.numerator() * (row_lcm / v.denominator());
    }
    *scale_product *= row_lcm;
  }
  return out;
}

} // namespace

Rational det_exact(const Matrix& a) {
  if (!a.is_square()) throw Error("determinant requires a square matrix");
  const std::size_t n = a.rows();
  mpz_class denom;
  std::vector<mpz_class> w = clear_denominators(a, &denom);
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return w[i * n + j]; };

  int sign = 1;
  mpz_class prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    if (k + 1 == n) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        // Exact by Sylvester's determinant identity.
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  mpz_class det_int = at(n - 1, n - 1);
  if (sign < 0) det_int = -det_int;
  return Rational(std::move(det_int), std::move(denom));
}

double det_float(const Matrix& a) {
  if (!a.is_square()) throw Error("determinant requires a square matrix");
  const Matrix fl = a.kind() == ScalarKind::floating ? a : a.to_floating();
  const std::size_t n = fl.rows();
  std::vector<double> w = fl.floating_data();
  auto at = [&](std::size_t i, std::size_t j) -> double& { return w[i * n + j]; };

  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(at(i, k)) > std::fabs(at(pivot, k))) pivot = i;
    if (at(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      det = -det;
    }
    det *= at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = at(i, k) / at(k, k);
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
    }
  }
  return det;
}

std::size_t rank_exact(const Matrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  mpz_class denom_unused;
  std::vector<mpz_class> w = clear_denominators(a, &denom_unused);
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return w[i * n + j]; };

  std::size_t rank = 0;
  mpz_class prev(1);
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = k; i < m && pi == m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m) break;
    if (pi != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pi, j));
    if (pj != k)
      for (std::size_t i = 0; i < m; ++i) std::swap(at(i, k), at(i, pj));
    ++rank;
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return rank;
}

Matrix submatrix(const Matrix& a, const MinorSpec& spec) {
  if (spec.rows.back() >= a.rows() || spec.cols.back() >= a.cols())
    throw Error("minor spec index out of range");
  const std::size_t k = spec.order();
  switch (a.kind()) {
    case ScalarKind::exact:
      return Matrix::build_exact(k, k, [&](std::size_t i, std::size_t j) {
        return a.at_exact(spec.rows[i], spec.cols[j]);
      });
    case ScalarKind::floating:
      return Matrix::build_floating(k, k, [&](std::size_t i, std::size_t j) {
        return a.at_floating(spec.rows[i], spec.cols[j]);
      });
    case ScalarKind::radical: {
      std::vector<Radical> data;
      data.reserve(k * k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) data.push_back(a.at_radical(spec.rows[i], spec.cols[j]));
      return Matrix::radical(k, k, std::move(data));
    }
  }
  throw Error("unreachable");
}

Rational minor_exact(const Matrix& a, const MinorSpec& spec) {
  return det_exact(submatrix(a, spec));
}

double minor_float(const Matrix& a, const MinorSpec& spec) {
  return det_float(submatrix(a, spec));
}

} // namespace tnfactor
