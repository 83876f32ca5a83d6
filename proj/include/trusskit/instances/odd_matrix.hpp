#pragma once

/**
 * @file odd_matrix.hpp
 * @brief T_n(Z): integer matrices with odd diagonal and even off-diagonal
 *        entries, and T_n(Q), its rational counterpart.
 *
 * det is odd on T_n(Z) and the cofactor matrix stays in T_n(Z), so
 * (det(y) 1) x = (x adj(y)) y gives Ore witnesses in closed form.
 */

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "trusskit/instances/odd_int.hpp"

namespace trusskit {

/// Row-major square matrix over an exact scalar type.
template <typename S>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, S(0)) {}
  SquareMatrix(std::size_t n, std::vector<S> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n * n) throw structure_error("matrix: expected " + std::to_string(n * n) + " entries");
  }
  static SquareMatrix identity(std::size_t n, S const& d = S(1)) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = d;
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  S const& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::vector<S> const& entries() const noexcept { return a_; }

  friend bool operator==(SquareMatrix const&, SquareMatrix const&) = default;

  friend SquareMatrix operator*(SquareMatrix const& x, SquareMatrix const& y) {
    check_dims(x, y);
    SquareMatrix z(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k)
        for (std::size_t j = 0; j < x.n_; ++j) z(i, j) += x(i, k) * y(k, j);
    return z;
  }
  friend SquareMatrix operator*(S const& s, SquareMatrix x) {
    for (auto& v : x.a_) v *= s;
    return x;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Delete row r and column c.
  SquareMatrix minor(std::size_t r, std::size_t c) const {
    SquareMatrix m(n_ - 1);
    for (std::size_t i = 0, mi = 0; i < n_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < n_; ++j)
        if (j != c) m(mi, mj++) = (*this)(i, j);
      ++mi;
    }
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
      s += "]";
    }
    return s + "]";
  }

 private:
  static void check_dims(SquareMatrix const& x, SquareMatrix const& y) {
    if (x.n_ != y.n_) throw precondition_error("matrix: dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<S> a_;
};

/// x - y + z.
template <typename S>
SquareMatrix<S> bracket(SquareMatrix<S> const& x, SquareMatrix<S> const& y, SquareMatrix<S> const& z) {
  if (x.dim() != y.dim() || y.dim() != z.dim()) throw precondition_error("matrix: dimension mismatch");
  std::vector<S> w(x.entries().size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = x.entries()[k] - y.entries()[k] + z.entries()[k];
  return SquareMatrix<S>(x.dim(), std::move(w));
}

using IntMatrix = SquareMatrix<mpz_class>;
using RatMatrix = SquareMatrix<mpq_class>;

/// Fraction-free Gaussian elimination.
inline mpz_class determinant(IntMatrix m) {
  std::size_t const n = m.dim();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline bool in_odd_pattern(IntMatrix const& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (is_odd(m(i, j)) != (i == j)) return false;
  return true;
}

class OddMatrix {
 public:
  /// Throws axiom_error unless the diagonal is odd and the rest even.
  explicit OddMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.dim() == 0) throw axiom_error("OddMatrix: dimension must be at least 1");
    if (!in_odd_pattern(m_)) throw axiom_error("OddMatrix: " + m_.to_string() + " breaks the parity pattern");
  }
  OddMatrix(std::size_t n, std::vector<long> entries)
      : OddMatrix(IntMatrix(n, std::vector<mpz_class>(entries.begin(), entries.end()))) {}

  static OddMatrix identity(std::size_t n, mpz_class const& d = 1) { return OddMatrix(IntMatrix::identity(n, d)); }

  std::size_t dim() const noexcept { return m_.dim(); }
  IntMatrix const& matrix() const noexcept { return m_; }
  mpz_class const& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::string to_string() const { return m_.to_string(); }
  friend bool operator==(OddMatrix const&, OddMatrix const&) = default;

 private:
  IntMatrix m_;
};

/// Odd; throws internal_error otherwise.
inline mpz_class matrix_det(OddMatrix const& m) {
  mpz_class d = determinant(m.matrix());
  if (!is_odd(d)) throw internal_error("matrix_det: even determinant of " + m.to_string());
  return d;
}

/// Signed minors; stays in T_n(Z), and its transpose times m is det(m) 1.
inline OddMatrix matrix_cofactor(OddMatrix const& m) {
  std::size_t const n = m.dim();
  IntMatrix c(n);
  if (n == 1) c(0, 0) = 1;
  else
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        c(i, j) = determinant(m.matrix().minor(i, j));
        if ((i + j) % 2) c(i, j) = -c(i, j);
      }
  if (!in_odd_pattern(c)) throw internal_error("matrix_cofactor: cofactors of " + m.to_string() + " leave T_n(Z)");
  if (c.transpose() * m.matrix() != IntMatrix::identity(n, matrix_det(m)))
    throw internal_error("matrix_cofactor: adjugate identity fails for " + m.to_string());
  return OddMatrix(std::move(c));
}

inline OddMatrix matrix_adjugate(OddMatrix const& m) { return OddMatrix(matrix_cofactor(m).matrix().transpose()); }

/// Diagonal entries odd/odd, off-diagonal even/odd; entries in lowest terms.
class OddRationalMatrix {
 public:
  /// Throws axiom_error when the pattern fails.
  explicit OddRationalMatrix(RatMatrix m) : m_(std::move(m)) {
    for (std::size_t i = 0; i < m_.dim(); ++i)
      for (std::size_t j = 0; j < m_.dim(); ++j) m_(i, j).canonicalize();
    for (std::size_t i = 0; i < m_.dim(); ++i)
      for (std::size_t j = 0; j < m_.dim(); ++j) {
        auto const& q = m_(i, j);
        if (!is_odd(q.get_den()) || is_odd(q.get_num()) != (i == j))
          throw axiom_error("OddRationalMatrix: " + m_.to_string() + " breaks the parity pattern");
      }
  }

  std::size_t dim() const noexcept { return m_.dim(); }
  RatMatrix const& matrix() const noexcept { return m_; }
  mpq_class const& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::string to_string() const { return m_.to_string(); }
  friend bool operator==(OddRationalMatrix const&, OddRationalMatrix const&) = default;

  friend OddRationalMatrix operator*(OddRationalMatrix const& x, OddRationalMatrix const& y) {
    return OddRationalMatrix(x.m_ * y.m_);
  }
  friend OddRationalMatrix bracket(OddRationalMatrix const& x, OddRationalMatrix const& y,
                                   OddRationalMatrix const& z) {
    return OddRationalMatrix(trusskit::bracket(x.m_, y.m_, z.m_));
  }

 private:
  RatMatrix m_;
};

inline RatMatrix to_rational(IntMatrix const& m) {
  return RatMatrix(m.dim(), std::vector<mpq_class>(m.entries().begin(), m.entries().end()));
}

/// den^-1 num over Q by Gauss-Jordan elimination.
inline OddRationalMatrix matrix_fraction_normal_form(OddMatrix const& den, OddMatrix const& num) {
  std::size_t const n = den.dim();
  if (num.dim() != n) throw precondition_error("matrix_fraction_normal_form: dimension mismatch");
  RatMatrix a = to_rational(den.matrix()), x = to_rational(num.matrix());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw internal_error("matrix_fraction_normal_form: singular denominator");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(k, j), a(p, j));
      std::swap(x(k, j), x(p, j));
    }
    mpq_class const pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      x(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      mpq_class const f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        x(i, j) -= f * x(k, j);
      }
    }
  }
  try {
    return OddRationalMatrix(std::move(x));
  } catch (axiom_error const& e) {
    throw internal_error(std::string("matrix_fraction_normal_form: ") + e.what());
  }
}

class OddMatrixOps {
 public:
  using value_type = OddMatrix;

  explicit OddMatrixOps(std::size_t n) : n_(n) {
    if (n < 1) throw precondition_error("odd-matrix: dimension must be at least 1");
  }

  std::size_t dim() const noexcept { return n_; }
  std::string name() const { return "odd-matrix:" + std::to_string(n_); }
  bool equal(OddMatrix const& a, OddMatrix const& b) const { return a == b; }
  OddMatrix bracket(OddMatrix const& a, OddMatrix const& b, OddMatrix const& c) const {
    return OddMatrix(trusskit::bracket(a.matrix(), b.matrix(), c.matrix()));
  }
  OddMatrix mul(OddMatrix const& a, OddMatrix const& b) const { return OddMatrix(a.matrix() * b.matrix()); }
  bool is_absorber(OddMatrix const&) const noexcept { return false; }
  bool has_absorber() const noexcept { return false; }
  OddMatrix unit() const { return OddMatrix::identity(n_); }

  /// Diagonal odd, off-diagonal even, |entries| <= 99.
  OddMatrix sample(Rng& rng) const {
    IntMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = i == j ? draw_odd(rng, 99) : draw_even(rng, 98);
    return OddMatrix(std::move(m));
  }
  std::string to_string(OddMatrix const& a) const { return a.to_string(); }
  TrussProperties properties() const { return {true, true, true, n_ == 1}; }

  /// (det(y) 1, x adj(y)).
  OreWitness<OddMatrix> ore_witness(OddMatrix const& x, OddMatrix const& y) const {
    return {OddMatrix::identity(n_, matrix_det(y)), mul(x, matrix_adjugate(y))};
  }

  OddRationalMatrix fraction_normal_form(OddMatrix const& den, OddMatrix const& num) const {
    return matrix_fraction_normal_form(den, num);
  }
  std::string normal_form_string(OddRationalMatrix const& q) const { return q.to_string(); }

  /// Divides out the gcd of all entries; it divides an odd entry, so is odd.
  void reduce_fraction(OddMatrix& den, OddMatrix& num) const {
    mpz_class g = 0;
    for (auto const* m : {&den.matrix(), &num.matrix()})
      for (auto const& v : m->entries()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
    auto divide = [&g](OddMatrix const& m) {
      auto e = m.matrix().entries();
      for (auto& v : e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      return OddMatrix(IntMatrix(m.dim(), std::move(e)));
    };
    den = divide(den);
    num = divide(num);
  }

  RegularityCertificate regularity_certificate() const {
    return {true, true,
            "det is odd, hence nonzero, so every element is invertible over Q and cancels; "
            "(det(y) 1) x = (x adj(y)) y is an Ore witness",
            ""};
  }

 private:
  std::size_t n_;
};

}  // namespace trusskit
