#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense integer polynomials: ring operations, exact division,
 *        content and gcd by primitive pseudo-remainder sequences.
 */

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trusskit/error.hpp"

namespace trusskit {

/// Coefficient k multiplies x^k; no trailing zeros, so zero is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }
  static IntPoly constant(mpz_class v) { return IntPoly(std::vector<mpz_class>{std::move(v)}); }
  static IntPoly monomial(std::size_t k, mpz_class v = 1) {
    std::vector<mpz_class> c(k + 1, 0);
    c[k] = std::move(v);
    return IntPoly(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for zero.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  mpz_class coeff(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }
  mpz_class const& leading() const { return c_.back(); }
  std::vector<mpz_class> const& coeffs() const noexcept { return c_; }

  mpz_class value_at_one() const {
    mpz_class s = 0;
    for (auto const& v : c_) s += v;
    return s;
  }

  friend bool operator==(IntPoly const&, IntPoly const&) = default;

  friend IntPoly operator+(IntPoly const& a, IntPoly const& b) {
    std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(IntPoly const& a) {
    auto c = a.c_;
    for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(IntPoly const& a, IntPoly const& b) { return a + (-b); }
  friend IntPoly operator*(IntPoly const& a, IntPoly const& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(mpz_class const& s, IntPoly const& a) {
    auto c = a.c_;
    for (auto& v : c) v *= s;
    return IntPoly(std::move(c));
  }

  /// Exact division by a scalar; throws internal_error if inexact.
  IntPoly divide_exact(mpz_class const& s) const {
    auto c = c_;
    for (auto& v : c) {
      if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t())) throw internal_error("IntPoly: inexact division");
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    }
    return IntPoly(std::move(c));
  }

  /// "3x^2-x+1"; zero prints as "0".
  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      mpz_class const& v = c_[i];
      if (v == 0) continue;
      mpz_class const mag = abs(v);
      if (!out.empty()) out += v < 0 ? "-" : "+";
      else if (v < 0) out += "-";
      if (i == 0 || mag != 1) out += mag.get_str();
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<mpz_class> c_;
};

/// gcd of the coefficients, non-negative; zero for the zero polynomial.
inline mpz_class content(IntPoly const& p) {
  mpz_class g = 0;
  for (auto const& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

inline IntPoly primitive_part(IntPoly const& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  return p.divide_exact(g);
}

/// lc(b)^(deg a - deg b + 1) a = q b + r with deg r < deg b.
inline std::pair<IntPoly, IntPoly> pseudo_divide(IntPoly const& a, IntPoly const& b) {
  if (b.is_zero()) throw precondition_error("pseudo_divide: division by zero");
  IntPoly q, r = a;
  long const db = b.degree();
  mpz_class const lb = b.leading();
  long e = std::max(a.degree() - db + 1, 0L);
  while (!r.is_zero() && r.degree() >= db) {
    auto term = IntPoly::monomial(static_cast<std::size_t>(r.degree() - db), r.leading());
    q = lb * q + term;
    r = lb * r - term * b;
    --e;
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
  return {scale * q, scale * r};
}

/// Exact quotient in Z[x] when b divides a; nullopt otherwise.
inline std::optional<IntPoly> divide(IntPoly const& a, IntPoly const& b) {
  if (b.is_zero()) throw precondition_error("divide: division by zero");
  std::vector<mpz_class> q(a.degree() >= b.degree() ? std::size_t(a.degree() - b.degree() + 1) : 0, 0);
  IntPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (!mpz_divisible_p(r.leading().get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    mpz_class const t = r.leading() / b.leading();
    auto const k = static_cast<std::size_t>(r.degree() - b.degree());
    q[k] = t;
    r = r - IntPoly::monomial(k, t) * b;
  }
  if (!r.is_zero()) return std::nullopt;
  return IntPoly(std::move(q));
}

inline bool divides(IntPoly const& b, IntPoly const& a) { return divide(a, b).has_value(); }

/// gcd in Z[x] with positive leading coefficient; gcd(0,0) = 0.
inline IntPoly gcd(IntPoly const& a, IntPoly const& b) {
  if (a.is_zero()) return content(b) * primitive_part(b);
  if (b.is_zero()) return content(a) * primitive_part(a);
  mpz_class g;
  mpz_class const ca = content(a), cb = content(b);
  mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    auto r = pseudo_divide(x, y).second;
    x = std::move(y);
    y = primitive_part(r);
  }
  return g * primitive_part(x);
}

/// Horner evaluation at an integer point.
inline mpz_class evaluate(IntPoly const& p, mpz_class const& x) {
  mpz_class v = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) v = v * x + p.coeffs()[i];
  return v;
}

}  // namespace trusskit
