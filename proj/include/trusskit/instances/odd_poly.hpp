#pragma once

/**
 * @file odd_poly.hpp
 * @brief O(x): integer polynomials with odd coefficient sum, the paragons
 *        P(t0,t1) and evaluation at i.
 */

#include <string>
#include <utility>

#include "trusskit/instances/odd_gauss.hpp"
#include "trusskit/instances/polynomial.hpp"

namespace trusskit {

class OddPoly {
 public:
  /// Throws axiom_error unless the coefficient sum is odd.
  explicit OddPoly(IntPoly p) : p_(std::move(p)) {
    if (!is_odd(p_.value_at_one()))
      throw axiom_error("OddPoly: " + p_.to_string() + " has even coefficient sum");
  }
  OddPoly(std::initializer_list<long> coeffs) : OddPoly(IntPoly(coeffs)) {}

  IntPoly const& poly() const noexcept { return p_; }
  std::string to_string() const { return p_.to_string(); }
  friend bool operator==(OddPoly const&, OddPoly const&) = default;

 private:
  IntPoly p_;
};

/// p / q in lowest terms with positive leading denominator coefficient.
struct RationalFunction {
  IntPoly den, num;
  friend bool operator==(RationalFunction const&, RationalFunction const&) = default;
};

struct OddPolyOps {
  using value_type = OddPoly;

  std::string name() const { return "odd-poly"; }
  bool equal(OddPoly const& a, OddPoly const& b) const { return a == b; }
  OddPoly bracket(OddPoly const& a, OddPoly const& b, OddPoly const& c) const {
    return OddPoly(a.poly() - b.poly() + c.poly());
  }
  OddPoly mul(OddPoly const& a, OddPoly const& b) const { return OddPoly(a.poly() * b.poly()); }
  bool is_absorber(OddPoly const&) const noexcept { return false; }
  bool has_absorber() const noexcept { return false; }
  OddPoly unit() const { return OddPoly{1}; }

  /// Degree <= 8, |coefficients| <= 99.
  OddPoly sample(Rng& rng) const {
    auto const degree = static_cast<std::size_t>(draw(rng, 0, 8));
    std::vector<mpz_class> c;
    long sum = 0;
    for (std::size_t k = 0; k <= degree; ++k) {
      c.emplace_back(draw(rng, -99, 99));
      sum += c.back().get_si();
    }
    if (sum % 2 == 0) c[0] += c[0] < 0 ? 1 : -1;
    if (c.back() == 0) c.back() = 2;  // keep the drawn degree, parity unchanged
    return OddPoly(IntPoly(std::move(c)));
  }
  std::string to_string(OddPoly const& a) const { return a.to_string(); }
  TrussProperties properties() const { return {true, true, true, true}; }

  OreWitness<OddPoly> ore_witness(OddPoly const& x, OddPoly const& y) const { return {y, x}; }

  RationalFunction fraction_normal_form(OddPoly const& den, OddPoly const& num) const {
    OddPoly d = den, n = num;
    reduce_fraction(d, n);
    return {d.poly(), n.poly()};
  }
  std::string normal_form_string(RationalFunction const& f) const {
    return "(" + f.num.to_string() + ")/(" + f.den.to_string() + ")";
  }

  /// Divides out the gcd, whose value at 1 is odd, and fixes the sign.
  void reduce_fraction(OddPoly& den, OddPoly& num) const {
    IntPoly g = gcd(den.poly(), num.poly());
    if (den.poly().leading() < 0) g = -g;
    den = OddPoly(*divide(den.poly(), g));
    num = OddPoly(*divide(num.poly(), g));
  }

  RegularityCertificate regularity_certificate() const {
    return {true, true,
            "subset of the integral domain Z[x] without 0; commutative, so (y,x) is an Ore witness", ""};
  }
};

/// P(t0,t1) = {p : (t1 - t0) | (p - t0)}.
class OddPolyParagon {
 public:
  /// Throws precondition_error when t0 = t1.
  OddPolyParagon(OddPoly t0, OddPoly t1) : t0_(std::move(t0)), t1_(std::move(t1)) {
    if (t0_ == t1_) throw precondition_error("paragon_of_odd_polys: t0 and t1 coincide");
    c_ = t1_.poly() - t0_.poly();
  }

  OddPoly const& t0() const noexcept { return t0_; }
  OddPoly const& t1() const noexcept { return t1_; }
  /// t1 - t0.
  IntPoly const& modulus() const noexcept { return c_; }

  bool contains(OddPoly const& p) const { return divides(c_, p.poly() - t0_.poly()); }
  /// a ~ b iff c | (a - b).
  bool related(OddPoly const& a, OddPoly const& b) const { return divides(c_, a.poly() - b.poly()); }

  /// The class of a absorbs O(x) iff c | t a - a for all t, that is
  /// c | 2a and c | (x - 1)a.
  bool class_is_ideal(OddPoly const& a) const {
    return divides(c_, IntPoly::constant(2) * a.poly()) && divides(c_, IntPoly{-1, 1} * a.poly());
  }

 private:
  OddPoly t0_, t1_;
  IntPoly c_;
};

inline OddPolyParagon paragon_of_odd_polys(OddPoly t0, OddPoly t1) {
  return OddPolyParagon(std::move(t0), std::move(t1));
}

/// p(x) -> p(i); the kernel classes are those of P(x, x^2+x+1).
inline OddGauss gauss_evaluate(OddPoly const& p) {
  static constexpr int re_sign[4] = {1, 0, -1, 0};
  static constexpr int im_sign[4] = {0, 1, 0, -1};
  mpz_class re = 0, im = 0;
  auto const& c = p.poly().coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    re += re_sign[k % 4] * c[k];
    im += im_sign[k % 4] * c[k];
  }
  return {re, im};
}

}  // namespace trusskit
