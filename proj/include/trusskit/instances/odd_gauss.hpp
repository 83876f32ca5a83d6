#pragma once

/**
 * @file odd_gauss.hpp
 * @brief O(i): Gaussian integers m + ni with m + n odd.
 */

#include <gmpxx.h>

#include <string>
#include <utility>

#include "trusskit/instances/odd_int.hpp"

namespace trusskit {

class OddGauss {
 public:
  /// Throws axiom_error unless re + im is odd.
  OddGauss(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {
    if (!is_odd(re_ + im_))
      throw axiom_error("OddGauss: " + re_.get_str() + "+" + im_.get_str() + "i has even m+n");
  }

  mpz_class const& re() const noexcept { return re_; }
  mpz_class const& im() const noexcept { return im_; }
  friend bool operator==(OddGauss const&, OddGauss const&) = default;

  std::string to_string() const {
    std::string s = re_.get_str();
    if (im_ >= 0) s += "+";
    return s + im_.get_str() + "i";
  }

 private:
  mpz_class re_, im_;
};

/// A point of Q(i) as a pair of reduced rationals.
struct GaussianRational {
  mpq_class re, im;
  friend bool operator==(GaussianRational const&, GaussianRational const&) = default;
};

struct OddGaussOps {
  using value_type = OddGauss;

  std::string name() const { return "odd-gauss"; }
  bool equal(OddGauss const& a, OddGauss const& b) const { return a == b; }
  OddGauss bracket(OddGauss const& a, OddGauss const& b, OddGauss const& c) const {
    return {a.re() - b.re() + c.re(), a.im() - b.im() + c.im()};
  }
  OddGauss mul(OddGauss const& a, OddGauss const& b) const {
    return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
  }
  bool is_absorber(OddGauss const&) const noexcept { return false; }
  bool has_absorber() const noexcept { return false; }
  OddGauss unit() const { return {1, 0}; }
  /// |re|, |im| <= 10^6.
  OddGauss sample(Rng& rng) const {
    auto const re = draw(rng, -1'000'000, 1'000'000);
    auto const im = re % 2 == 0 ? draw_odd(rng, 1'000'000) : draw_even(rng, 1'000'000);
    return {re, im};
  }
  std::string to_string(OddGauss const& a) const { return a.to_string(); }
  TrussProperties properties() const { return {true, true, true, true}; }

  OreWitness<OddGauss> ore_witness(OddGauss const& x, OddGauss const& y) const { return {y, x}; }

  /// num / den = num conj(den) / |den|^2.
  GaussianRational fraction_normal_form(OddGauss const& den, OddGauss const& num) const {
    mpz_class const norm = den.re() * den.re() + den.im() * den.im();
    GaussianRational q{mpq_class(num.re() * den.re() + num.im() * den.im(), norm),
                       mpq_class(num.im() * den.re() - num.re() * den.im(), norm)};
    q.re.canonicalize();
    q.im.canonicalize();
    return q;
  }
  std::string normal_form_string(GaussianRational const& q) const {
    return "(" + q.re.get_str() + ")+(" + q.im.get_str() + ")i";
  }

  /// Divides out the integer gcd of all four components; it is odd.
  void reduce_fraction(OddGauss& den, OddGauss& num) const {
    mpz_class g = 0;
    for (auto const* v : {&den.re(), &den.im(), &num.re(), &num.im()})
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
    if (g == 1) return;
    den = OddGauss(den.re() / g, den.im() / g);
    num = OddGauss(num.re() / g, num.im() / g);
  }

  RegularityCertificate regularity_certificate() const {
    return {true, true,
            "subset of the integral domain Z[i] without 0; commutative, so (y,x) is an Ore witness", ""};
  }
};

}  // namespace trusskit
