#pragma once

/**
 * @file odd_int.hpp
 * @brief The truss 2Z+1 of odd integers, its paragons P_n and their modular
 *        quotient models.
 */

#include <gmpxx.h>

#include <string>

#include "trusskit/effective.hpp"

namespace trusskit {

inline bool is_odd(mpz_class const& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

class OddInt {
 public:
  /// Throws axiom_error unless v is odd.
  explicit OddInt(mpz_class v) : value_(std::move(v)) {
    if (!is_odd(value_)) throw axiom_error("OddInt: " + value_.get_str() + " is even");
  }
  explicit OddInt(long v) : OddInt(mpz_class(v)) {}

  mpz_class const& value() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(); }
  friend bool operator==(OddInt const&, OddInt const&) = default;

 private:
  mpz_class value_;
};

struct OddIntOps {
  using value_type = OddInt;

  std::string name() const { return "odd-int"; }
  bool equal(OddInt const& a, OddInt const& b) const { return a == b; }
  OddInt bracket(OddInt const& a, OddInt const& b, OddInt const& c) const {
    return OddInt(a.value() - b.value() + c.value());
  }
  OddInt mul(OddInt const& a, OddInt const& b) const { return OddInt(a.value() * b.value()); }
  bool is_absorber(OddInt const&) const noexcept { return false; }
  bool has_absorber() const noexcept { return false; }
  OddInt unit() const { return OddInt(1L); }
  /// |value| <= 10^6.
  OddInt sample(Rng& rng) const { return OddInt(draw_odd(rng, 1'000'000)); }
  std::string to_string(OddInt const& a) const { return a.to_string(); }
  TrussProperties properties() const { return {true, true, true, true}; }

  /// (y, x): y x = x y.
  OreWitness<OddInt> ore_witness(OddInt const& x, OddInt const& y) const { return {y, x}; }

  mpq_class fraction_normal_form(OddInt const& den, OddInt const& num) const {
    mpq_class q(num.value(), den.value());
    q.canonicalize();
    return q;
  }
  std::string normal_form_string(mpq_class const& q) const { return q.get_str(); }

  /// Divides out the gcd, which is odd; signs are left to the normal form.
  void reduce_fraction(OddInt& den, OddInt& num) const {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.value().get_mpz_t(), num.value().get_mpz_t());
    if (den.value() < 0) g = -g;
    den = OddInt(den.value() / g);
    num = OddInt(num.value() / g);
  }

  RegularityCertificate regularity_certificate() const {
    return {true, true,
            "integral domain without zero; commutative, so (y,x) is an Ore witness for (x,y)", ""};
  }
};

/// P_n = {2^n m + 1 : m odd}.
inline bool in_oddint_paragon(unsigned n, mpz_class const& p) {
  if (n < 1) throw precondition_error("oddint_paragon: n must be at least 1");
  mpz_class const shifted = p - 1;
  if (mpz_divisible_2exp_p(shifted.get_mpz_t(), n) == 0) return false;
  mpz_class m;
  mpz_fdiv_q_2exp(m.get_mpz_t(), shifted.get_mpz_t(), n);
  return is_odd(m);
}

/// a ~ b modulo P_n, decided through the paragon predicate at p = 2^n + 1.
inline bool oddint_related(unsigned n, mpz_class const& a, mpz_class const& b) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, n);
  return in_oddint_paragon(n, a - b + p + 1);
}

/// Odd residue of v modulo 2^(n+1), as an index into the model's carrier.
inline elem oddint_residue_index(unsigned n, mpz_class const& v) {
  mpz_class r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), n + 1);
  return static_cast<elem>(r.get_ui() / 2);
}

struct OddIntQuotientModel {
  unsigned n = 0;
  FinitePreTruss truss;      ///< odd residues mod 2^(n+1), element k = 2k+1
  std::size_t checked = 0;   ///< window pairs checked against the predicate
};

/// T/P_n realised on odd residues mod 2^(n+1); n <= 7. The residue map is
/// checked against the predicate on a window of odd integers: it identifies
/// exactly the ~_P classes and preserves both operations.
inline OddIntQuotientModel oddint_quotient_model(unsigned n) {
  if (n < 1) throw precondition_error("oddint_quotient_model: n must be at least 1");
  if (n > 7) throw size_guard_error("oddint_quotient_model: n exceeds 7");
  std::size_t const mod = std::size_t{1} << (n + 1);
  std::size_t const size = mod / 2;
  Labels labels;
  for (std::size_t k = 0; k < size; ++k) labels.push_back(std::to_string(2 * k + 1));
  auto wrap = [mod](long v) { return static_cast<elem>((((v % long(mod)) + long(mod)) % long(mod)) / 2); };
  auto heap = FiniteHeap::from_table(labels, Table3::from_function(size, [&](elem a, elem b, elem c) {
                                       return wrap(long(2 * a + 1) - long(2 * b + 1) + long(2 * c + 1));
                                     }));
  OddIntQuotientModel model{n, FinitePreTruss::from_function(std::move(heap), [&](elem a, elem b) {
                              return wrap(long(2 * a + 1) * long(2 * b + 1));
                            })};
  long const bound = long(2 * mod);
  std::vector<mpz_class> window;
  for (long v = -bound + 1; v <= bound; v += 2) window.emplace_back(v);
  for (auto const& a : window)
    for (auto const& b : window) {
      ++model.checked;
      elem const ra = oddint_residue_index(n, a), rb = oddint_residue_index(n, b);
      if (oddint_related(n, a, b) != (ra == rb))
        throw internal_error("oddint_quotient_model: residues disagree with the paragon");
      if (oddint_residue_index(n, a * b) != model.truss.mul(ra, rb))
        throw internal_error("oddint_quotient_model: residue map not multiplicative");
      mpz_class const c = a + b - 1;  // another odd integer
      if (oddint_residue_index(n, a - b + c) != model.truss(ra, rb, oddint_residue_index(n, c)))
        throw internal_error("oddint_quotient_model: residue map not a heap morphism");
    }
  if (!multiplicative_group(model.truss))
    throw internal_error("oddint_quotient_model: quotient is not brace-type");
  return model;
}

}  // namespace trusskit
