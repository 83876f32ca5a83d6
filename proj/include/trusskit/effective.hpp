#pragma once

/**
 * @file effective.hpp
 * @brief Interface for trusses given by exact operations rather than tables,
 *        plus an adapter presenting a finite pre-truss through it.
 */

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trusskit/domain.hpp"

namespace trusskit {

using Rng = std::mt19937_64;

/// Seed used when the caller supplies none.
inline constexpr std::uint64_t default_seed = 20240229;

/// Uniform draw from [lo, hi]. Defined here rather than through
/// std::uniform_int_distribution so that draws agree across standard libraries.
inline std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
  auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

/// Uniform odd integer in [-bound, bound].
inline std::int64_t draw_odd(Rng& rng, std::int64_t bound) {
  std::int64_t const k = (bound - 1) / 2;
  return 2 * draw(rng, -k - 1, k) + 1;
}

inline std::int64_t draw_even(Rng& rng, std::int64_t bound) { return 2 * draw(rng, -bound / 2, bound / 2); }

struct TrussProperties {
  bool near = false;          ///< left distributive
  bool skew = false;          ///< both distributive laws
  bool abelian_heap = false;
  bool commutative = false;
};

/// r·x = s·y for the queried pair (x, y).
template <typename V>
struct OreWitness {
  V r;
  V s;
};

/// Verdict on left regularity, with the argument that supports it.
struct RegularityCertificate {
  bool domain = false;
  bool ore = false;
  std::string proof;    ///< why the verdict holds
  std::string failure;  ///< counterexample when it does not

  bool left_regular() const noexcept { return domain && ore; }
};

template <typename T>
concept EffectiveTruss = requires(T const& t, typename T::value_type const& x, Rng& rng) {
  typename T::value_type;
  { t.equal(x, x) } -> std::convertible_to<bool>;
  { t.bracket(x, x, x) } -> std::convertible_to<typename T::value_type>;
  { t.mul(x, x) } -> std::convertible_to<typename T::value_type>;
  { t.is_absorber(x) } -> std::convertible_to<bool>;
  { t.sample(rng) } -> std::convertible_to<typename T::value_type>;
  { t.to_string(x) } -> std::convertible_to<std::string>;
  { t.properties() } -> std::convertible_to<TrussProperties>;
  { t.name() } -> std::convertible_to<std::string>;
  { t.has_absorber() } -> std::convertible_to<bool>;
};

template <typename T>
concept HasUnit = requires(T const& t) {
  { t.unit() } -> std::convertible_to<typename T::value_type>;
};

template <typename T>
concept HasOreWitness = requires(T const& t, typename T::value_type const& x) {
  { t.ore_witness(x, x) } -> std::convertible_to<OreWitness<typename T::value_type>>;
};

/// A canonical form of b^-1 a: equal fractions map to equal values.
template <typename T>
concept HasFractionNormalForm = requires(T const& t, typename T::value_type const& x) {
  { t.fraction_normal_form(x, x) } -> std::equality_comparable;
  { t.normal_form_string(t.fraction_normal_form(x, x)) } -> std::convertible_to<std::string>;
};

/// Replaces (den, num) by an equivalent, smaller representative.
template <typename T>
concept HasFractionReduction = requires(T const& t, typename T::value_type& x) {
  t.reduce_fraction(x, x);
};

template <typename T>
concept HasRegularityCertificate = requires(T const& t) {
  { t.regularity_certificate() } -> std::convertible_to<RegularityCertificate>;
};

/// A finite pre-truss seen through the effective interface.
class FiniteBackend {
 public:
  using value_type = elem;

  explicit FiniteBackend(FinitePreTruss t, std::string name = "finite")
      : t_(std::move(t)), name_(std::move(name)) {}

  FinitePreTruss const& truss() const noexcept { return t_; }
  std::string name() const { return name_; }
  bool equal(elem a, elem b) const noexcept { return a == b; }
  elem bracket(elem a, elem b, elem c) const noexcept { return t_(a, b, c); }
  elem mul(elem a, elem b) const noexcept { return t_.mul(a, b); }
  bool is_absorber(elem a) const noexcept { return !t_.in_abs_complement(a); }
  elem sample(Rng& rng) const {
    return static_cast<elem>(draw(rng, 0, static_cast<std::int64_t>(t_.size()) - 1));
  }
  std::string to_string(elem a) const { return t_.label(a); }
  TrussProperties properties() const {
    return {t_.is_near(), t_.is_skew(), t_.is_abelian_heap(), commutative()};
  }
  bool has_absorber() const noexcept { return t_.absorbers().two_sided.has_value(); }

  /// Throws precondition_error when T has no unit.
  elem unit() const {
    if (!t_.unit()) throw precondition_error("unit: " + name_ + " is not unital");
    return *t_.unit();
  }

  bool commutative() const {
    for (elem a = 0; a < t_.size(); ++a)
      for (elem b = a + 1; b < t_.size(); ++b)
        if (t_.mul(a, b) != t_.mul(b, a)) return false;
    return true;
  }

  /// Every (r, s) in T^Abs x T^Abs with r x = s y, in scan order.
  std::vector<OreWitness<elem>> all_ore_witnesses(elem x, elem y) const {
    std::vector<OreWitness<elem>> out;
    for (elem r = 0; r < t_.size(); ++r) {
      if (is_absorber(r)) continue;
      for (elem s = 0; s < t_.size(); ++s)
        if (!is_absorber(s) && t_.mul(r, x) == t_.mul(s, y)) out.push_back({r, s});
    }
    return out;
  }

  /// First witness in scan order; throws precondition_error if there is none.
  OreWitness<elem> ore_witness(elem x, elem y) const {
    if (is_absorber(x) || is_absorber(y))
      throw precondition_error("ore_witness: arguments must lie in T^Abs");
    for (elem r = 0; r < t_.size(); ++r) {
      if (is_absorber(r)) continue;
      for (elem s = 0; s < t_.size(); ++s)
        if (!is_absorber(s) && t_.mul(r, x) == t_.mul(s, y)) return {r, s};
    }
    throw precondition_error("ore_witness: no r,s with r" + t_.label(x) + " = s" + t_.label(y));
  }

  /// Exhaustive domain and Ore scans.
  RegularityCertificate regularity_certificate() const {
    RegularityCertificate c;
    auto d = domain_report(t_);
    c.domain = d.domain;
    if (!d.domain) {
      auto const& f = *d.failure;
      elem const a = f.element;
      if (f.left_witness) {
        auto [b, cc] = *f.left_witness;
        c.failure = "not a domain: " + t_.label(a) + "·" + t_.label(b) + "=" + t_.label(a) + "·"
                    + t_.label(cc);
      } else {
        auto [b, cc] = *f.right_witness;
        c.failure = "not a domain: " + t_.label(b) + "·" + t_.label(a) + "=" + t_.label(cc) + "·"
                    + t_.label(a);
      }
      return c;
    }
    if (t_.size() == 1 && !t_.in_abs_complement(0)) {
      c.failure = "T^Abs is empty: no denominators";
      return c;
    }
    c.ore = true;
    for (elem x = 0; x < t_.size() && c.ore; ++x)
      for (elem y = 0; y < t_.size() && c.ore; ++y) {
        if (is_absorber(x) || is_absorber(y)) continue;
        if (all_ore_witnesses(x, y).empty()) {
          c.ore = false;
          c.failure = "left Ore condition fails for (" + t_.label(x) + "," + t_.label(y) + ")";
        }
      }
    if (c.ore) c.proof = "exhaustive scan of cancellation and Ore pairs";
    return c;
  }

 private:
  FinitePreTruss t_;
  std::string name_;
};

}  // namespace trusskit
