#pragma once

/**
 * @file ore.hpp
 * @brief Left fractions of a left regular pre-truss.
 *
 * A fraction a/b stands for b^-1 a, with b in T^Abs. Two pairs (b,a) and
 * (b',a') are equal when beta b = beta' b' and beta a = beta' a' for some
 * beta, beta' in T^Abs. For a single Ore witness r b = s b' this holds iff
 * r a = s a', which is how equality is decided without a normal form.
 */

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trusskit/effective.hpp"

namespace trusskit {

template <typename V>
struct Fraction {
  V den;
  V num;
};

template <EffectiveTruss T>
class Localisation {
 public:
  using value_type = typename T::value_type;
  using fraction = Fraction<value_type>;

  explicit Localisation(T base) : base_(std::move(base)) {}

  T const& base() const noexcept { return base_; }

  /// Throws precondition_error if den is the absorber.
  fraction make(value_type den, value_type num) const {
    if (base_.is_absorber(den)) throw precondition_error("fraction: denominator is the absorber");
    fraction f{std::move(den), std::move(num)};
    reduce(f);
    return f;
  }

  /// r x = s y with r, s in T^Abs, checked before it is returned.
  OreWitness<value_type> witness(value_type const& x, value_type const& y) const {
    OreWitness<value_type> w = base_.ore_witness(x, y);
    check_witness(x, y, w);
    return w;
  }

  void check_witness(value_type const& x, value_type const& y, OreWitness<value_type> const& w) const {
    if (base_.is_absorber(w.r) || base_.is_absorber(w.s))
      throw internal_error("Ore witness lies outside T^Abs");
    if (!base_.equal(base_.mul(w.r, x), base_.mul(w.s, y)))
      throw internal_error("Ore witness fails r x = s y for " + base_.to_string(x) + ", "
                           + base_.to_string(y));
  }

  /// Normal forms when the base provides them, otherwise a witness test.
  bool equal(fraction const& f, fraction const& g) const {
    if constexpr (HasFractionNormalForm<T>) return normal_form(f) == normal_form(g);
    else return equal_by_witness(f, g);
  }

  bool equal_by_witness(fraction const& f, fraction const& g) const {
    auto w = witness(f.den, g.den);
    return base_.equal(base_.mul(w.r, f.num), base_.mul(w.s, g.num));
  }

  auto normal_form(fraction const& f) const
    requires HasFractionNormalForm<T>
  {
    return base_.fraction_normal_form(f.den, f.num);
  }

  bool is_absorber(fraction const& f) const { return base_.is_absorber(f.num); }

  /// (a/b)(a'/b') = gamma a' / (gamma' b) where gamma b' = gamma' a.
  fraction mul(fraction const& f, fraction const& g) const {
    if (base_.is_absorber(f.num)) return f;  // absorber/b is the absorber of Q(T)
    return mul_with(f, g, witness(g.den, f.num));
  }

  /// Product through a caller-chosen witness for (g.den, f.num).
  fraction mul_with(fraction const& f, fraction const& g, OreWitness<value_type> const& w) const {
    check_witness(g.den, f.num, w);
    fraction out{base_.mul(w.s, f.den), base_.mul(w.r, g.num)};
    reduce(out);
    return out;
  }

  /// [f,g,h] over a common denominator reached by two witness calls.
  fraction bracket(fraction const& f, fraction const& g, fraction const& h) const {
    auto w1 = witness(f.den, g.den);
    auto const d = base_.mul(w1.r, f.den);
    auto w2 = witness(d, h.den);
    return bracket_with(f, g, h, w1, w2);
  }

  /// w1 relates (f.den, g.den); w2 relates (w1.r f.den, h.den).
  fraction bracket_with(fraction const& f, fraction const& g, fraction const& h,
                        OreWitness<value_type> const& w1, OreWitness<value_type> const& w2) const {
    check_witness(f.den, g.den, w1);
    auto const d = base_.mul(w1.r, f.den);
    check_witness(d, h.den, w2);
    auto const b1 = base_.mul(w2.r, w1.r);
    auto const b2 = base_.mul(w2.r, w1.s);
    auto const& b3 = w2.s;
    fraction out{base_.mul(w2.r, d),
                 base_.bracket(base_.mul(b1, f.num), base_.mul(b2, g.num), base_.mul(b3, h.num))};
    reduce(out);
    return out;
  }

  fraction unit() const
    requires HasUnit<T>
  {
    auto one = base_.unit();
    return fraction{one, one};
  }

  /// b/b for any b in T^Abs; the identity of (Q(T)^Abs, ·).
  fraction unit_at(value_type const& b) const { return make(b, b); }

  /// (a/b)^-1 = b/a.
  fraction inverse(fraction const& f) const {
    if (base_.is_absorber(f.num)) throw precondition_error("inverse: the absorber has no inverse");
    return make(f.num, f.den);
  }

  /// iota_b(a) = ba / b.
  fraction embed(value_type const& b, value_type const& a) const {
    return make(b, base_.mul(b, a));
  }

  /// A random fraction with a non-absorber denominator.
  fraction sample(Rng& rng) const {
    for (;;) {
      auto den = base_.sample(rng);
      if (base_.is_absorber(den)) continue;
      return make(std::move(den), base_.sample(rng));
    }
  }

  /// A random element of T^Abs.
  value_type sample_regular(Rng& rng) const {
    for (;;) {
      auto v = base_.sample(rng);
      if (!base_.is_absorber(v)) return v;
    }
  }

  /// Representative (u b, u a) of the same fraction.
  fraction rescale(fraction const& f, value_type const& u) const {
    return fraction{base_.mul(u, f.den), base_.mul(u, f.num)};
  }

  std::string to_string(fraction const& f) const {
    if constexpr (HasFractionNormalForm<T>) return base_.normal_form_string(normal_form(f));
    else return base_.to_string(f.num) + "/" + base_.to_string(f.den);
  }

  std::string pair_string(fraction const& f) const {
    return "(" + base_.to_string(f.num) + ")/(" + base_.to_string(f.den) + ")";
  }

 private:
  void reduce(fraction& f) const {
    if constexpr (HasFractionReduction<T>) base_.reduce_fraction(f.den, f.num);
  }

  T base_;
};

/// Left regularity from the base's certificate.
template <EffectiveTruss T>
RegularityCertificate check_left_regular(T const& base) {
  if constexpr (HasRegularityCertificate<T>) return base.regularity_certificate();
  else {
    RegularityCertificate c;
    c.failure = "no regularity certificate available";
    return c;
  }
}

inline RegularityCertificate check_left_regular(FinitePreTruss const& t) {
  return FiniteBackend(t).regularity_certificate();
}

/// Q(T). Throws precondition_error unless T is left regular.
template <EffectiveTruss T>
Localisation<T> localise(T base) {
  auto c = check_left_regular(base);
  if (!c.left_regular()) throw precondition_error("not left regular: " + c.failure);
  return Localisation<T>(std::move(base));
}

// ---------------------------------------------------------------------------
// Law suite

struct LawCheck {
  LawCheck() = default;
  explicit LawCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0; }
  void record(bool holds, std::function<std::string()> const& describe) {
    ++cases;
    if (holds) return;
    if (failures++ == 0) first_failure = describe();
  }
};

struct LawSuiteOptions {
  std::size_t samples = 500;
  std::size_t tuple_samples = 100;  ///< for five-argument identities
  std::uint64_t seed = default_seed;
};

/// Sampled, exact verification of the laws Q(T) inherits from T.
template <EffectiveTruss T>
std::vector<LawCheck> run_law_suite(Localisation<T> const& q, LawSuiteOptions const& opt) {
  using F = typename Localisation<T>::fraction;
  Rng rng(opt.seed);
  auto const props = q.base().properties();
  LawCheck eq{"fraction equality"}, nf{"normal form agrees with witness equality"},
      malcev{"Mal'cev identities"}, para{"para-associativity"}, assoc{"heap associativity"},
      abel{"abelian heap"}, left{"left distributivity"}, right{"right distributivity"},
      mul_assoc{"multiplicative associativity"}, indep{"witness independence of product"},
      common{"common denominator independence"}, unit{"unit laws"}, inv{"inverse laws"};
  auto show = [&](std::initializer_list<F const*> fs) {
    std::string s;
    for (auto const* f : fs) s += (s.empty() ? "" : ", ") + q.pair_string(*f);
    return s;
  };
  std::optional<F> one;
  if constexpr (HasUnit<T>) one = q.unit();
  for (std::size_t i = 0; i < opt.samples; ++i) {
    F const f = q.sample(rng), g = q.sample(rng), h = q.sample(rng);
    auto const u = q.sample_regular(rng), v = q.sample_regular(rng);
    F const f2 = q.rescale(f, u), f3 = q.rescale(f2, v);
    eq.record(q.equal(f, f) && q.equal(f, f2) && q.equal(f2, f) && q.equal(f2, f3)
                  && q.equal(f, f3),
              [&] { return show({&f, &f2, &f3}); });
    if constexpr (HasFractionNormalForm<T>) {
      nf.record(q.equal_by_witness(f, f2) && q.equal_by_witness(f, g) == q.equal(f, g),
                [&] { return show({&f, &g}); });
    }
    malcev.record(q.equal(q.bracket(f, f, g), g) && q.equal(q.bracket(g, f, f), g),
                  [&] { return show({&f, &g}); });
    if (props.abelian_heap)
      abel.record(q.equal(q.bracket(f, g, h), q.bracket(h, g, f)), [&] { return show({&f, &g, &h}); });
    if (props.near)
      left.record(q.equal(q.mul(f, q.bracket(g, h, f2)),
                          q.bracket(q.mul(f, g), q.mul(f, h), q.mul(f, f2))),
                  [&] { return show({&f, &g, &h}); });
    if (props.skew)
      right.record(q.equal(q.mul(q.bracket(g, h, f2), f),
                           q.bracket(q.mul(g, f), q.mul(h, f), q.mul(f2, f))),
                   [&] { return show({&f, &g, &h}); });
    mul_assoc.record(q.equal(q.mul(q.mul(f, g), h), q.mul(f, q.mul(g, h))),
                     [&] { return show({&f, &g, &h}); });
    if (!q.is_absorber(f)) {
      auto w = q.witness(g.den, f.num);
      OreWitness<typename T::value_type> w2{q.base().mul(u, w.r), q.base().mul(u, w.s)};
      indep.record(q.equal(q.mul_with(f, g, w), q.mul_with(f, g, w2)), [&] { return show({&f, &g}); });
    }
    {
      auto w1 = q.witness(f.den, g.den);
      auto d = q.base().mul(w1.r, f.den);
      auto w2 = q.witness(d, h.den);
      OreWitness<typename T::value_type> v1{q.base().mul(v, w1.r), q.base().mul(v, w1.s)};
      auto d2 = q.base().mul(v1.r, f.den);
      auto v2 = q.witness(d2, h.den);
      common.record(q.equal(q.bracket_with(f, g, h, w1, w2), q.bracket_with(f, g, h, v1, v2)),
                    [&] { return show({&f, &g, &h}); });
    }
    F const e = one ? *one : q.unit_at(u);
    unit.record(q.equal(q.mul(f, e), f) && q.equal(q.mul(e, f), f), [&] { return show({&f}); });
    if (!q.is_absorber(f)) {
      F const fi = q.inverse(f);
      inv.record(q.equal(q.mul(f, fi), e) && q.equal(q.mul(fi, f), e), [&] { return show({&f}); });
    }
  }
  for (std::size_t i = 0; i < opt.tuple_samples; ++i) {
    F const a = q.sample(rng), b = q.sample(rng), c = q.sample(rng), d = q.sample(rng),
            e = q.sample(rng);
    auto const lhs = q.bracket(q.bracket(a, b, c), d, e);
    assoc.record(q.equal(lhs, q.bracket(a, b, q.bracket(c, d, e))),
                 [&] { return show({&a, &b, &c, &d, &e}); });
    para.record(q.equal(lhs, q.bracket(a, q.bracket(d, c, b), e)),
                [&] { return show({&a, &b, &c, &d, &e}); });
  }
  std::vector<LawCheck> out{eq, malcev, assoc, para, mul_assoc, indep, common, unit, inv};
  if constexpr (HasFractionNormalForm<T>) out.push_back(nf);
  if (props.abelian_heap) out.push_back(abel);
  if (props.near) out.push_back(left);
  if (props.skew) out.push_back(right);
  return out;
}

inline bool all_ok(std::vector<LawCheck> const& checks) {
  for (auto const& c : checks)
    if (!c.ok()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Finite fraction spaces

/// (b,a) ~ (b',a') by exhaustive search for beta, beta' in T^Abs.
inline bool equal_by_search(FinitePreTruss const& t, Fraction<elem> const& f, Fraction<elem> const& g) {
  for (elem x = 0; x < t.size(); ++x) {
    if (!t.in_abs_complement(x)) continue;
    for (elem y = 0; y < t.size(); ++y)
      if (t.in_abs_complement(y) && t.mul(x, f.den) == t.mul(y, g.den)
          && t.mul(x, f.num) == t.mul(y, g.num))
        return true;
  }
  return false;
}

/// Q(T) materialised as a finite pre-truss.
struct FiniteFractionSpace {
  std::vector<Fraction<elem>> pairs;  ///< all (den, num) with den in T^Abs
  Partition classes;                  ///< over indices into pairs
  FinitePreTruss truss;               ///< carrier = classes
  std::vector<elem> iota_one;         ///< a -> class of a/1, when T is unital

  elem class_of(Fraction<elem> const& f, std::size_t n) const {
    return classes.class_of[f.den * n + f.num];
  }
};

/// Saturation of all pairs under the fraction relation; |T| <= 5. Every
/// operation is checked for independence of representatives and witnesses.
inline FiniteFractionSpace finite_fractions(FinitePreTruss const& t) {
  std::size_t const n = t.size();
  if (n > 5) throw size_guard_error("finite_fractions: order exceeds 5");
  auto loc = localise(FiniteBackend(t));
  FiniteFractionSpace s;
  // Pair (den, num) has index den*n + num; absorber denominators are placeholders.
  std::vector<elem> label(n * n, static_cast<elem>(n * n));
  std::vector<std::size_t> valid;
  for (elem b = 0; b < n; ++b)
    for (elem a = 0; a < n; ++a) {
      s.pairs.push_back({b, a});
      if (t.in_abs_complement(b)) valid.push_back(b * n + a);
    }
  for (std::size_t i : valid) {
    if (label[i] != n * n) continue;
    label[i] = static_cast<elem>(i);
    for (std::size_t j : valid)
      if (label[j] == n * n && equal_by_search(t, s.pairs[i], s.pairs[j])) label[j] = static_cast<elem>(i);
  }
  for (std::size_t i : valid)
    for (std::size_t j : valid)
      if ((label[i] == label[j]) != loc.equal_by_witness(s.pairs[i], s.pairs[j]))
        throw internal_error("finite_fractions: witness equality disagrees with search");
  std::vector<elem> compact;
  for (std::size_t i : valid) compact.push_back(label[i]);
  auto part = Partition::from_labels(compact);
  std::vector<elem> class_of_pair(n * n, static_cast<elem>(part.size()));
  for (std::size_t k = 0; k < valid.size(); ++k) class_of_pair[valid[k]] = part.class_of[k];
  std::size_t const m = part.size();
  std::vector<Fraction<elem>> rep;
  Labels labels;
  for (auto const& c : part.classes) {
    auto const& f = s.pairs[valid[c.front()]];
    rep.push_back(f);
    labels.push_back(t.label(f.num) + "/" + t.label(f.den));
  }
  auto cls = [&](Fraction<elem> const& f) { return class_of_pair[f.den * n + f.num]; };
  auto tern = Table3::from_function(m, [&](elem x, elem y, elem z) {
    return cls(loc.bracket(rep[x], rep[y], rep[z]));
  });
  auto mul = Table2::from_function(m, [&](elem x, elem y) { return cls(loc.mul(rep[x], rep[y])); });
  auto const backend = FiniteBackend(t);
  for (std::size_t i : valid)
    for (std::size_t j : valid) {
      auto const &f = s.pairs[i], &g = s.pairs[j];
      elem const want = mul(cls(f), cls(g));
      if (!t.in_abs_complement(f.num)) {
        if (cls(loc.mul(f, g)) != want) throw internal_error("finite_fractions: product not well defined");
        continue;
      }
      for (auto const& w : backend.all_ore_witnesses(g.den, f.num))
        if (cls(loc.mul_with(f, g, w)) != want)
          throw internal_error("finite_fractions: product depends on the witness");
      for (std::size_t k : valid)
        if (cls(loc.bracket(f, g, s.pairs[k])) != tern(cls(f), cls(g), cls(s.pairs[k])))
          throw internal_error("finite_fractions: ternary operation not well defined");
    }
  s.truss = FinitePreTruss(FiniteHeap::from_table(std::move(labels), std::move(tern)), std::move(mul));
  s.classes = Partition{};
  s.classes.class_of = class_of_pair;
  for (auto const& c : part.classes) {
    std::vector<elem> members;
    for (elem k : c) members.push_back(static_cast<elem>(valid[k]));
    s.classes.classes.emplace_back(std::move(members));
  }
  if (t.unit())
    for (elem a = 0; a < n; ++a) s.iota_one.push_back(cls(loc.embed(*t.unit(), a)));
  return s;
}

// ---------------------------------------------------------------------------
// Embeddings, the universal map and the brace of fractions

/// The brace-type codomain of a universal map: a finite brace-type near-truss.
class FiniteBraceTarget {
 public:
  using value_type = elem;

  explicit FiniteBraceTarget(FinitePreTruss b) : b_(std::move(b)) {
    if (!b_.is_near() || !multiplicative_group(b_))
      throw precondition_error("universal map target is not brace-type");
    one_ = *b_.unit();
    inv_.resize(b_.size());
    for (elem x = 0; x < b_.size(); ++x)
      for (elem y = 0; y < b_.size(); ++y)
        if (b_.mul(x, y) == one_) inv_[x] = y;
  }

  FinitePreTruss const& truss() const noexcept { return b_; }
  elem mul(elem x, elem y) const noexcept { return b_.mul(x, y); }
  elem bracket(elem x, elem y, elem z) const noexcept { return b_(x, y, z); }
  elem inverse(elem x) const noexcept { return inv_[x]; }
  elem unit() const noexcept { return one_; }
  bool equal(elem x, elem y) const noexcept { return x == y; }
  std::string to_string(elem x) const { return b_.label(x); }

 private:
  FinitePreTruss b_;
  elem one_ = 0;
  std::vector<elem> inv_;
};

/// Q(T) itself as a brace-type codomain.
template <EffectiveTruss T>
class FractionBraceTarget {
 public:
  using value_type = typename Localisation<T>::fraction;

  explicit FractionBraceTarget(Localisation<T> const& q) : q_(q) {}

  value_type mul(value_type const& x, value_type const& y) const { return q_.mul(x, y); }
  value_type bracket(value_type const& x, value_type const& y, value_type const& z) const {
    return q_.bracket(x, y, z);
  }
  value_type inverse(value_type const& x) const { return q_.inverse(x); }
  value_type unit() const { return q_.unit(); }
  bool equal(value_type const& x, value_type const& y) const { return q_.equal(x, y); }
  std::string to_string(value_type const& x) const { return q_.to_string(x); }

 private:
  Localisation<T> const& q_;
};

template <typename B>
concept BraceTarget = requires(B const& b, typename B::value_type const& x) {
  { b.mul(x, x) } -> std::convertible_to<typename B::value_type>;
  { b.bracket(x, x, x) } -> std::convertible_to<typename B::value_type>;
  { b.inverse(x) } -> std::convertible_to<typename B::value_type>;
  { b.unit() } -> std::convertible_to<typename B::value_type>;
  { b.equal(x, x) } -> std::convertible_to<bool>;
};

/// f^(a/b) = f(b)^-1 f(a) for a unital homomorphism f: T -> B.
template <EffectiveTruss T, BraceTarget B>
class UniversalMap {
 public:
  using source = typename T::value_type;
  using target = typename B::value_type;
  using fraction = typename Localisation<T>::fraction;

  UniversalMap(Localisation<T> const& q, B b, std::function<target(source const&)> f)
      : q_(q), b_(std::move(b)), f_(std::move(f)) {}

  target operator()(fraction const& x) const { return b_.mul(b_.inverse(f_(x.den)), f_(x.num)); }
  target base_map(source const& a) const { return f_(a); }
  B const& codomain() const noexcept { return b_; }

  /// Sampled checks: f unital and multiplicative and heap-preserving, f^ well
  /// defined, multiplicative, heap-preserving, and f^ o iota_1 = f.
  std::vector<LawCheck> verify(LawSuiteOptions const& opt) const
    requires HasUnit<T>
  {
    Rng rng(opt.seed);
    auto const& t = q_.base();
    LawCheck base{"f is a unital homomorphism"}, well{"f^ well defined"}, mul{"f^ multiplicative"},
        heap{"f^ preserves the heap operation"}, split{"f^ after iota_1 equals f"};
    auto fail = [] { return std::string("sample"); };
    base.record(b_.equal(f_(t.unit()), b_.unit()), fail);
    for (std::size_t i = 0; i < opt.samples; ++i) {
      auto const x = t.sample(rng), y = t.sample(rng), z = t.sample(rng);
      base.record(b_.equal(f_(t.mul(x, y)), b_.mul(f_(x), f_(y)))
                      && b_.equal(f_(t.bracket(x, y, z)), b_.bracket(f_(x), f_(y), f_(z))),
                  [&] { return t.to_string(x) + ", " + t.to_string(y); });
      auto const f = q_.sample(rng), g = q_.sample(rng), h = q_.sample(rng);
      auto const f2 = q_.rescale(f, q_.sample_regular(rng));
      well.record(b_.equal((*this)(f), (*this)(f2)), [&] { return q_.pair_string(f); });
      mul.record(b_.equal((*this)(q_.mul(f, g)), b_.mul((*this)(f), (*this)(g))),
                 [&] { return q_.pair_string(f) + ", " + q_.pair_string(g); });
      heap.record(b_.equal((*this)(q_.bracket(f, g, h)),
                           b_.bracket((*this)(f), (*this)(g), (*this)(h))),
                  [&] { return q_.pair_string(f) + ", " + q_.pair_string(g); });
      split.record(b_.equal((*this)(q_.embed(t.unit(), x)), f_(x)), [&] { return t.to_string(x); });
    }
    return {base, well, mul, heap, split};
  }

 private:
  Localisation<T> const& q_;
  B b_;
  std::function<target(source const&)> f_;
};

template <EffectiveTruss T, BraceTarget B>
UniversalMap<T, B> universal_map(Localisation<T> const& q, B b,
                                 std::function<typename B::value_type(typename T::value_type const&)> f) {
  return UniversalMap<T, B>(q, std::move(b), std::move(f));
}

/// Number of unital truss homomorphisms g: Q(T) -> B with g o iota_1 = f,
/// for a finite Q(T). The universal property says exactly one.
inline std::size_t count_universal_splittings(FinitePreTruss const& t, FinitePreTruss const& b,
                                              std::vector<elem> const& f) {
  if (!t.unit() || !b.unit()) throw precondition_error("count_universal_splittings: needs units");
  auto s = finite_fractions(t);
  auto const& q = s.truss;
  std::size_t const m = q.size();
  std::vector<elem> g(m, static_cast<elem>(b.size()));
  for (elem a = 0; a < t.size(); ++a) {
    elem const c = s.iota_one[a];
    if (g[c] != b.size() && g[c] != f[a]) return 0;
    g[c] = f[a];
  }
  std::vector<elem> free;
  for (elem c = 0; c < m; ++c)
    if (g[c] == b.size()) free.push_back(c);
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == free.size()) {
      if (g[*q.unit()] == *b.unit() && is_pretruss_homomorphism(q, b, g)) ++count;
      return;
    }
    for (elem y = 0; y < b.size(); ++y) {
      g[free[k]] = y;
      go(k + 1);
    }
  };
  go(0);
  return count;
}

/// The retract of Q(T) at b/b with the fraction product.
template <EffectiveTruss T>
class BraceOfFractions {
 public:
  using fraction = typename Localisation<T>::fraction;

  BraceOfFractions(Localisation<T> const& q, typename T::value_type const& b)
      : q_(q), one_(q.unit_at(b)), near_field_(q.base().has_absorber()) {
    if (!q.base().properties().near)
      throw precondition_error("brace_retract_of_fractions: base is not a near-truss");
  }

  /// True when T has an absorber: the retract is then a near-field, not a brace.
  bool near_field_case() const noexcept { return near_field_; }
  fraction const& one() const noexcept { return one_; }
  fraction add(fraction const& x, fraction const& y) const { return q_.bracket(x, one_, y); }
  fraction neg(fraction const& x) const { return q_.bracket(one_, x, one_); }
  fraction mul(fraction const& x, fraction const& y) const { return q_.mul(x, y); }
  Localisation<T> const& fractions() const noexcept { return q_; }

  /// a(x + y) = ax - a + ay on sampled triples, plus additive group laws and
  /// a sampled search showing no fraction absorbs.
  std::vector<LawCheck> verify(LawSuiteOptions const& opt) const {
    Rng rng(opt.seed);
    LawCheck law{"brace law a(x+y) = ax - a + ay"}, grp{"additive group laws"},
        mgrp{"multiplicative group laws"}, absorb{"no fraction is an absorber"};
    for (std::size_t i = 0; i < opt.samples; ++i) {
      auto const a = q_.sample(rng), x = q_.sample(rng), y = q_.sample(rng);
      auto describe = [&] {
        return q_.pair_string(a) + ", " + q_.pair_string(x) + ", " + q_.pair_string(y);
      };
      law.record(q_.equal(mul(a, add(x, y)), add(add(mul(a, x), neg(a)), mul(a, y))), describe);
      grp.record(q_.equal(add(x, one_), x) && q_.equal(add(one_, x), x)
                     && q_.equal(add(x, neg(x)), one_) && q_.equal(add(add(a, x), y), add(a, add(x, y))),
                 describe);
      if (!q_.is_absorber(a))
        mgrp.record(q_.equal(mul(a, q_.inverse(a)), one_) && q_.equal(mul(one_, a), a), describe);
      if (!near_field_)
        absorb.record(!q_.equal(mul(x, a), a) || !q_.equal(mul(y, a), a)
                          || !q_.equal(mul(a, x), a) || !q_.equal(mul(a, y), a),
                      describe);
    }
    std::vector<LawCheck> out{law, grp, mgrp};
    if (!near_field_) out.push_back(absorb);
    return out;
  }

 private:
  Localisation<T> const& q_;
  fraction one_;
  bool near_field_;
};

template <EffectiveTruss T>
BraceOfFractions<T> brace_retract_of_fractions(Localisation<T> const& q,
                                               typename T::value_type const& b) {
  return BraceOfFractions<T>(q, b);
}

}  // namespace trusskit
