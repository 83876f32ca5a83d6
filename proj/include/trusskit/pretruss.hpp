#pragma once

/**
 * @file pretruss.hpp
 * @brief Pre-trusses (a heap with an associative multiplication), their
 *        classification, absorbers, and the correspondences with rings,
 *        near-rings, skew rings and skew braces.
 */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trusskit/heap.hpp"

namespace trusskit {

enum class TrussKind { not_pretruss, pretruss, near_truss, skew_truss, truss };

inline char const* to_string(TrussKind k) {
  switch (k) {
    case TrussKind::not_pretruss: return "not a pre-truss";
    case TrussKind::pretruss: return "pre-truss";
    case TrussKind::near_truss: return "near-truss";
    case TrussKind::skew_truss: return "skew truss";
    case TrussKind::truss: return "truss";
  }
  return "?";
}

struct Classification {
  TrussKind kind = TrussKind::not_pretruss;
  bool left_distributive = false;
  bool right_distributive = false;
  bool abelian_heap = false;
  std::optional<elem> unit;
  std::optional<Violation> witness;  ///< associativity failure, if any

  bool unital() const noexcept { return unit.has_value(); }
  bool operator==(Classification const& o) const {
    return kind == o.kind && left_distributive == o.left_distributive
           && right_distributive == o.right_distributive && abelian_heap == o.abelian_heap
           && unit == o.unit;
  }
};

/// Exhaustive classification of (heap, mul).
inline Classification classify(FiniteHeap const& h, Table2 const& mul) {
  mul.validate();
  if (mul.size() != h.size()) throw structure_error("mul table order differs from heap order");
  std::size_t const n = h.size();
  Classification c;
  for (elem a = 0; a < n && !c.witness; ++a)
    for (elem b = 0; b < n && !c.witness; ++b)
      for (elem d = 0; d < n; ++d)
        if (mul(mul(a, b), d) != mul(a, mul(b, d))) {
          c.witness = Violation{"(ab)c = a(bc)",
                                {a, b, d},
                                {{{a, b}}, {{mul(a, b), d}}, {{b, d}}, {{a, mul(b, d)}}}};
          break;
        }
  if (c.witness) return c;
  c.abelian_heap = h.is_abelian();
  c.left_distributive = true;
  for (elem a = 0; a < n && c.left_distributive; ++a)
    for (elem b = 0; b < n && c.left_distributive; ++b)
      for (elem x = 0; x < n && c.left_distributive; ++x)
        for (elem y = 0; y < n; ++y)
          if (mul(a, h(b, x, y)) != h(mul(a, b), mul(a, x), mul(a, y))) {
            c.left_distributive = false;
            break;
          }
  c.right_distributive = true;
  for (elem a = 0; a < n && c.right_distributive; ++a)
    for (elem b = 0; b < n && c.right_distributive; ++b)
      for (elem x = 0; x < n && c.right_distributive; ++x)
        for (elem y = 0; y < n; ++y)
          if (mul(h(b, x, y), a) != h(mul(b, a), mul(x, a), mul(y, a))) {
            c.right_distributive = false;
            break;
          }
  for (elem e = 0; e < n && !c.unit; ++e) {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) c.unit = e;
  }
  if (!c.left_distributive) c.kind = TrussKind::pretruss;
  else if (!c.right_distributive) c.kind = TrussKind::near_truss;
  else if (!c.abelian_heap) c.kind = TrussKind::skew_truss;
  else c.kind = TrussKind::truss;
  return c;
}

struct AbsorberReport {
  Subset left_absorbers;   ///< ta = a for all t
  Subset right_absorbers;  ///< at = a for all t
  std::optional<elem> two_sided;
};

/// A finite pre-truss. Classification flags are computed once, at construction.
class FinitePreTruss {
 public:
  FinitePreTruss() = default;

  /// Throws axiom_error when mul is not associative.
  FinitePreTruss(FiniteHeap heap, Table2 mul) : heap_(std::move(heap)), mul_(std::move(mul)) {
    cls_ = classify(heap_, mul_);
    if (cls_.kind == TrussKind::not_pretruss) {
      AxiomReport r;
      r.add(*cls_.witness);
      throw axiom_error("not a pre-truss: " + r.summary(heap_.labels()));
    }
    std::vector<elem> left, right;
    std::size_t const n = size();
    for (elem a = 0; a < n; ++a) {
      bool l = true, r = true;
      for (elem t = 0; t < n; ++t) {
        l = l && mul_(t, a) == a;
        r = r && mul_(a, t) == a;
      }
      if (l) left.push_back(a);
      if (r) right.push_back(a);
    }
    abs_.left_absorbers = Subset(left);
    abs_.right_absorbers = Subset(right);
    for (elem a : abs_.left_absorbers)
      if (abs_.right_absorbers.contains(a)) abs_.two_sided = a;
  }

  template <typename F>
  static FinitePreTruss from_function(FiniteHeap heap, F&& f) {
    auto n = heap.size();
    return FinitePreTruss(std::move(heap), Table2::from_function(n, std::forward<F>(f)));
  }

  std::size_t size() const noexcept { return heap_.size(); }
  elem operator()(elem a, elem b, elem c) const noexcept { return heap_(a, b, c); }
  elem mul(elem a, elem b) const noexcept { return mul_(a, b); }
  FiniteHeap const& heap() const noexcept { return heap_; }
  Table2 const& mul_table() const noexcept { return mul_; }
  Labels const& labels() const noexcept { return heap_.labels(); }
  std::string const& label(elem a) const { return heap_.label(a); }

  Classification const& classification() const noexcept { return cls_; }
  TrussKind kind() const noexcept { return cls_.kind; }
  bool is_near() const noexcept { return cls_.left_distributive; }
  bool is_skew() const noexcept { return cls_.left_distributive && cls_.right_distributive; }
  bool is_truss() const noexcept { return cls_.kind == TrussKind::truss; }
  bool is_abelian_heap() const noexcept { return cls_.abelian_heap; }
  std::optional<elem> unit() const noexcept { return cls_.unit; }
  AbsorberReport const& absorbers() const noexcept { return abs_; }

  /// T^Abs membership: everything except the two-sided absorber, if any.
  bool in_abs_complement(elem a) const noexcept { return abs_.two_sided != a; }
  std::vector<elem> abs_complement() const {
    std::vector<elem> out;
    for (elem a = 0; a < size(); ++a)
      if (in_abs_complement(a)) out.push_back(a);
    return out;
  }

 private:
  FiniteHeap heap_;
  Table2 mul_;
  Classification cls_;
  AbsorberReport abs_;
};

inline Classification classify(FinitePreTruss const& t) { return t.classification(); }
inline AbsorberReport find_absorbers(FinitePreTruss const& t) { return t.absorbers(); }

/// (T,·) as a group when it is one.
inline std::optional<FiniteGroup> multiplicative_group(FinitePreTruss const& t) {
  if (!t.unit()) return std::nullopt;
  elem const one = *t.unit();
  for (elem a = 0; a < t.size(); ++a) {
    bool inv = false;
    for (elem b = 0; b < t.size() && !inv; ++b) inv = t.mul(a, b) == one && t.mul(b, a) == one;
    if (!inv) return std::nullopt;
  }
  return FiniteGroup::from_table(t.labels(), t.mul_table());
}

inline bool is_pretruss_homomorphism(FinitePreTruss const& src, FinitePreTruss const& dst,
                                     std::vector<elem> const& map) {
  if (!is_heap_homomorphism(src.heap(), dst.heap(), map)) return false;
  for (elem a = 0; a < src.size(); ++a)
    for (elem b = 0; b < src.size(); ++b)
      if (map[src.mul(a, b)] != dst.mul(map[a], map[b])) return false;
  return true;
}

/// Backtracking isomorphism search; intended for small orders.
inline std::optional<Bijection> find_pretruss_isomorphism(FinitePreTruss const& a,
                                                          FinitePreTruss const& b) {
  std::size_t const n = a.size();
  if (n != b.size() || a.classification().kind != b.classification().kind
      || a.absorbers().left_absorbers.size() != b.absorbers().left_absorbers.size()
      || a.absorbers().right_absorbers.size() != b.absorbers().right_absorbers.size())
    return std::nullopt;
  Bijection map(n, static_cast<elem>(n));
  std::vector<char> used(n, 0);
  // Checks every identity whose arguments are all assigned and include k.
  auto consistent = [&](elem k) {
    for (elem x = 0; x <= k; ++x)
      for (elem y = 0; y <= k; ++y) {
        elem p = a.mul(x, y);
        if (p <= k && (x == k || y == k || p == k) && map[p] != b.mul(map[x], map[y]))
          return false;
        for (elem z = 0; z <= k; ++z) {
          if (x != k && y != k && z != k) continue;
          elem q = a(x, y, z);
          if (q <= k && map[q] != b(map[x], map[y], map[z])) return false;
        }
      }
    return true;
  };
  std::function<bool(elem)> go = [&](elem k) {
    if (k == n) return is_pretruss_homomorphism(a, b, map);
    for (elem y = 0; y < n; ++y) {
      if (used[y]) continue;
      map[k] = y;
      used[y] = 1;
      if (consistent(k) && go(k + 1)) return true;
      used[y] = 0;
      map[k] = static_cast<elem>(n);
    }
    return false;
  };
  if (go(0)) return map;
  return std::nullopt;
}

/// Exhaustive associativity scan of a product table.
inline AxiomReport check_semigroup_axioms(Table2 const& mul, std::size_t max_recorded = SIZE_MAX) {
  mul.validate();
  AxiomReport rep;
  rep.max_recorded = max_recorded;
  std::size_t const n = mul.size();
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          rep.add({"(ab)c = a(bc)",
                   {a, b, c},
                   {{{a, b}}, {{mul(a, b), c}}, {{b, c}}, {{a, mul(b, c)}}}});
  return rep;
}

// ---------------------------------------------------------------------------
// Rings, near-rings, skew rings and skew braces as (additive group, mul).

/// Near-ring axioms with left distributivity n(m+m') = nm + nm'.
inline AxiomReport check_near_ring_axioms(FiniteGroup const& add, Table2 const& mul,
                                          std::size_t max_recorded = SIZE_MAX) {
  AxiomReport rep;
  rep.max_recorded = max_recorded;
  std::size_t const n = add.size();
  if (mul.size() != n) throw structure_error("mul table order differs from group order");
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) rep.add({"(ab)c = a(bc)", {a, b, c}, {}});
        if (mul(a, add.op(b, c)) != add.op(mul(a, b), mul(a, c)))
          rep.add({"a(b+c) = ab+ac", {a, b, c}, {}});
      }
  return rep;
}

inline AxiomReport check_ring_axioms(FiniteGroup const& add, Table2 const& mul,
                                     std::size_t max_recorded = SIZE_MAX) {
  auto rep = check_near_ring_axioms(add, mul, max_recorded);
  if (!add.is_abelian()) rep.add({"a+b = b+a", {}, {}});
  std::size_t const n = add.size();
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (mul(add.op(b, c), a) != add.op(mul(b, a), mul(c, a)))
          rep.add({"(b+c)a = ba+ca", {a, b, c}, {}});
  return rep;
}

/// Skew ring: (B,·) a monoid and a(b+c) = ab - a + ac.
inline AxiomReport check_skew_ring_axioms(FiniteGroup const& add, Table2 const& mul,
                                          std::size_t max_recorded = SIZE_MAX) {
  AxiomReport rep;
  rep.max_recorded = max_recorded;
  std::size_t const n = add.size();
  if (mul.size() != n) throw structure_error("mul table order differs from group order");
  bool unit = false;
  for (elem e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    unit = ok;
  }
  if (!unit) rep.add({"multiplicative identity exists", {}, {}});
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) rep.add({"(ab)c = a(bc)", {a, b, c}, {}});
        if (mul(a, add.op(b, c)) != add.op(add.op(mul(a, b), add.inv(a)), mul(a, c)))
          rep.add({"a(b+c) = ab-a+ac", {a, b, c}, {}});
      }
  return rep;
}

inline AxiomReport check_skew_brace_axioms(FiniteGroup const& add, Table2 const& mul,
                                           std::size_t max_recorded = SIZE_MAX) {
  auto rep = check_skew_ring_axioms(add, mul, max_recorded);
  if (rep.ok() && !check_group_axioms(mul, 1).ok()) rep.add({"(B,·) is a group", {}, {}});
  return rep;
}

namespace detail {
inline FinitePreTruss checked_truss(FiniteGroup const& add, Table2 mul, AxiomReport const& rep,
                                    char const* what) {
  if (!rep.ok()) throw axiom_error(std::string("not a ") + what + ": " + rep.summary(add.labels()));
  return FinitePreTruss(heap_from_group(add), std::move(mul));
}
}  // namespace detail

/// T(R): the heap of (R,+) with the ring multiplication.
inline FinitePreTruss truss_from_ring(FiniteGroup const& add, Table2 mul) {
  auto rep = check_ring_axioms(add, mul, 1);
  return detail::checked_truss(add, std::move(mul), rep, "ring");
}

inline FinitePreTruss truss_from_near_ring(FiniteGroup const& add, Table2 mul) {
  auto rep = check_near_ring_axioms(add, mul, 1);
  return detail::checked_truss(add, std::move(mul), rep, "near-ring");
}

inline FinitePreTruss truss_from_skew_ring(FiniteGroup const& add, Table2 mul) {
  auto rep = check_skew_ring_axioms(add, mul, 1);
  return detail::checked_truss(add, std::move(mul), rep, "skew ring");
}

inline FinitePreTruss truss_from_brace(FiniteGroup const& add, Table2 mul) {
  auto rep = check_skew_brace_axioms(add, mul, 1);
  return detail::checked_truss(add, std::move(mul), rep, "skew brace");
}

struct BraceTables {
  FiniteGroup add;  ///< +_1, the retract at the multiplicative identity
  FiniteGroup mul;
};

/// The skew brace (T, +_1, ·) of a brace-type near-truss.
inline BraceTables retract_brace(FinitePreTruss const& t) {
  if (!t.is_near()) throw precondition_error("retract_brace: not brace-type (not a near-truss)");
  auto mg = multiplicative_group(t);
  if (!mg) throw precondition_error("retract_brace: not brace-type (multiplication is not a group)");
  BraceTables out{retract(t.heap(), *t.unit()), *mg};
  auto rep = check_skew_brace_axioms(out.add, out.mul.table(), 1);
  if (!rep.ok()) throw internal_error("retract_brace: brace law fails: " + rep.summary(t.labels()));
  return out;
}

struct UnitCorrespondence {
  elem left_absorber;
  elem unit;  ///< [1,e,1]
};

/// Left absorbers e of a unital near-truss paired with the skew-ring units
/// u = [1,e,1] of (T,+_1,·); u satisfies a·u = a + u + a.
inline std::vector<UnitCorrespondence> skew_ring_unit_correspondence(FinitePreTruss const& t) {
  if (!t.is_near() || !t.unit())
    throw precondition_error("skew_ring_unit_correspondence: needs a unital near-truss");
  elem const one = *t.unit();
  auto plus = [&](elem a, elem b) { return t(a, one, b); };
  auto is_unit = [&](elem u) {
    for (elem a = 0; a < t.size(); ++a)
      if (t.mul(a, u) != plus(plus(a, u), a)) return false;
    return true;
  };
  std::vector<UnitCorrespondence> out;
  for (elem e : t.absorbers().left_absorbers) {
    elem u = t(one, e, one);
    if (!is_unit(u)) throw internal_error("skew_ring_unit_correspondence: [1,e,1] is not a unit");
    out.push_back({e, u});
  }
  for (elem u = 0; u < t.size(); ++u)
    if (is_unit(u) && !t.absorbers().left_absorbers.contains(t(one, u, one)))
      throw internal_error("skew_ring_unit_correspondence: unit without matching absorber");
  return out;
}

/// The product a *_e b = tau_e^1(tau_1^e(a) · tau_1^e(b)) induced by a left absorber e.
/// The result has unit [1,e,1] and 1 as a left absorber.
inline FinitePreTruss induced_product(FinitePreTruss const& t, elem e) {
  if (!t.is_near() || !t.unit())
    throw precondition_error("induced_product: needs a unital near-truss");
  if (e >= t.size() || !t.absorbers().left_absorbers.contains(e))
    throw precondition_error("induced_product: e is not a left absorber");
  elem const one = *t.unit();
  auto to_e = [&](elem a) { return t(a, one, e); };
  auto to_one = [&](elem a) { return t(a, e, one); };
  return FinitePreTruss::from_function(t.heap(), [&](elem a, elem b) {
    return to_one(t.mul(to_e(a), to_e(b)));
  });
}

/// Componentwise product; element (a,b) has index a*|B| + b.
inline FinitePreTruss product_pretruss(FinitePreTruss const& a, FinitePreTruss const& b) {
  std::size_t const m = b.size();
  Labels labels;
  for (elem x = 0; x < a.size(); ++x)
    for (elem y = 0; y < m; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  std::size_t const n = a.size() * m;
  auto heap = FiniteHeap::from_table(labels, Table3::from_function(n, [&](elem x, elem y, elem z) {
                                       return a(x / m, y / m, z / m) * m + b(x % m, y % m, z % m);
                                     }));
  return FinitePreTruss::from_function(std::move(heap), [&](elem x, elem y) {
    return a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  });
}

/// The sub-pre-truss on a subset closed under both operations.
inline FinitePreTruss restrict_to(FinitePreTruss const& t, Subset const& s) {
  std::vector<elem> index(t.size(), static_cast<elem>(t.size()));
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<elem>(i);
  Labels labels;
  for (elem x : s) labels.push_back(t.label(x));
  auto look = [&](elem v) {
    if (index[v] == t.size()) throw precondition_error("restrict_to: subset is not closed");
    return index[v];
  };
  auto heap = FiniteHeap::from_table(labels, Table3::from_function(s.size(), [&](elem x, elem y, elem z) {
                                       return look(t(s[x], s[y], s[z]));
                                     }));
  return FinitePreTruss::from_function(std::move(heap),
                                       [&](elem x, elem y) { return look(t.mul(s[x], s[y])); });
}

}  // namespace trusskit
