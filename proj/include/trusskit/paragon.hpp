#pragma once

/**
 * @file paragon.hpp
 * @brief Closure conditions, paragons, quotients, ideals and maximality.
 *
 * A paragon is a nonempty normal sub-heap P whose sub-heap classes are all
 * left- and right-closed; these are exactly the classes of pre-truss
 * congruences, and T/P is the quotient by the relation ~_P.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trusskit/pretruss.hpp"

namespace trusskit {

namespace detail {
inline void require_normal(FinitePreTruss const& t, Subset const& s, char const* who) {
  require_nonempty_subheap(t.heap(), s, who);
  if (!is_normal_subheap(t.heap(), s))
    throw precondition_error(std::string(who) + ": not a normal sub-heap");
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Closure

/// [ts',ts,s] in S for all s,s' in S, t in T.
inline bool is_left_closed(FinitePreTruss const& t, Subset const& s) {
  require_nonempty_subheap(t.heap(), s, "is_left_closed");
  auto in = s.mask(t.size());
  for (elem x = 0; x < t.size(); ++x)
    for (elem a : s)
      for (elem b : s)
        if (!in[t(t.mul(x, b), t.mul(x, a), a)]) return false;
  return true;
}

/// [s't,st,s] in S for all s,s' in S, t in T.
inline bool is_right_closed(FinitePreTruss const& t, Subset const& s) {
  require_nonempty_subheap(t.heap(), s, "is_right_closed");
  auto in = s.mask(t.size());
  for (elem x = 0; x < t.size(); ++x)
    for (elem a : s)
      for (elem b : s)
        if (!in[t(t.mul(b, x), t.mul(a, x), a)]) return false;
  return true;
}

/// Existential form: some q in S with [ts',tq,q] in S for all s', t.
inline bool is_left_closed_existential(FinitePreTruss const& t, Subset const& s) {
  require_nonempty_subheap(t.heap(), s, "is_left_closed");
  auto in = s.mask(t.size());
  for (elem q : s) {
    bool ok = true;
    for (elem x = 0; x < t.size() && ok; ++x)
      for (elem b : s)
        if (!in[t(t.mul(x, b), t.mul(x, q), q)]) {
          ok = false;
          break;
        }
    if (ok) return true;
  }
  return false;
}

inline bool is_right_closed_existential(FinitePreTruss const& t, Subset const& s) {
  require_nonempty_subheap(t.heap(), s, "is_right_closed");
  auto in = s.mask(t.size());
  for (elem q : s) {
    bool ok = true;
    for (elem x = 0; x < t.size() && ok; ++x)
      for (elem b : s)
        if (!in[t(t.mul(b, x), t.mul(q, x), q)]) {
          ok = false;
          break;
        }
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Paragon recognition. Each variant requires a nonempty normal sub-heap.

/// Every class of ~_P is left- and right-closed.
inline bool paragon_by_definition(FinitePreTruss const& t, Subset const& p) {
  detail::require_normal(t, p, "is_paragon");
  for (auto const& cls : subheap_classes(t.heap(), p).classes)
    if (!is_left_closed(t, cls) || !is_right_closed(t, cls)) return false;
  return true;
}

/// [a[p,e,b],ab,e] and [[p,e,b]a,ba,e] lie in P for all a,b in T and p,e in P.
inline bool paragon_by_closure(FinitePreTruss const& t, Subset const& p) {
  detail::require_normal(t, p, "is_paragon");
  auto in = p.mask(t.size());
  for (elem a = 0; a < t.size(); ++a)
    for (elem b = 0; b < t.size(); ++b) {
      elem const ab = t.mul(a, b), ba = t.mul(b, a);
      for (elem x : p)
        for (elem e : p) {
          elem const y = t(x, e, b);
          if (!in[t(t.mul(a, y), ab, e)] || !in[t(t.mul(y, a), ba, e)]) return false;
        }
    }
  return true;
}

/// Near-truss form: P left-closed and every class right-closed.
inline bool paragon_near_shortcut(FinitePreTruss const& t, Subset const& p) {
  if (!t.is_near()) throw precondition_error("paragon_near_shortcut: not a near-truss");
  detail::require_normal(t, p, "is_paragon");
  if (!is_left_closed(t, p)) return false;
  for (auto const& cls : subheap_classes(t.heap(), p).classes)
    if (!is_right_closed(t, cls)) return false;
  return true;
}

/// Skew truss form: P closed.
inline bool paragon_skew_shortcut(FinitePreTruss const& t, Subset const& p) {
  if (!t.is_skew()) throw precondition_error("paragon_skew_shortcut: not a skew truss");
  detail::require_normal(t, p, "is_paragon");
  return is_left_closed(t, p) && is_right_closed(t, p);
}

/// Dispatches to the cheapest criterion valid for the kind of t.
/// Throws precondition_error unless p is a nonempty normal sub-heap.
inline bool is_paragon(FinitePreTruss const& t, Subset const& p) {
  if (t.is_skew()) return paragon_skew_shortcut(t, p);
  if (t.is_near()) return paragon_near_shortcut(t, p);
  return paragon_by_closure(t, p);
}

struct ParagonMarker {
  Subset members;
  bool left_closed = false;
  bool right_closed = false;
  bool normal = false;
  bool paragon = false;
};

inline ParagonMarker mark_paragon(FinitePreTruss const& t, Subset s) {
  ParagonMarker m;
  m.members = std::move(s);
  if (m.members.empty() || !is_subheap(t.heap(), m.members)) return m;
  m.left_closed = is_left_closed(t, m.members);
  m.right_closed = is_right_closed(t, m.members);
  m.normal = is_normal_subheap(t.heap(), m.members);
  m.paragon = m.normal && is_paragon(t, m.members);
  return m;
}

/// All paragons, smallest first, then lexicographic.
inline std::vector<ParagonMarker> enumerate_paragons(FinitePreTruss const& t) {
  std::vector<ParagonMarker> out;
  for (auto& s : all_normal_subheaps(t.heap())) {
    auto m = mark_paragon(t, std::move(s));
    if (m.paragon) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

struct QuotientStructure {
  Partition classes;
  FinitePreTruss truss;
  std::vector<elem> projection;  ///< element -> class index
};

inline std::string class_label(Subset const& cls, Labels const& labels) {
  return "{" + join_labels(cls, labels) + "}";
}

/// T/P. Throws precondition_error if P is not a paragon.
inline QuotientStructure quotient(FinitePreTruss const& t, Subset const& p) {
  if (!is_paragon(t, p)) throw precondition_error("quotient: not a paragon");
  QuotientStructure q;
  q.classes = subheap_classes(t.heap(), p);
  q.projection = q.classes.class_of;
  std::size_t const m = q.classes.size();
  Labels labels;
  std::vector<elem> rep;
  for (auto const& c : q.classes.classes) {
    labels.push_back(class_label(c, t.labels()));
    rep.push_back(c.front());
  }
  auto const& cls = q.projection;
  auto tern = Table3::from_function(m, [&](elem x, elem y, elem z) {
    return cls[t(rep[x], rep[y], rep[z])];
  });
  auto mul = Table2::from_function(m, [&](elem x, elem y) { return cls[t.mul(rep[x], rep[y])]; });
  // Representative independence: the projection must be a homomorphism.
  for (elem a = 0; a < t.size(); ++a)
    for (elem b = 0; b < t.size(); ++b) {
      if (cls[t.mul(a, b)] != mul(cls[a], cls[b]))
        throw internal_error("quotient: multiplication depends on representatives");
      for (elem c = 0; c < t.size(); ++c)
        if (cls[t(a, b, c)] != tern(cls[a], cls[b], cls[c]))
          throw internal_error("quotient: ternary operation depends on representatives");
    }
  q.truss = FinitePreTruss(FiniteHeap::from_table(std::move(labels), std::move(tern)), std::move(mul));
  for (elem e : t.absorbers().left_absorbers)
    if (!q.truss.absorbers().left_absorbers.contains(cls[e]))
      throw internal_error("quotient: image of a left absorber is not a left absorber");
  for (elem e : t.absorbers().right_absorbers)
    if (!q.truss.absorbers().right_absorbers.contains(cls[e]))
      throw internal_error("quotient: image of a right absorber is not a right absorber");
  return q;
}

/// Every equivalence relation compatible with both operations. |T| <= 8.
inline std::vector<Partition> enumerate_congruences_bruteforce(FinitePreTruss const& t) {
  std::size_t const n = t.size();
  if (n > 8) throw size_guard_error("enumerate_congruences_bruteforce: order exceeds 8");
  std::vector<Partition> out;
  std::vector<elem> rgs(n, 0);  // restricted growth string
  auto compatible = [&] {
    for (elem a = 0; a < n; ++a)
      for (elem a2 = a + 1; a2 < n; ++a2) {
        if (rgs[a] != rgs[a2]) continue;
        for (elem b = 0; b < n; ++b) {
          if (rgs[t.mul(a, b)] != rgs[t.mul(a2, b)]) return false;
          if (rgs[t.mul(b, a)] != rgs[t.mul(b, a2)]) return false;
          for (elem c = 0; c < n; ++c) {
            if (rgs[t(a, b, c)] != rgs[t(a2, b, c)]) return false;
            if (rgs[t(b, a, c)] != rgs[t(b, a2, c)]) return false;
            if (rgs[t(b, c, a)] != rgs[t(b, c, a2)]) return false;
          }
        }
      }
    return true;
  };
  std::function<void(std::size_t, elem)> go = [&](std::size_t i, elem used) {
    if (i == n) {
      if (compatible()) out.push_back(Partition::from_labels(rgs));
      return;
    }
    for (elem v = 0; v <= used && v < n; ++v) {
      rgs[i] = v;
      go(i + 1, v == used ? used + 1 : used);
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    go(1, 1);
  }
  return out;
}

/// The union of the classes of the given partitions.
inline std::vector<Subset> classes_of(std::vector<Partition> const& ps) {
  std::set<Subset> s;
  for (auto const& p : ps)
    for (auto const& c : p.classes) s.insert(c);
  return {s.begin(), s.end()};
}

// ---------------------------------------------------------------------------
// Ideals

inline bool is_left_ideal(FinitePreTruss const& t, Subset const& s) {
  detail::require_normal(t, s, "is_left_ideal");
  for (elem x = 0; x < t.size(); ++x)
    for (elem i : s)
      if (!s.contains(t.mul(x, i))) return false;
  return true;
}

inline bool is_right_ideal(FinitePreTruss const& t, Subset const& s) {
  detail::require_normal(t, s, "is_right_ideal");
  for (elem x = 0; x < t.size(); ++x)
    for (elem i : s)
      if (!s.contains(t.mul(i, x))) return false;
  return true;
}

/// Two-sided.
inline bool is_ideal(FinitePreTruss const& t, Subset const& s) {
  return is_left_ideal(t, s) && is_right_ideal(t, s);
}

inline std::vector<Subset> left_ideals(FinitePreTruss const& t) {
  std::vector<Subset> out;
  for (auto& s : all_normal_subheaps(t.heap()))
    if (is_left_ideal(t, s)) out.push_back(std::move(s));
  return out;
}

struct LeftIdealCensus {
  std::vector<Subset> ideals;
  bool brace_by_count = false;       ///< exactly one left ideal
  bool near_field_by_count = false;  ///< a left absorber and exactly two left ideals
  bool brace_direct = false;         ///< (T,·) is a group
  bool near_field_direct = false;    ///< (T minus e,·) is a group for a left absorber e

  std::size_t count() const noexcept { return ideals.size(); }
  bool consistent() const noexcept {
    return brace_by_count == brace_direct && near_field_by_count == near_field_direct;
  }
};

/// Left ideals of a unital near-truss, classified two independent ways.
inline LeftIdealCensus count_left_ideals(FinitePreTruss const& t) {
  if (!t.is_near() || !t.unit())
    throw precondition_error("count_left_ideals: needs a unital near-truss");
  LeftIdealCensus c;
  c.ideals = left_ideals(t);
  auto const& left_abs = t.absorbers().left_absorbers;
  c.brace_by_count = c.ideals.size() == 1;
  c.near_field_by_count = !left_abs.empty() && c.ideals.size() == 2;
  c.brace_direct = multiplicative_group(t).has_value();
  for (elem e : left_abs) {
    std::vector<elem> rest;
    for (elem x = 0; x < t.size(); ++x)
      if (x != e) rest.push_back(x);
    if (rest.empty()) continue;
    bool closed = true;
    for (elem a : rest)
      for (elem b : rest) closed = closed && t.mul(a, b) != e;
    if (!closed) continue;
    std::vector<elem> index(t.size(), 0);
    for (std::size_t i = 0; i < rest.size(); ++i) index[rest[i]] = static_cast<elem>(i);
    auto tbl = Table2::from_function(rest.size(), [&](elem a, elem b) {
      return index[t.mul(rest[a], rest[b])];
    });
    if (check_group_axioms(tbl, 1).ok()) c.near_field_direct = true;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Maximality

enum class Side { left, right, both };

inline bool closed_on(FinitePreTruss const& t, Subset const& s, Side side) {
  switch (side) {
    case Side::left: return is_left_closed(t, s);
    case Side::right: return is_right_closed(t, s);
    case Side::both: return is_left_closed(t, s) && is_right_closed(t, s);
  }
  return false;
}

/// P is proper and no sub-heap closed on `side` lies strictly between P and T.
inline bool is_maximal_paragon(FinitePreTruss const& t, Subset const& p, Side side) {
  detail::require_normal(t, p, "is_maximal_paragon");
  if (!closed_on(t, p, side))
    throw precondition_error("is_maximal_paragon: not closed on the requested side");
  if (p.size() == t.size()) return false;
  for (auto const& q : all_subheaps(t.heap()))
    if (q.size() > p.size() && q.size() < t.size() && p.is_subset_of(q) && closed_on(t, q, side))
      return false;
  return true;
}

/// Maximality of P agrees with maximality of every translate P_a^t.
inline PropertyResult maximal_translation_check(FinitePreTruss const& t, Subset const& p,
                                                Side side) {
  PropertyResult r;
  bool const base = is_maximal_paragon(t, p, side);
  for (elem a : p)
    for (elem x = 0; x < t.size(); ++x) {
      ++r.cases;
      auto q = translate(t.heap(), p, a, x);
      if (is_maximal_paragon(t, q, side) != base)
        r.fail("translate at (" + t.label(a) + "," + t.label(x) + ")");
    }
  return r;
}

// ---------------------------------------------------------------------------
// Property scans

/// Every left-closed normal sub-heap containing a left ideal is a left ideal.
inline PropertyResult leftclosed_contains_ideal_implies_ideal_check(FinitePreTruss const& t) {
  PropertyResult r;
  auto normals = all_normal_subheaps(t.heap());
  std::vector<Subset> ideals;
  for (auto const& s : normals)
    if (is_left_ideal(t, s)) ideals.push_back(s);
  for (auto const& p : normals) {
    if (!is_left_closed(t, p)) continue;
    for (auto const& i : ideals) {
      if (!i.is_subset_of(p)) continue;
      ++r.cases;
      if (!is_left_ideal(t, p))
        r.fail("{" + join_labels(p, t.labels()) + "} contains {" + join_labels(i, t.labels()) + "}");
    }
  }
  return r;
}

struct AbsorberCriterion {
  bool quotient_has_left_absorber = false;
  bool translate_is_left_ideal = false;
  std::optional<std::pair<elem, elem>> witness;  ///< (a,t) with P_a^t a left ideal

  bool agree() const noexcept { return quotient_has_left_absorber == translate_is_left_ideal; }
};

/// T/P has a left absorber iff some translate P_a^t is a left ideal.
inline AbsorberCriterion quotient_absorber_criterion(FinitePreTruss const& t, Subset const& p) {
  AbsorberCriterion c;
  auto q = quotient(t, p);
  c.quotient_has_left_absorber = !q.truss.absorbers().left_absorbers.empty();
  for (elem a : p)
    for (elem x = 0; x < t.size() && !c.witness; ++x)
      if (is_left_ideal(t, translate(t.heap(), p, a, x))) c.witness = {{a, x}};
  c.translate_is_left_ideal = c.witness.has_value();
  return c;
}

struct BraceQuotientCriterion {
  bool criterion = false;  ///< no class lies inside a proper left ideal
  bool direct = false;     ///< quotient multiplication is a group
  std::optional<Subset> offending_ideal;
  std::optional<Subset> offending_class;

  bool is_brace_type() const noexcept { return direct; }
  bool agree() const noexcept { return criterion == direct; }
};

/// Whether T/P is brace-type, by the left-ideal scan and by a direct group test.
inline BraceQuotientCriterion brace_type_quotient_criterion(FinitePreTruss const& t,
                                                            Subset const& p) {
  if (!t.is_near() || !t.unit())
    throw precondition_error("brace_type_quotient_criterion: needs a unital near-truss");
  auto q = quotient(t, p);
  BraceQuotientCriterion c;
  c.criterion = true;
  for (auto const& i : left_ideals(t)) {
    if (i.size() == t.size()) continue;
    for (auto const& cls : q.classes.classes)
      if (cls.is_subset_of(i)) {
        c.criterion = false;
        c.offending_ideal = i;
        c.offending_class = cls;
        break;
      }
    if (!c.criterion) break;
  }
  c.direct = multiplicative_group(q.truss).has_value();
  return c;
}

inline bool is_maximal_left_ideal(FinitePreTruss const& t, Subset const& s) {
  if (s.size() == t.size() || !is_left_ideal(t, s)) return false;
  for (auto const& j : left_ideals(t))
    if (j.size() > s.size() && j.size() < t.size() && s.is_subset_of(j)) return false;
  return true;
}

/// For a paragon that is a maximal left ideal, T/I has only singleton and
/// whole left ideals.
inline PropertyResult maximal_ideal_quotient_check(FinitePreTruss const& t, Subset const& i) {
  if (!t.is_near()) throw precondition_error("maximal_ideal_quotient_check: not a near-truss");
  if (!is_paragon(t, i)) throw precondition_error("maximal_ideal_quotient_check: not a paragon");
  if (!is_maximal_left_ideal(t, i))
    throw precondition_error("maximal_ideal_quotient_check: not a maximal left ideal");
  PropertyResult r;
  auto q = quotient(t, i);
  for (auto const& j : left_ideals(q.truss)) {
    ++r.cases;
    if (j.size() != 1 && j.size() != q.truss.size())
      r.fail("quotient left ideal {" + join_labels(j, q.truss.labels()) + "}");
  }
  return r;
}

/// f^{-1}(S).
inline Subset preimage(std::vector<elem> const& map, Subset const& s) {
  std::vector<elem> out;
  for (elem x = 0; x < map.size(); ++x)
    if (s.contains(map[x])) out.push_back(x);
  return Subset(std::move(out));
}

}  // namespace trusskit
