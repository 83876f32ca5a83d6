#pragma once

/**
 * @file heap.hpp
 * @brief Finite heaps: axiom checking, retracts, translations, sub-heaps and
 *        the sub-heap equivalence relation.
 *
 * A heap is a set with a ternary operation [a,b,c] that is associative,
 * [[a,b,c],d,e] = [a,b,[c,d,e]], and satisfies the Mal'cev identities
 * [a,a,b] = b = [b,a,a]. Fixing the middle argument gives a group (a retract);
 * conversely every group G gives the heap [a,b,c] = a b^-1 c.
 */

#include <set>

#include "trusskit/core.hpp"
#include "trusskit/group.hpp"

namespace trusskit {

/// Exhaustive heap axiom scan. Mal'cev identities are checked first (O(n^2));
/// if any fails the O(n^5) associativity scan is skipped.
inline AxiomReport check_heap_axioms(Table3 const& t, std::size_t max_recorded = SIZE_MAX) {
  t.validate();
  AxiomReport rep;
  rep.max_recorded = max_recorded;
  std::size_t const n = t.size();
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      if (t(a, a, b) != b) rep.add({"[a,a,b] = b", {a, b}, {{{a, a, b}}}});
      if (t(b, a, a) != b) rep.add({"[b,a,a] = b", {a, b}, {{{b, a, a}}}});
    }
  if (!rep.ok()) return rep;
  for (elem a1 = 0; a1 < n; ++a1)
    for (elem a2 = 0; a2 < n; ++a2)
      for (elem a3 = 0; a3 < n; ++a3) {
        elem const left_inner = t(a1, a2, a3);
        for (elem a4 = 0; a4 < n; ++a4)
          for (elem a5 = 0; a5 < n; ++a5) {
            elem const right_inner = t(a3, a4, a5);
            if (t(left_inner, a4, a5) != t(a1, a2, right_inner))
              rep.add({"[[a,b,c],d,e] = [a,b,[c,d,e]]",
                       {a1, a2, a3, a4, a5},
                       {{{a1, a2, a3}},
                        {{left_inner, a4, a5}},
                        {{a3, a4, a5}},
                        {{a1, a2, right_inner}}}});
          }
      }
  return rep;
}

/// A finite heap. Every instance satisfies the heap axioms.
class FiniteHeap {
 public:
  FiniteHeap() = default;

  /// Verifies the table and throws axiom_error if it is not a heap.
  ///
  /// A table is a heap iff it satisfies Mal'cev, its retract at 0 is a group,
  /// and [a,b,c] = a b^-1 c in that group; this is decided in O(n^3). Use
  /// check_heap_axioms for a full violation listing.
  static FiniteHeap from_table(Labels labels, Table3 table) {
    if (labels.size() != table.size())
      throw structure_error("heap has " + std::to_string(labels.size())
                            + " labels but a table of order "
                            + std::to_string(table.size()));
    table.validate();
    std::size_t const n = table.size();
    if (n == 0) throw axiom_error("not a heap: empty carrier");
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        if (table(a, a, b) != b || table(b, a, a) != b)
          throw axiom_error("not a heap: Mal'cev identity fails at (" + labels[a] + ","
                            + labels[b] + ")");
    auto retract_op = Table2::from_function(n, [&](elem a, elem c) { return table(a, 0, c); });
    auto grp = check_group_axioms(retract_op, 1);
    if (!grp.ok()) {
      auto full = check_heap_axioms(table, 1);
      throw axiom_error("not a heap: " + full.summary(labels));
    }
    auto g = FiniteGroup::from_table(labels, retract_op);
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        for (elem c = 0; c < n; ++c)
          if (table(a, b, c) != g.op(g.op(a, g.inv(b)), c)) {
            auto full = check_heap_axioms(table, 1);
            throw axiom_error("not a heap: " + full.summary(labels));
          }
    FiniteHeap h;
    h.labels_ = std::move(labels);
    h.table_ = std::move(table);
    return h;
  }

  /// The heap of a group, [a,b,c] = a b^-1 c.
  static FiniteHeap from_group(FiniteGroup const& g) {
    FiniteHeap h;
    h.labels_ = g.labels();
    h.table_ = Table3::from_function(g.size(), [&](elem a, elem b, elem c) {
      return g.op(g.op(a, g.inv(b)), c);
    });
    return h;
  }

  std::size_t size() const noexcept { return table_.size(); }
  elem operator()(elem a, elem b, elem c) const noexcept { return table_(a, b, c); }
  Table3 const& table() const noexcept { return table_; }
  Labels const& labels() const noexcept { return labels_; }
  std::string const& label(elem a) const { return labels_[a]; }

  bool is_abelian() const {
    for (elem a = 0; a < size(); ++a)
      for (elem b = 0; b < size(); ++b)
        for (elem c = a + 1; c < size(); ++c)
          if (table_(a, b, c) != table_(c, b, a)) return false;
    return true;
  }

 private:
  Labels labels_;
  Table3 table_;
};

inline FiniteHeap heap_from_group(FiniteGroup const& g) { return FiniteHeap::from_group(g); }

/// The retract G(H;e): a +_e b = [a,e,b], with unit e.
inline FiniteGroup retract(FiniteHeap const& h, elem e) {
  if (e >= h.size()) throw precondition_error("retract: element out of range");
  return FiniteGroup::from_function(h.labels(), [&](elem a, elem b) { return h(a, e, b); });
}

/// The translation z -> [z,a,b]; a heap automorphism with inverse translation(h,b,a).
inline Bijection translation(FiniteHeap const& h, elem a, elem b) {
  Bijection m(h.size());
  for (elem z = 0; z < h.size(); ++z) m[z] = h(z, a, b);
  return m;
}

inline bool is_heap_homomorphism(FiniteHeap const& src, FiniteHeap const& dst,
                                 std::vector<elem> const& map) {
  if (map.size() != src.size()) return false;
  for (elem x : map)
    if (x >= dst.size()) return false;
  for (elem a = 0; a < src.size(); ++a)
    for (elem b = 0; b < src.size(); ++b)
      for (elem c = 0; c < src.size(); ++c)
        if (map[src(a, b, c)] != dst(map[a], map[b], map[c])) return false;
  return true;
}

inline Subset image(std::vector<elem> const& map, Subset const& s) {
  std::vector<elem> out;
  for (elem x : s) out.push_back(map[x]);
  return Subset(std::move(out));
}

/// Closed under the ternary operation. The empty set qualifies vacuously.
inline bool is_subheap(FiniteHeap const& h, Subset const& s) {
  auto in = s.mask(h.size());
  for (elem a : s)
    for (elem b : s)
      for (elem c : s)
        if (!in[h(a, b, c)]) return false;
  return true;
}

inline void require_nonempty_subheap(FiniteHeap const& h, Subset const& s, char const* who) {
  if (s.empty()) throw precondition_error(std::string(who) + ": subset must be nonempty");
  for (elem x : s)
    if (x >= h.size()) throw precondition_error(std::string(who) + ": element out of range");
  if (!is_subheap(h, s)) throw precondition_error(std::string(who) + ": not a sub-heap");
}

/// Normality in the universal form: [[a,e,s],a,e] in S for all a in H, e,s in S.
/// Returns false for subsets that are not sub-heaps; rejects the empty set.
inline bool is_normal_subheap(FiniteHeap const& h, Subset const& s) {
  if (s.empty()) throw precondition_error("is_normal_subheap: subset must be nonempty");
  if (!is_subheap(h, s)) return false;
  auto in = s.mask(h.size());
  for (elem a = 0; a < h.size(); ++a)
    for (elem e : s)
      for (elem x : s)
        if (!in[h(h(a, e, x), a, e)]) return false;
  return true;
}

/// Normality in the existential form: some e in S such that for all a in H and
/// s in S there is t in S with [a,e,s] = [t,e,a].
inline bool is_normal_subheap_existential(FiniteHeap const& h, Subset const& s) {
  if (s.empty()) throw precondition_error("is_normal_subheap: subset must be nonempty");
  if (!is_subheap(h, s)) return false;
  for (elem e : s) {
    bool works = true;
    for (elem a = 0; a < h.size() && works; ++a)
      for (elem x : s) {
        elem lhs = h(a, e, x);
        bool found = false;
        for (elem t : s)
          if (h(t, e, a) == lhs) {
            found = true;
            break;
          }
        if (!found) {
          works = false;
          break;
        }
      }
    if (works) return true;
  }
  return false;
}

/// a ~_S b in the "there exists s" form.
inline bool subheap_related_exists(FiniteHeap const& h, Subset const& s, elem a, elem b) {
  for (elem x : s)
    if (s.contains(h(a, b, x))) return true;
  return false;
}

/// a ~_S b in the "for all s" form.
inline bool subheap_related_forall(FiniteHeap const& h, Subset const& s, elem a, elem b) {
  for (elem x : s)
    if (!s.contains(h(a, b, x))) return false;
  return true;
}

/// S_e^a = tau_e^a(S) = {[s,e,a] : s in S}, the class of a when e is in S.
inline Subset translate(FiniteHeap const& h, Subset const& s, elem e, elem a) {
  std::vector<elem> out;
  out.reserve(s.size());
  for (elem x : s) out.push_back(h(x, e, a));
  return Subset(std::move(out));
}

/// Classes of ~_S computed from the relation itself.
inline Partition subheap_classes(FiniteHeap const& h, Subset const& s) {
  require_nonempty_subheap(h, s, "subheap_classes");
  std::size_t const n = h.size();
  std::vector<elem> label(n, static_cast<elem>(n));
  for (elem a = 0; a < n; ++a) {
    if (label[a] != n) continue;
    label[a] = a;
    for (elem b = a + 1; b < n; ++b)
      if (label[b] == n && subheap_related_forall(h, s, a, b)) label[b] = a;
  }
  return Partition::from_labels(label);
}

/// Classes of ~_S computed as translates S_e^a for a fixed e in S.
inline Partition subheap_classes_by_translation(FiniteHeap const& h, Subset const& s) {
  require_nonempty_subheap(h, s, "subheap_classes_by_translation");
  std::size_t const n = h.size();
  elem const e = s.front();
  std::vector<elem> label(n, static_cast<elem>(n));
  for (elem a = 0; a < n; ++a) {
    if (label[a] != n) continue;
    for (elem x : translate(h, s, e, a)) label[x] = a;
  }
  return Partition::from_labels(label);
}

/// A subset of a heap with its classification flags filled in.
struct SubHeapMarker {
  Subset members;
  bool is_subheap = false;
  bool is_normal = false;
};

inline SubHeapMarker mark_subheap(FiniteHeap const& h, Subset s) {
  SubHeapMarker m;
  m.is_subheap = is_subheap(h, s);
  m.is_normal = !s.empty() && m.is_subheap && is_normal_subheap(h, s);
  m.members = std::move(s);
  return m;
}

/// Sub-heaps containing `through`: exactly the subgroups of the retract at it.
inline std::vector<SubHeapMarker> enumerate_subheaps(FiniteHeap const& h, elem through) {
  std::vector<SubHeapMarker> out;
  for (auto& s : enumerate_subgroups(retract(h, through))) out.push_back(mark_subheap(h, s));
  return out;
}

/// Every nonempty sub-heap, deduplicated, smallest first.
inline std::vector<Subset> all_subheaps(FiniteHeap const& h) {
  std::set<Subset> found;
  for (elem e = 0; e < h.size(); ++e)
    for (auto& s : enumerate_subgroups(retract(h, e))) found.insert(std::move(s));
  return {found.begin(), found.end()};
}

inline std::vector<Subset> all_normal_subheaps(FiniteHeap const& h) {
  std::vector<Subset> out;
  for (auto& s : all_subheaps(h))
    if (is_normal_subheap(h, s)) out.push_back(std::move(s));
  return out;
}

}  // namespace trusskit
