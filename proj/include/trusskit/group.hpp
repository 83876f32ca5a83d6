#pragma once

/**
 * @file group.hpp
 * @brief Finite groups given by Cayley tables, a small catalogue, subgroup
 *        enumeration and isomorphism search.
 */

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trusskit/core.hpp"

namespace trusskit {

/// Exhaustive scan of the group axioms on a binary table.
inline AxiomReport check_group_axioms(Table2 const& op,
                                      std::size_t max_recorded = SIZE_MAX) {
  op.validate();
  AxiomReport rep;
  rep.max_recorded = max_recorded;
  std::size_t const n = op.size();
  if (n == 0) {
    rep.add({"nonempty carrier", {}, {}});
    return rep;
  }
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      for (elem c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          rep.add({"(ab)c = a(bc)",
                   {a, b, c},
                   {{{a, b}}, {{op(a, b), c}}, {{b, c}}, {{a, op(b, c)}}}});
  if (!rep.ok()) return rep;
  std::optional<elem> unit;
  for (elem e = 0; e < n && !unit; ++e) {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a) ok = op(e, a) == a && op(a, e) == a;
    if (ok) unit = e;
  }
  if (!unit) {
    rep.add({"identity exists", {}, {}});
    return rep;
  }
  for (elem a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (elem b = 0; b < n && !has_inverse; ++b)
      has_inverse = op(a, b) == *unit && op(b, a) == *unit;
    if (!has_inverse) rep.add({"inverse exists", {a}, {}});
  }
  return rep;
}

/// A verified finite group. Instances only exist when the axioms hold.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Verifies the table exhaustively; throws axiom_error on failure.
  static FiniteGroup from_table(Labels labels, Table2 op) {
    if (labels.size() != op.size())
      throw structure_error("group has " + std::to_string(labels.size())
                            + " labels but a table of order "
                            + std::to_string(op.size()));
    auto rep = check_group_axioms(op, 1);
    if (!rep.ok()) throw axiom_error("not a group: " + rep.summary(labels));
    FiniteGroup g;
    g.labels_ = std::move(labels);
    g.op_ = std::move(op);
    std::size_t const n = g.op_.size();
    for (elem e = 0; e < n; ++e) {
      bool ok = true;
      for (elem a = 0; a < n && ok; ++a) ok = g.op_(e, a) == a;
      if (ok) {
        g.unit_ = e;
        break;
      }
    }
    g.inv_.assign(n, 0);
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        if (g.op_(a, b) == g.unit_) g.inv_[a] = b;
    return g;
  }

  template <typename F>
  static FiniteGroup from_function(Labels labels, F&& f) {
    auto n = labels.size();
    return from_table(std::move(labels), Table2::from_function(n, std::forward<F>(f)));
  }

  std::size_t size() const noexcept { return op_.size(); }
  elem op(elem a, elem b) const noexcept { return op_(a, b); }
  elem unit() const noexcept { return unit_; }
  elem inv(elem a) const noexcept { return inv_[a]; }
  Table2 const& table() const noexcept { return op_; }
  Labels const& labels() const noexcept { return labels_; }
  std::string const& label(elem a) const { return labels_[a]; }

  bool is_abelian() const {
    for (elem a = 0; a < size(); ++a)
      for (elem b = a + 1; b < size(); ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

  std::size_t order_of(elem a) const {
    std::size_t k = 1;
    for (elem x = a; x != unit_; x = op(x, a)) ++k;
    return k;
  }

  /// Subgroup generated by the given elements.
  Subset closure(std::vector<elem> gens) const {
    std::vector<char> in(size(), 0);
    std::vector<elem> members{unit_};
    in[unit_] = 1;
    for (elem g : gens)
      if (!in[g]) {
        in[g] = 1;
        members.push_back(g);
      }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (elem p : {op(members[i], members[j]), op(members[j], members[i])})
          if (!in[p]) {
            in[p] = 1;
            members.push_back(p);
          }
    return Subset(std::move(members));
  }

 private:
  Labels labels_;
  Table2 op_;
  elem unit_ = 0;
  std::vector<elem> inv_;
};

/// The opposite group, (a,b) -> ba.
inline FiniteGroup opposite(FiniteGroup const& g) {
  return FiniteGroup::from_function(g.labels(),
                                    [&](elem a, elem b) { return g.op(b, a); });
}

/// All subgroups, smallest first; closure of each known subgroup with one
/// more element until nothing new appears.
inline std::vector<Subset> enumerate_subgroups(FiniteGroup const& g) {
  std::set<Subset> found;
  std::vector<Subset> queue{g.closure({})};
  found.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Subset const h = queue[i];
    for (elem x = 0; x < g.size(); ++x) {
      if (h.contains(x)) continue;
      std::vector<elem> gens(h.begin(), h.end());
      gens.push_back(x);
      Subset k = g.closure(std::move(gens));
      if (found.insert(k).second) queue.push_back(std::move(k));
    }
  }
  return {found.begin(), found.end()};
}

inline bool is_normal_subgroup(FiniteGroup const& g, Subset const& h) {
  for (elem a = 0; a < g.size(); ++a)
    for (elem x : h)
      if (!h.contains(g.op(g.op(a, x), g.inv(a)))) return false;
  return true;
}

/// Sorted multiset of element orders; an isomorphism invariant.
inline std::vector<std::size_t> order_profile(FiniteGroup const& g) {
  std::vector<std::size_t> out;
  for (elem a = 0; a < g.size(); ++a) out.push_back(g.order_of(a));
  std::sort(out.begin(), out.end());
  return out;
}

/// Searches for an isomorphism g -> h by choosing images of a greedy
/// generating set and extending multiplicatively.
inline std::optional<Bijection> find_group_isomorphism(FiniteGroup const& g,
                                                       FiniteGroup const& h) {
  if (g.size() != h.size() || order_profile(g) != order_profile(h)) return std::nullopt;
  std::vector<elem> gens;
  Subset span = g.closure({});
  // Prefer high-order generators so the generating set stays small.
  std::vector<elem> by_order(g.size());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(), [&](elem a, elem b) {
    return g.order_of(a) > g.order_of(b);
  });
  for (elem x : by_order)
    if (!span.contains(x)) {
      gens.push_back(x);
      span = g.closure(gens);
    }
  std::size_t const n = g.size();
  std::vector<elem> images(gens.size());

  auto extend = [&]() -> std::optional<Bijection> {
    Bijection map(n, static_cast<elem>(n));
    std::vector<char> used(n, 0);
    map[g.unit()] = h.unit();
    used[h.unit()] = 1;
    std::vector<elem> frontier{g.unit()};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      elem x = frontier[i];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        elem y = g.op(x, gens[k]);
        elem fy = h.op(map[x], images[k]);
        if (map[y] == n) {
          if (used[fy]) return std::nullopt;
          map[y] = fy;
          used[fy] = 1;
          frontier.push_back(y);
        } else if (map[y] != fy) {
          return std::nullopt;
        }
      }
    }
    if (frontier.size() != n) return std::nullopt;
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        if (map[g.op(a, b)] != h.op(map[a], map[b])) return std::nullopt;
    return map;
  };

  std::function<std::optional<Bijection>(std::size_t)> choose =
      [&](std::size_t k) -> std::optional<Bijection> {
    if (k == gens.size()) return extend();
    for (elem y = 0; y < n; ++y) {
      if (h.order_of(y) != g.order_of(gens[k])) continue;
      images[k] = y;
      if (auto m = choose(k + 1)) return m;
    }
    return std::nullopt;
  };
  return choose(0);
}

namespace groups {

inline FiniteGroup cyclic(std::size_t n) {
  return FiniteGroup::from_function(numeric_labels(n), [n](elem a, elem b) {
    return (a + b) % n;
  });
}

inline FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h) {
  Labels labels;
  for (elem a = 0; a < g.size(); ++a)
    for (elem b = 0; b < h.size(); ++b)
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  std::size_t const m = h.size();
  return FiniteGroup::from_function(std::move(labels), [&](elem x, elem y) {
    return g.op(x / m, y / m) * m + h.op(x % m, y % m);
  });
}

inline FiniteGroup klein() {
  auto g = direct_product(cyclic(2), cyclic(2));
  return FiniteGroup::from_table({"e", "a", "b", "c"}, g.table());
}

/// Group generated by permutations of {0..d-1}; composition (p*q)(i) = p(q(i)).
inline FiniteGroup permutation_group(std::vector<std::vector<elem>> gens,
                                     std::function<std::string(std::vector<elem> const&)>
                                         name = {}) {
  std::size_t const d = gens.empty() ? 0 : gens.front().size();
  std::vector<elem> id(d);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [&](std::vector<elem> const& p, std::vector<elem> const& q) {
    std::vector<elem> r(d);
    for (std::size_t i = 0; i < d; ++i) r[i] = p[q[i]];
    return r;
  };
  std::map<std::vector<elem>, elem> index{{id, 0}};
  std::vector<std::vector<elem>> perms{id};
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (auto const& s : gens) {
      auto r = compose(perms[i], s);
      if (index.emplace(r, static_cast<elem>(perms.size())).second) perms.push_back(r);
    }
  Labels labels;
  for (auto const& p : perms) {
    if (name) {
      labels.push_back(name(p));
    } else {
      std::string s;
      for (elem x : p) s += std::to_string(x);
      labels.push_back(s);
    }
  }
  return FiniteGroup::from_function(std::move(labels), [&](elem a, elem b) {
    return index.at(compose(perms[a], perms[b]));
  });
}

/// S3 as permutations of {0,1,2}; labels are one-line images, e.g. "102".
inline FiniteGroup symmetric3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}); }

/// Dihedral group of order 8 acting on the vertices of a square.
inline FiniteGroup dihedral4() { return permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}); }

/// Quaternion group {±1, ±i, ±j, ±k}.
inline FiniteGroup quaternion8() {
  // Unit index u in {0:1, 1:i, 2:j, 3:k}, sign s; element = 4*s + u.
  static int const mul_unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static int const mul_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Labels labels{"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  return FiniteGroup::from_function(std::move(labels), [](elem a, elem b) {
    int sa = static_cast<int>(a / 4), ua = static_cast<int>(a % 4);
    int sb = static_cast<int>(b / 4), ub = static_cast<int>(b % 4);
    int s = (sa + sb + mul_sign[ua][ub]) % 2;
    return static_cast<elem>(4 * s + mul_unit[ua][ub]);
  });
}

/// Units of Z/m under multiplication; labels are the residues.
inline FiniteGroup units_mod(std::size_t m) {
  std::vector<std::size_t> units;
  if (m == 1) units = {0};
  for (std::size_t r = 1; r < m; ++r)
    if (std::gcd(r, m) == 1) units.push_back(r);
  Labels labels;
  for (auto u : units) labels.push_back(std::to_string(u));
  return FiniteGroup::from_function(std::move(labels), [&](elem a, elem b) {
    auto p = (units[a] * units[b]) % m;
    return static_cast<elem>(std::find(units.begin(), units.end(), p) - units.begin());
  });
}

/// Every group of order at most 8, up to isomorphism, with a short name.
inline std::vector<std::pair<std::string, FiniteGroup>> all_up_to_order_8() {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (std::size_t n = 1; n <= 8; ++n) out.emplace_back("C" + std::to_string(n), cyclic(n));
  out.emplace_back("C2xC2", klein());
  out.emplace_back("S3", symmetric3());
  out.emplace_back("C2xC4", direct_product(cyclic(2), cyclic(4)));
  out.emplace_back("C2xC2xC2", direct_product(klein(), cyclic(2)));
  out.emplace_back("D4", dihedral4());
  out.emplace_back("Q8", quaternion8());
  return out;
}

}  // namespace groups
}  // namespace trusskit
