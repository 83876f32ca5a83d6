#pragma once

/**
 * @file catalogue.hpp
 * @brief Small named pre-trusses. Every entry is built through a verifying
 *        constructor, so no table here is trusted by hand.
 */

#include <string>
#include <utility>
#include <vector>

#include "trusskit/pretruss.hpp"

namespace trusskit::catalogue {

/// T(Z/n).
inline FinitePreTruss ring_mod(std::size_t n) {
  auto add = groups::cyclic(n);
  return truss_from_ring(add, Table2::from_function(n, [n](elem a, elem b) { return (a * b) % n; }));
}

/// T(F_4); elements 0, 1, w, w+1 with w^2 = w+1, encoded as bit pairs.
inline FinitePreTruss field4() {
  Labels labels{"0", "1", "w", "w+1"};
  auto add = FiniteGroup::from_function(labels, [](elem a, elem b) { return a ^ b; });
  auto mul = Table2::from_function(4, [](elem a, elem b) {
    // Polynomial product of (a1 w + a0)(b1 w + b0) reduced by w^2 = w + 1.
    elem a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    elem c0 = (a0 & b0) ^ (a1 & b1);
    elem c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    return c0 | (c1 << 1);
  });
  return truss_from_ring(add, mul);
}

/// The trivial brace on a group: both operations are the group law.
inline FinitePreTruss trivial_brace(FiniteGroup const& g) {
  return truss_from_brace(g, g.table());
}

inline FinitePreTruss trivial_brace_mod(std::size_t n) { return trivial_brace(groups::cyclic(n)); }

/// Skew brace with addition a + b = ba and multiplication ab.
inline FinitePreTruss opposite_brace(FiniteGroup const& g) {
  return truss_from_brace(opposite(g), g.table());
}

/// Z/n with n·m = m; every element is a left absorber.
inline FinitePreTruss right_projection_near_ring(std::size_t n) {
  return truss_from_near_ring(groups::cyclic(n),
                              Table2::from_function(n, [](elem, elem b) { return b; }));
}

/// All self-maps of Z/2 under pointwise addition with n·m = m∘n.
/// Left distributive only; the two constant maps are left absorbers.
/// Element x encodes the map 0 -> x&1, 1 -> x>>1.
inline FinitePreTruss maps_near_ring() {
  Labels labels{"0", "swap", "id", "1"};  // x = f(0) + 2 f(1)
  auto add = FiniteGroup::from_function(labels, [](elem a, elem b) { return a ^ b; });
  auto apply = [](elem f, elem v) { return v ? f >> 1 : f & 1; };
  auto mul = Table2::from_function(4, [&](elem n, elem m) {
    return apply(m, apply(n, 0)) | (apply(m, apply(n, 1)) << 1);
  });
  return truss_from_near_ring(add, mul);
}

/// H(G) with ab = a; every element is a right absorber.
inline FinitePreTruss left_projection(FiniteGroup const& g) {
  return FinitePreTruss::from_function(heap_from_group(g), [](elem a, elem) { return a; });
}

/// H(Z/n) with ab = min(a,b); distributive laws fail for n >= 3.
inline FinitePreTruss min_semilattice(std::size_t n) {
  return FinitePreTruss::from_function(heap_from_group(groups::cyclic(n)),
                                       [](elem a, elem b) { return std::min(a, b); });
}

/// H(Z/n) with ab = max(a,b).
inline FinitePreTruss max_semilattice(std::size_t n) {
  return FinitePreTruss::from_function(heap_from_group(groups::cyclic(n)),
                                       [](elem a, elem b) { return std::max(a, b); });
}

/// H(G) with constant product k; k is the two-sided absorber.
inline FinitePreTruss constant_product(FiniteGroup const& g, elem k) {
  return FinitePreTruss::from_function(heap_from_group(g), [k](elem, elem) { return k; });
}

/// T(B) x T(R) with B the trivial brace on Z/2 and R the ring Z/2.
inline FinitePreTruss brace_times_ring() {
  return product_pretruss(trivial_brace_mod(2), ring_mod(2));
}

/// 2x2 matrices over Z/4 with odd diagonal and even off-diagonal entries
/// under a - b + c and matrix product; a brace-type truss of order 16.
/// Element index: d0/2 + 2*(d1/2) + 4*(o0/2) + 8*(o1/2) for [[d0,o0],[o1,d1]].
inline FinitePreTruss odd_matrices_mod4() {
  struct M {
    int a, b, c, d;  // [[a,b],[c,d]]
  };
  auto decode = [](elem x) {
    return M{1 + 2 * static_cast<int>(x & 1), 2 * static_cast<int>((x >> 2) & 1),
             2 * static_cast<int>((x >> 3) & 1), 1 + 2 * static_cast<int>((x >> 1) & 1)};
  };
  auto md = [](int v) { return ((v % 4) + 4) % 4; };
  auto encode = [&](M m) {
    return static_cast<elem>((md(m.a) / 2) | ((md(m.d) / 2) << 1) | ((md(m.b) / 2) << 2)
                             | ((md(m.c) / 2) << 3));
  };
  Labels labels;
  for (elem x = 0; x < 16; ++x) {
    auto m = decode(x);
    labels.push_back("[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],["
                     + std::to_string(m.c) + "," + std::to_string(m.d) + "]]");
  }
  auto heap = FiniteHeap::from_table(labels, Table3::from_function(16, [&](elem x, elem y, elem z) {
                                       auto p = decode(x), q = decode(y), r = decode(z);
                                       return encode({p.a - q.a + r.a, p.b - q.b + r.b,
                                                      p.c - q.c + r.c, p.d - q.d + r.d});
                                     }));
  return FinitePreTruss::from_function(std::move(heap), [&](elem x, elem y) {
    auto p = decode(x), q = decode(y);
    return encode({p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d, p.c * q.a + p.d * q.c,
                   p.c * q.b + p.d * q.d});
  });
}

/// Named entries of order at most 6, covering every kind.
inline std::vector<std::pair<std::string, FinitePreTruss>> small() {
  std::vector<std::pair<std::string, FinitePreTruss>> out;
  out.emplace_back("trivial", ring_mod(1));
  for (std::size_t n = 2; n <= 6; ++n) out.emplace_back("T(Z/" + std::to_string(n) + ")", ring_mod(n));
  out.emplace_back("T(F4)", field4());
  for (std::size_t n = 2; n <= 6; ++n)
    out.emplace_back("brace Z/" + std::to_string(n), trivial_brace_mod(n));
  out.emplace_back("brace C2xC2", trivial_brace(groups::klein()));
  out.emplace_back("brace S3", trivial_brace(groups::symmetric3()));
  out.emplace_back("opposite brace S3", opposite_brace(groups::symmetric3()));
  out.emplace_back("near-ring Z/4 nm=m", right_projection_near_ring(4));
  out.emplace_back("maps Z/2", maps_near_ring());
  out.emplace_back("left projection Z/2",left_projection(groups::cyclic(2)));
  out.emplace_back("left projection S3", left_projection(groups::symmetric3()));
  out.emplace_back("min Z/3", min_semilattice(3));
  out.emplace_back("max Z/4", max_semilattice(4));
  out.emplace_back("constant Z/3", constant_product(groups::cyclic(3), 1));
  out.emplace_back("T(Z/2 brace) x T(Z/2)", brace_times_ring());
  return out;
}

}  // namespace trusskit::catalogue
