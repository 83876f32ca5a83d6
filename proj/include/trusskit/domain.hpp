#pragma once

/**
 * @file domain.hpp
 * @brief Regular elements, domains and completely prime paragons of finite
 *        pre-trusses.
 *
 * T^Abs is T without its two-sided absorber. When T has one-sided absorbers
 * only, nothing is removed; reports carry a flag saying so.
 */

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "trusskit/paragon.hpp"

namespace trusskit {

/// True when T has a one-sided absorber but no two-sided one.
inline bool one_sided_absorbers_only(FinitePreTruss const& t) {
  auto const& a = t.absorbers();
  return !a.two_sided && (!a.left_absorbers.empty() || !a.right_absorbers.empty());
}

struct RegularityReport {
  elem element = 0;
  bool left_regular = false;
  bool right_regular = false;
  std::optional<std::pair<elem, elem>> left_witness;   ///< b != c with ab = ac
  std::optional<std::pair<elem, elem>> right_witness;  ///< b != c with ba = ca
  bool one_sided_absorbers_only = false;

  bool regular() const noexcept { return left_regular && right_regular; }
};

/// Exhaustive regularity of a; a must not be the two-sided absorber.
inline RegularityReport is_regular(FinitePreTruss const& t, elem a) {
  if (a >= t.size()) throw precondition_error("is_regular: element out of range");
  if (!t.in_abs_complement(a))
    throw precondition_error("is_regular: " + t.label(a) + " is the absorber");
  RegularityReport r;
  r.element = a;
  r.one_sided_absorbers_only = one_sided_absorbers_only(t);
  std::size_t const n = t.size();
  std::vector<elem> seen_left(n, static_cast<elem>(n)), seen_right(n, static_cast<elem>(n));
  for (elem b = 0; b < n; ++b) {
    elem const l = t.mul(a, b), rr = t.mul(b, a);
    if (!r.left_witness) {
      if (seen_left[l] != n) r.left_witness = {{seen_left[l], b}};
      else seen_left[l] = b;
    }
    if (!r.right_witness) {
      if (seen_right[rr] != n) r.right_witness = {{seen_right[rr], b}};
      else seen_right[rr] = b;
    }
  }
  r.left_regular = !r.left_witness;
  r.right_regular = !r.right_witness;
  return r;
}

/// Left regularity in a near-truss through a single anchor c: ab != ac for all b != c.
inline bool is_regular_neartruss_shortcut(FinitePreTruss const& t, elem a) {
  if (!t.is_near()) throw precondition_error("is_regular_neartruss_shortcut: not a near-truss");
  for (elem c = 0; c < t.size(); ++c) {
    bool ok = true;
    for (elem b = 0; b < t.size() && ok; ++b) ok = b == c || t.mul(a, b) != t.mul(a, c);
    if (ok) return true;
  }
  return false;
}

struct DomainReport {
  bool domain = true;
  std::optional<RegularityReport> failure;  ///< first non-regular element
  bool one_sided_absorbers_only = false;
};

inline DomainReport domain_report(FinitePreTruss const& t) {
  DomainReport d;
  d.one_sided_absorbers_only = one_sided_absorbers_only(t);
  for (elem a = 0; a < t.size(); ++a) {
    if (!t.in_abs_complement(a)) continue;
    auto r = is_regular(t, a);
    if (!r.regular()) {
      d.domain = false;
      d.failure = r;
      return d;
    }
  }
  return d;
}

/// Every element of T^Abs is regular.
inline bool is_domain(FinitePreTruss const& t) { return domain_report(t).domain; }

/// ab = ab' or ba = b'a with a in T^Abs forces b = b'.
inline bool cancellation_holds(FinitePreTruss const& t) {
  for (elem a = 0; a < t.size(); ++a) {
    if (!t.in_abs_complement(a)) continue;
    for (elem b = 0; b < t.size(); ++b)
      for (elem c = 0; c < t.size(); ++c)
        if (b != c && (t.mul(a, b) == t.mul(a, c) || t.mul(b, a) == t.mul(c, a))) return false;
  }
  return true;
}

struct PrimalityCertificate {
  Subset paragon;
  bool completely_prime = true;
  std::optional<std::array<elem, 4>> witness;  ///< (a,b,c,p)
  bool right_condition = false;                ///< witness violates the right-hand condition
};

namespace detail {
/// ideal_class[k]: the k-th class of ~_P is a two-sided ideal.
inline std::vector<char> ideal_classes(FinitePreTruss const& t, Partition const& part) {
  std::vector<char> out;
  for (auto const& c : part.classes) out.push_back(is_ideal(t, c) ? 1 : 0);
  return out;
}
}  // namespace detail

/// Exhaustive: for all p in P and a,b,c in T, [ab,ac,p] in P or [ba,ca,p] in P
/// forces P_p^a to be an ideal or [b,c,p] in P.
inline PrimalityCertificate is_completely_prime(FinitePreTruss const& t, Subset const& p) {
  if (!is_paragon(t, p)) throw precondition_error("is_completely_prime: not a paragon");
  PrimalityCertificate cert;
  cert.paragon = p;
  auto part = subheap_classes(t.heap(), p);
  auto ideal = detail::ideal_classes(t, part);
  auto in = p.mask(t.size());
  for (elem a = 0; a < t.size(); ++a) {
    if (ideal[part.class_of[a]]) continue;  // P_p^a is the class of a
    for (elem q : p)
      for (elem b = 0; b < t.size(); ++b)
        for (elem c = 0; c < t.size(); ++c) {
          if (in[t(b, c, q)]) continue;
          bool const left = in[t(t.mul(a, b), t.mul(a, c), q)];
          bool const right = in[t(t.mul(b, a), t.mul(c, a), q)];
          if (left || right) {
            cert.completely_prime = false;
            cert.witness = {{a, b, c, q}};
            cert.right_condition = !left;
            return cert;
          }
        }
  }
  return cert;
}

/// Skew truss form: some p in P such that [ad,ap,p] in P or [da,pa,p] in P
/// forces P_p^a to be an ideal or d in P.
inline bool completely_prime_skew_shortcut(FinitePreTruss const& t, Subset const& p) {
  if (!t.is_skew()) throw precondition_error("completely_prime_skew_shortcut: not a skew truss");
  if (!is_paragon(t, p)) throw precondition_error("completely_prime_skew_shortcut: not a paragon");
  auto part = subheap_classes(t.heap(), p);
  auto ideal = detail::ideal_classes(t, part);
  auto in = p.mask(t.size());
  for (elem q : p) {
    bool ok = true;
    for (elem a = 0; a < t.size() && ok; ++a) {
      if (ideal[part.class_of[a]]) continue;
      for (elem d = 0; d < t.size(); ++d) {
        if (in[d]) continue;
        if (in[t(t.mul(a, d), t.mul(a, q), q)] || in[t(t.mul(d, a), t.mul(q, a), q)]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

struct DomainPrimeCheck {
  bool completely_prime = false;
  bool quotient_is_domain = false;
  PrimalityCertificate certificate;
  DomainReport quotient_report;

  bool agree() const noexcept { return completely_prime == quotient_is_domain; }
};

/// Both sides of "P completely prime iff T/P is a domain", computed independently.
inline DomainPrimeCheck domain_iff_prime_check(FinitePreTruss const& t, Subset const& p) {
  DomainPrimeCheck r;
  r.certificate = is_completely_prime(t, p);
  r.completely_prime = r.certificate.completely_prime;
  r.quotient_report = domain_report(quotient(t, p).truss);
  r.quotient_is_domain = r.quotient_report.domain;
  return r;
}

/// For a homomorphism f: src -> dst and P' completely prime in im f,
/// asserts f^{-1}(P') is completely prime in src.
inline PropertyResult prime_preimage_check(FinitePreTruss const& src, FinitePreTruss const& dst,
                                           std::vector<elem> const& f, Subset const& target) {
  if (!is_pretruss_homomorphism(src, dst, f))
    throw precondition_error("prime_preimage_check: not a homomorphism");
  Subset const img = image(f, Subset::all(src.size()));
  if (!target.is_subset_of(img))
    throw precondition_error("prime_preimage_check: subset is not inside the image");
  auto sub = restrict_to(dst, img);
  std::vector<elem> local;
  for (elem x : target)
    local.push_back(static_cast<elem>(std::lower_bound(img.begin(), img.end(), x) - img.begin()));
  PropertyResult r;
  r.cases = 1;
  if (!is_completely_prime(sub, Subset(local)).completely_prime)
    throw precondition_error("prime_preimage_check: subset is not completely prime in the image");
  auto pre = preimage(f, target);
  if (!is_paragon(src, pre)) r.fail("preimage is not a paragon");
  else if (!is_completely_prime(src, pre).completely_prime) r.fail("preimage is not completely prime");
  return r;
}

/// For P proper and completely prime: P_p^a = P_p^a' for left absorbers a,a'
/// and likewise for right absorbers.
inline PropertyResult absorber_collapse_check(FinitePreTruss const& t, Subset const& p) {
  PropertyResult r;
  if (p.size() == t.size() || !is_completely_prime(t, p).completely_prime) return r;
  for (auto const* side : {&t.absorbers().left_absorbers, &t.absorbers().right_absorbers})
    for (elem q : p)
      for (elem a : *side)
        for (elem b : *side) {
          ++r.cases;
          if (translate(t.heap(), p, q, a) != translate(t.heap(), p, q, b))
            r.fail("absorbers " + t.label(a) + "," + t.label(b));
        }
  return r;
}

}  // namespace trusskit
