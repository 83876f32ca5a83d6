// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "cli_cases.hpp"
#include "oracles.hpp"
#include "trusskit/trusskit.hpp"

using namespace trusskit;
namespace cat = trusskit::catalogue;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome heap_axioms() {
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  std::size_t groups_checked = 0, mutations = 0;
  for (auto const& [name, g] : groups::all_up_to_order_8()) {
    o.require(check_heap_axioms(heap_from_group(g).table()).ok(), "heap of " + name + " fails the axioms");
    ++groups_checked;
  }
  auto const base = heap_from_group(groups::cyclic(3)).table();
  for (std::size_t i = 0; i < base.data().size(); ++i)
    for (elem v = 0; v < 3; ++v) {
      if (v == base.data()[i]) continue;
      auto data = base.data();
      data[i] = v;
      ++mutations;
      o.require(!check_heap_axioms(Table3(3, data)).ok(), "mutation of cell " + std::to_string(i) + " passes");
    }
  double const t = seconds_since(start);
  o.require(t < 10, "took " + fmt_seconds(t));
  if (o.ok)
    o.detail = std::to_string(groups_checked) + " groups, " + std::to_string(mutations) + " mutations rejected, "
               + fmt_seconds(t);
  return o;
}

Outcome translation_classes() {
  Outcome o;
  std::size_t subheaps = 0;
  for (auto const& [name, g] : groups::all_up_to_order_8()) {
    auto const h = heap_from_group(g);
    std::size_t const n = h.size();
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b) {
        auto const t = translation(h, a, b);
        o.require(is_heap_homomorphism(h, h, t) && Subset(t).size() == n,
                  name + ": translation is not an isomorphism");
      }
    for (auto const& s : all_subheaps(h)) {
      ++subheaps;
      auto const part = subheap_classes(h, s);
      o.require(part == subheap_classes_by_translation(h, s), name + ": classes differ from translates");
      for (auto const& c : part.classes) o.require(c.size() == s.size(), name + ": unequal class sizes");
      for (elem e : s)
        for (elem a = 0; a < n; ++a)
          o.require(translate(h, s, e, a) == part.classes[part.class_of[a]], name + ": S_e^a is not the class of a");
      for (auto const& c : part.classes) o.require(subheap_classes(h, c) == part, name + ": ~_S differs from ~_class");
    }
  }
  if (o.ok) o.detail = std::to_string(subheaps) + " sub-heaps of " + std::to_string(groups::all_up_to_order_8().size()) + " heaps";
  return o;
}

Outcome paragons_are_congruences() {
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, FinitePreTruss>> const cases{
      {"T(Z/4)", cat::ring_mod(4)},
      {"T(Z/6)", cat::ring_mod(6)},
      {"brace Z/4", cat::trivial_brace_mod(4)},
      {"brace S3", cat::trivial_brace(groups::symmetric3())}};
  std::size_t total = 0;
  for (auto const& [name, t] : cases) {
    std::set<Subset> paragons, classes;
    for (auto const& m : enumerate_paragons(t)) paragons.insert(m.members);
    for (auto const& c : classes_of(enumerate_congruences_bruteforce(t))) classes.insert(c);
    o.require(paragons == classes, name + ": paragons differ from congruence classes");
    total += paragons.size();
  }
  double const t = seconds_since(start);
  o.require(t < 60, "took " + fmt_seconds(t));
  if (o.ok) o.detail = std::to_string(total) + " paragons matched, " + fmt_seconds(t);
  return o;
}

std::vector<std::size_t> as_size_t(std::vector<unsigned> const& v) { return {v.begin(), v.end()}; }

Outcome odd_quotients() {
  Outcome o;
  for (unsigned n = 1; n <= 6; ++n) {
    auto const model = oddint_quotient_model(n);
    std::string const tag = "n=" + std::to_string(n);
    o.require(model.truss.size() == (std::size_t{1} << n), tag + ": wrong class count");
    auto const mg = multiplicative_group(model.truss);
    o.require(mg.has_value(), tag + ": no multiplicative group");
    if (!mg) continue;
    unsigned const modulus = 2u << n;
    if (n <= 4) {
      o.require(find_group_isomorphism(*mg, groups::units_mod(modulus)).has_value(), tag + ": no isomorphism found");
    } else {
      o.require(order_profile(*mg) == as_size_t(oracle::unit_group_orders(modulus)), tag + ": order profiles differ");
    }
  }
  if (o.ok) o.detail = "2^n classes for n=1..6; isomorphic by search to n=4, by element orders for n=5,6";
  return o;
}

Outcome domain_iff_prime() {
  Outcome o;
  std::size_t checked = 0;
  for (auto const& [name, t] : cat::small())
    for (auto const& m : enumerate_paragons(t)) {
      ++checked;
      o.require(domain_iff_prime_check(t, m.members).agree(), name + ": prime and domain verdicts disagree");
    }
  if (o.ok) o.detail = std::to_string(checked) + " paragons";
  return o;
}

oracle::IntMatrix to_oracle(IntMatrix const& m) {
  oracle::IntMatrix out(m.dim(), std::vector<mpz_class>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

Outcome matrix_identities() {
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  Rng rng(default_seed);
  for (std::size_t n = 1; n <= 4; ++n) {
    OddMatrixOps ops(n);
    std::string const tag = "n=" + std::to_string(n);
    for (int i = 0; i < 1000; ++i) {
      auto const a = ops.sample(rng), b = ops.sample(rng);
      mpz_class const det = oracle::laplace_det(to_oracle(b.matrix()));
      o.require(mpz_odd_p(det.get_mpz_t()) != 0, tag + ": even determinant");
      // matrix_cofactor throws when the cofactors leave the pattern
      auto const cof = matrix_cofactor(b);
      o.require(in_odd_pattern(cof.matrix()), tag + ": cofactor outside the pattern");
      auto lhs = to_oracle(a.matrix());
      for (auto& row : lhs)
        for (auto& v : row) v *= det;
      auto const rhs = oracle::multiply(oracle::multiply(to_oracle(a.matrix()), to_oracle(cof.matrix().transpose())),
                                        to_oracle(b.matrix()));
      o.require(lhs == rhs, tag + ": det(b) a differs from (a cof(b)^T) b");
    }
  }
  double const t = seconds_since(start);
  o.require(t < 30, "took " + fmt_seconds(t));
  if (o.ok) o.detail = "4000 samples, " + fmt_seconds(t);
  return o;
}

void require_checks(Outcome& o, std::string const& tag, std::vector<LawCheck> const& checks) {
  for (auto const& c : checks)
    o.require(c.ok() && c.cases > 0, tag + ": " + c.name + " fails at " + c.first_failure);
}

Outcome localisation_laws() {
  Outcome o;
  LawSuiteOptions opt;
  opt.samples = 500;
  opt.tuple_samples = 100;
  require_checks(o, "odd-int", run_law_suite(localise(OddIntOps{}), opt));
  require_checks(o, "odd-poly", run_law_suite(localise(OddPolyOps{}), opt));
  require_checks(o, "odd-gauss", run_law_suite(localise(OddGaussOps{}), opt));
  for (std::size_t n = 1; n <= 3; ++n)
    require_checks(o, "odd-matrix:" + std::to_string(n), run_law_suite(localise(OddMatrixOps(n)), opt));
  if (o.ok) o.detail = "6 instances, 500 samples and 100 tuples each";
  return o;
}

Outcome brace_of_fractions() {
  Outcome o;
  LawSuiteOptions opt;
  opt.samples = 500;
  auto const qi = localise(OddIntOps{});
  require_checks(o, "odd-int", brace_retract_of_fractions(qi, OddInt(1L)).verify(opt));
  OddMatrixOps const ops(2);
  auto const qm = localise(ops);
  require_checks(o, "odd-matrix:2", brace_retract_of_fractions(qm, ops.unit()).verify(opt));
  if (o.ok) o.detail = "500 triples each on odd-int and odd-matrix:2";
  return o;
}

Outcome evaluation_at_i() {
  Outcome o;
  auto const par = paragon_of_odd_polys(OddPoly{0, 1}, OddPoly{1, 1, 1});
  OddPolyOps const ops;
  Rng rng(default_seed);
  std::size_t related = 0;
  for (int i = 0; i < 500; ++i) {
    auto const p = ops.sample(rng);
    auto const q = i % 2 ? ops.sample(rng) : OddPoly(p.poly() + IntPoly{0, 2} * par.modulus() * ops.sample(rng).poly());
    auto const [pr, pi] = oracle::eval_at_i(p.poly().coeffs());
    auto const [qr, qi] = oracle::eval_at_i(q.poly().coeffs());
    bool const same_value = pr == qr && pi == qi;
    bool const same_class = par.related(p, q);
    related += same_class;
    o.require(same_class == same_value, "class equality and p(i) = q(i) disagree at " + p.to_string() + ", " + q.to_string());
    o.require(same_value == (gauss_evaluate(p) == gauss_evaluate(q)), "gauss_evaluate disagrees with Horner");
  }
  if (o.ok) o.detail = "500 pairs, " + std::to_string(related) + " in one class";
  return o;
}

Outcome cli_goldens() {
  Outcome o;
  for (auto const& c : cli_cases::all()) {
    auto const first = cli_cases::run(c);
    auto const second = cli_cases::run(c);
    std::string expected;
    o.require(cli_cases::read_golden(c, expected), c.golden + ": golden missing");
    o.require(first.exit_code == c.exit_code, c.golden + ": exit " + std::to_string(first.exit_code));
    o.require(first.machine == expected, c.golden + ": differs from golden");
    o.require(first.machine == second.machine, c.golden + ": not byte-stable");
  }
  if (o.ok) o.detail = std::to_string(cli_cases::all().size()) + " goldens, two runs each";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"AC1 heap axioms and mutations", heap_axioms},
      {"AC2 translations and sub-heap classes", translation_classes},
      {"AC3 paragons are congruence classes", paragons_are_congruences},
      {"AC4 odd integers modulo 2^(n+1)", odd_quotients},
      {"AC5 domain iff completely prime", domain_iff_prime},
      {"AC6 odd matrix determinants and witnesses", matrix_identities},
      {"AC7 localisation laws", localisation_laws},
      {"AC8 brace of fractions", brace_of_fractions},
      {"AC9 odd polynomials modulo x^2+1", evaluation_at_i},
      {"AC10 command line goldens", cli_goldens},
  };
  bool all_ok = true;
  for (auto const& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all_ok = all_ok && o.ok;
    std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  return all_ok ? 0 : 1;
}
