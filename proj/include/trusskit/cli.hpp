#pragma once

/**
 * @file cli.hpp
 * @brief The trusskit command line: check, paragons, quotient, localise.
 *
 * Every command prints human-readable text, a `---` line, then key=value
 * lines. The key=value block depends only on the input and the seed.
 * Exit codes: 0 pass, 1 verdict failure, 2 input error, 3 size guard.
 */

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trusskit/domain.hpp"
#include "trusskit/instances.hpp"
#include "trusskit/io.hpp"
#include "trusskit/ore.hpp"

namespace trusskit::cli {

enum ExitCode : int { pass = 0, verdict_failure = 1, input_error = 2, size_refused = 3 };

inline constexpr std::size_t paragon_size_limit = 12;

class Report {
 public:
  std::ostringstream human;

  void set(std::string const& key, std::string value) {
    for (auto& ch : value)
      if (ch == '\n' || ch == '\r') ch = ' ';
    machine_.emplace_back(key, std::move(value));
  }
  void set(std::string const& key, std::size_t value) { set(key, std::to_string(value)); }
  void set_flag(std::string const& key, bool value) { set(key, std::string(value ? "yes" : "no")); }

  std::string render(double elapsed_ms) const {
    std::ostringstream os;
    os << human.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "time: %.3f ms\n", elapsed_ms);
    os << buf << "---\n";
    for (auto const& [k, v] : machine_) os << k << '=' << v << '\n';
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> machine_;
};

/// "heap associativity" -> "heap_associativity".
inline std::string slug(std::string const& s) {
  std::string out;
  for (unsigned char ch : s) {
    if (std::isalnum(ch)) out += static_cast<char>(std::tolower(ch));
    else if (!out.empty() && out.back() != '_') out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

inline std::string witness_string(Violation const& v, Labels const& labels) {
  std::string s = v.identity + " at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) s += ",";
    s += v.witness[i] < labels.size() ? labels[v.witness[i]] : std::to_string(v.witness[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

inline int cmd_check(std::string const& path, Report& r) {
  auto const f = read_structure_file(path);
  auto const c = check_structure(f);
  r.human << "checking " << path << " as " << to_string(f.kind) << " (" << c.checked << ")\n";
  r.human << "elements: " << f.elements.size() << "\n";
  r.set("file", path);
  r.set("kind", std::string(to_string(f.kind)));
  r.set("axioms", c.checked);
  r.set("elements", f.elements.size());
  r.set("violations", c.report.total);
  for (std::size_t i = 0; i < c.report.violations.size(); ++i) {
    auto const w = witness_string(c.report.violations[i], f.elements);
    r.human << "  violation: " << w << "\n";
    r.set("violation." + std::to_string(i), w);
  }
  if (c.report.truncated()) r.human << "  ... " << c.report.total - c.report.violations.size() << " more\n";
  if (c.truss) {
    r.human << "classification: " << to_string(c.truss->kind()) << "\n";
    r.set("classification", std::string(to_string(c.truss->kind())));
  }
  r.human << "result: " << (c.report.ok() ? "pass" : "FAIL") << "\n";
  r.set("verdict", std::string(c.report.ok() ? "pass" : "fail"));
  return c.report.ok() ? pass : verdict_failure;
}

inline int cmd_paragons(std::string const& path, Report& r) {
  auto const t = load_pretruss(read_structure_file(path));
  r.set("file", path);
  r.set("elements", t.size());
  if (t.size() > paragon_size_limit) {
    r.human << "refusing: " << t.size() << " elements exceeds the limit of " << paragon_size_limit << "\n";
    r.set("verdict", std::string("refused"));
    r.set("limit", paragon_size_limit);
    return size_refused;
  }
  auto const ps = enumerate_paragons(t);
  r.set("kind", std::string(to_string(t.kind())));
  r.set("paragons", ps.size());
  r.human << ps.size() << " paragon(s) of " << path << " (" << to_string(t.kind()) << ")\n";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    auto const& p = ps[i].members;
    bool const ideal = is_ideal(t, p);
    bool const prime = is_completely_prime(t, p).completely_prime;
    bool const max_left = is_maximal_paragon(t, p, Side::left);
    bool const max_right = is_maximal_paragon(t, p, Side::right);
    std::size_t const classes = subheap_classes(t.heap(), p).size();
    r.human << "  " << class_label(p, t.labels()) << "  classes=" << classes << (ideal ? "  ideal" : "")
            << (prime ? "  completely-prime" : "") << (max_left ? "  maximal-left" : "")
            << (max_right ? "  maximal-right" : "") << "\n";
    std::string const key = "paragon." + std::to_string(i);
    r.set(key, join_labels(p, t.labels()));
    r.set(key + ".classes", classes);
    r.set_flag(key + ".ideal", ideal);
    r.set_flag(key + ".completely_prime", prime);
    r.set_flag(key + ".maximal_left", max_left);
    r.set_flag(key + ".maximal_right", max_right);
  }
  r.set("verdict", std::string("pass"));
  return pass;
}

/// Comma-separated labels; throws structure_error on unknown labels.
inline Subset parse_subset(std::string const& text, FinitePreTruss const& t) {
  std::vector<elem> items;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto const& labels = t.labels();
    auto it = std::find(labels.begin(), labels.end(), tok);
    if (it == labels.end()) throw structure_error("unknown element '" + tok + "' in subset");
    items.push_back(static_cast<elem>(it - labels.begin()));
  }
  if (items.empty()) throw structure_error("empty subset");
  return Subset(std::move(items));
}

/// Why s is not a paragon, or empty if it is one.
inline std::string paragon_failure(FinitePreTruss const& t, Subset const& s) {
  if (!is_subheap(t.heap(), s)) return "not a sub-heap";
  if (!is_normal_subheap(t.heap(), s)) return "not a normal sub-heap";
  if (!is_paragon(t, s)) return "not a paragon: some class is not closed under multiplication";
  return {};
}

inline int cmd_quotient(std::string const& path, std::string const& subset, std::string const& output, Report& r) {
  auto const t = load_pretruss(read_structure_file(path));
  auto const p = parse_subset(subset, t);
  r.set("file", path);
  r.set("subset", join_labels(p, t.labels()));
  if (auto why = paragon_failure(t, p); !why.empty()) throw precondition_error(why);
  auto const q = quotient(t, p);
  auto const& qt = q.truss;
  bool const near = qt.is_near();
  bool const ring_type = near && !qt.absorbers().left_absorbers.empty();
  bool const brace_type = near && multiplicative_group(qt).has_value();
  std::string const type = ring_type && brace_type ? "ring-type and brace-type"
                           : ring_type            ? "ring-type"
                           : brace_type           ? "brace-type"
                                                  : "neither";
  r.human << "quotient of " << path << " by " << class_label(p, t.labels()) << ": " << qt.size() << " classes\n";
  r.set("classes", qt.size());
  for (elem c = 0; c < qt.size(); ++c) {
    r.human << "  " << qt.label(c) << "\n";
    r.set("class." + std::to_string(c), qt.label(c));
  }
  r.human << "kind: " << to_string(qt.kind()) << "\ntype: " << type << "\n";
  r.set("kind", std::string(to_string(qt.kind())));
  r.set_flag("ring_type", ring_type);
  r.set_flag("brace_type", brace_type);
  r.set("type", type);
  bool agree = true;
  if (t.is_near() && t.unit()) {
    auto const crit = brace_type_quotient_criterion(t, p);
    agree = crit.agree();
    r.set_flag("ideal_scan_brace_type", crit.criterion);
    if (crit.offending_class) {
      r.human << "class " << class_label(*crit.offending_class, t.labels()) << " lies in the proper left ideal "
              << class_label(*crit.offending_ideal, t.labels()) << "\n";
      r.set("ideal_scan_class", class_label(*crit.offending_class, t.labels()));
      r.set("ideal_scan_ideal", class_label(*crit.offending_ideal, t.labels()));
    } else {
      r.human << "no class lies in a proper left ideal\n";
    }
    r.set_flag("ideal_scan_agrees", agree);
  } else {
    r.set("ideal_scan_brace_type", std::string("not applicable"));
  }
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw structure_error("cannot write '" + output + "'");
    out << write_structure(qt, "quotient by " + class_label(p, t.labels()));
    r.human << "wrote " << output << "\n";
    r.set("output", output);
  }
  r.set("verdict", std::string(agree ? "pass" : "fail"));
  return agree ? pass : verdict_failure;
}

struct LocaliseOptions {
  std::size_t samples = 500;
  std::size_t tuples = 100;
  std::uint64_t seed = default_seed;
};

namespace detail {

inline bool report_checks(Report& r, std::string const& prefix, std::vector<LawCheck> const& checks) {
  bool ok = true;
  for (auto const& c : checks) {
    ok = ok && c.ok();
    r.human << "  " << (c.ok() ? "ok  " : "FAIL") << " " << c.name << " (" << c.cases << " cases)";
    if (!c.ok()) r.human << " first failure: " << c.first_failure;
    r.human << "\n";
    r.set(prefix + slug(c.name), (c.ok() ? "pass " : "fail ") + std::to_string(c.cases - c.failures) + "/"
                                     + std::to_string(c.cases));
  }
  return ok;
}

template <EffectiveTruss T>
int localise_with(T const& base, typename T::value_type const& brace_at, LocaliseOptions const& opt, Report& r) {
  auto const cert = check_left_regular(base);
  r.set_flag("left_regular", cert.left_regular());
  if (!cert.left_regular()) {
    r.human << "refusing: " << base.name() << " is not left regular: " << cert.failure << "\n";
    r.set("reason", cert.failure);
    r.set("verdict", std::string("refused"));
    return verdict_failure;
  }
  r.human << base.name() << " is left regular: " << cert.proof << "\n";
  r.set("regularity", cert.proof);
  auto const q = Localisation<T>(base);
  LawSuiteOptions lo{opt.samples, opt.tuples, opt.seed};
  r.human << "laws of Q(T):\n";
  bool ok = report_checks(r, "law.", run_law_suite(q, lo));
  if (base.properties().near) {
    auto const b = brace_retract_of_fractions(q, brace_at);
    r.human << "retract at " << q.to_string(b.one()) << (b.near_field_case() ? " (near-field case)" : "") << ":\n";
    r.set("brace.at", q.to_string(b.one()));
    r.set_flag("brace.near_field_case", b.near_field_case());
    ok = report_checks(r, "brace.", b.verify(lo)) && ok;
  } else {
    r.human << "no brace retract: T is not a near-truss\n";
    r.set("brace", std::string("not applicable"));
  }
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < 3; ++i) {
    auto const f = q.sample(rng), g = q.sample(rng);
    std::string line = q.pair_string(f) + " * " + q.pair_string(g) + " = ";
    if (q.is_absorber(f)) {
      line += q.to_string(q.mul(f, g));
    } else {
      auto const w = q.witness(g.den, f.num);
      line += q.to_string(q.mul_with(f, g, w)) + " with witness r=" + base.to_string(w.r) + " s=" + base.to_string(w.s);
    }
    r.human << "  " << line << "\n";
    r.set("sample." + std::to_string(i), line);
  }
  r.set("verdict", std::string(ok ? "pass" : "fail"));
  return ok ? pass : verdict_failure;
}

}  // namespace detail

inline int cmd_localise(std::string const& instance, std::string const& path, LocaliseOptions const& opt,
                        Report& r) {
  r.set("source", instance.empty() ? path : instance);
  r.set("seed", std::to_string(opt.seed));
  r.set("samples", opt.samples);
  r.set("tuples", opt.tuples);
  if (!path.empty()) {
    auto const t = load_pretruss(read_structure_file(path));
    FiniteBackend base(t, path);
    auto const cert = base.regularity_certificate();
    if (cert.left_regular() && t.size() <= 5) {
      auto const s = finite_fractions(t);
      r.human << "Q(T) has " << s.truss.size() << " elements (" << to_string(s.truss.kind()) << ")\n";
      r.set("fractions", s.truss.size());
      r.set("fractions.kind", std::string(to_string(s.truss.kind())));
    }
    elem at = 0;
    while (at < t.size() && !t.in_abs_complement(at)) ++at;
    if (t.unit()) at = *t.unit();
    return detail::localise_with(base, at, opt, r);
  }
  if (instance == "odd-int") return detail::localise_with(OddIntOps{}, OddInt(1L), opt, r);
  if (instance == "odd-poly") return detail::localise_with(OddPolyOps{}, OddPoly{1}, opt, r);
  if (instance == "odd-gauss") return detail::localise_with(OddGaussOps{}, OddGauss(1, 0), opt, r);
  if (instance.rfind("odd-matrix:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(instance.substr(11));
    } catch (std::exception const&) {
      throw structure_error("bad matrix dimension in '" + instance + "'");
    }
    if (n < 1 || n > 8) throw structure_error("matrix dimension must be between 1 and 8");
    OddMatrixOps ops(n);
    int const code = detail::localise_with(ops, ops.unit(), opt, r);
    r.human << "fraction normal forms lie in T_" << n << "(Q)\n";
    r.set("normal_form_pattern", std::string("T_") + std::to_string(n) + "(Q) verified");
    return code;
  }
  throw structure_error("unknown instance '" + instance + "' (odd-int, odd-poly, odd-gauss, odd-matrix:N)");
}

// ---------------------------------------------------------------------------

/// Parses arguments, runs one command, writes the report to out.
inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"trusskit: heaps, trusses, paragons and Ore localisation"};
  app.require_subcommand(1);
  std::string file, subset, output, instance;
  LocaliseOptions lopt;
  auto* check = app.add_subcommand("check", "verify the axioms of the declared kind");
  check->add_option("file", file, "structure file")->required();
  auto* paragons = app.add_subcommand("paragons", "list all paragons with their flags");
  paragons->add_option("file", file, "structure file")->required();
  auto* quot = app.add_subcommand("quotient", "quotient by a paragon");
  quot->add_option("file", file, "structure file")->required();
  quot->add_option("--subset", subset, "comma-separated element labels")->required();
  quot->add_option("--output", output, "write the quotient structure here");
  auto* loc = app.add_subcommand("localise", "build the fractions Q(T) and verify their laws");
  auto* inst = loc->add_option("--instance", instance, "odd-int, odd-poly, odd-gauss or odd-matrix:N");
  auto* fopt = loc->add_option("--file", file, "finite structure file");
  inst->excludes(fopt);
  loc->add_option("--samples", lopt.samples, "sampled cases per law")->capture_default_str();
  loc->add_option("--tuples", lopt.tuples, "sampled 5-tuples for the heap laws")->capture_default_str();
  loc->add_option("--seed", lopt.seed, "random seed")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? pass : input_error;
  }
  if (loc->parsed() && instance.empty() && file.empty()) {
    err << "localise: give --instance or --file\n";
    return input_error;
  }
  Report r;
  r.set("command", app.get_subcommands().front()->get_name());
  auto const start = std::chrono::steady_clock::now();
  int code = pass;
  try {
    if (check->parsed()) code = cmd_check(file, r);
    else if (paragons->parsed()) code = cmd_paragons(file, r);
    else if (quot->parsed()) code = cmd_quotient(file, subset, output, r);
    else code = cmd_localise(instance, instance.empty() ? file : std::string(), lopt, r);
  } catch (size_guard_error const& e) {
    r.human << "refusing: " << e.what() << "\n";
    r.set("error", std::string(e.what()));
    code = size_refused;
  } catch (structure_error const& e) {
    r.human << "error: " << e.what() << "\n";
    r.set("error", std::string(e.what()));
    code = input_error;
  } catch (precondition_error const& e) {
    r.human << "error: " << e.what() << "\n";
    r.set("error", std::string(e.what()));
    code = input_error;
  } catch (axiom_error const& e) {
    r.human << "error: " << e.what() << "\n";
    r.set("error", std::string(e.what()));
    code = input_error;
  }
  r.set("exit", std::to_string(code));
  double const ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << r.render(ms);
  return code;
}

}  // namespace trusskit::cli
