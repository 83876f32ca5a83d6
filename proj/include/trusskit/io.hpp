#pragma once

/**
 * @file io.hpp
 * @brief Reading and writing structure files.
 *
 *   kind ring
 *   elements 0 1 2 3
 *   group:
 *   0 1 2 3
 *   ...
 *   mul:
 *   ...
 *
 * Blocks are `group:` and `mul:` (n rows of n labels) and `ternary:`
 * (n^2 rows; row i*n+j holds [i,j,k] for k = 0..n-1). A line
 * `derive_heap_from_group` builds the heap from the group block. `#` starts
 * a comment. Tokens are whitespace separated.
 */

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "trusskit/pretruss.hpp"

namespace trusskit {

enum class StructureKind { heap, group, pretruss, ring, nearring, brace };

inline char const* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::heap: return "heap";
    case StructureKind::group: return "group";
    case StructureKind::pretruss: return "pretruss";
    case StructureKind::ring: return "ring";
    case StructureKind::nearring: return "nearring";
    case StructureKind::brace: return "brace";
  }
  return "?";
}

/// A malformed file; line and column are 1-based.
class parse_error : public structure_error {
 public:
  parse_error(std::size_t line, std::size_t column, std::string const& what)
      : structure_error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

struct StructureFile {
  StructureKind kind = StructureKind::pretruss;
  Labels elements;
  std::optional<Table2> group;
  std::optional<Table2> mul;
  std::optional<Table3> ternary;
  bool derive_heap_from_group = false;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string const& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t const start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

inline std::optional<StructureKind> kind_from_string(std::string const& s) {
  for (auto k : {StructureKind::heap, StructureKind::group, StructureKind::pretruss, StructureKind::ring,
                 StructureKind::nearring, StructureKind::brace})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

}  // namespace detail

/// Throws parse_error on malformed input; axioms are not checked here.
inline StructureFile parse_structure(std::string const& text) {
  auto lines = detail::tokenize(text);
  std::size_t pos = 0;
  std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  auto next = [&](char const* expecting) -> detail::Line const& {
    if (pos == lines.size()) throw parse_error(last_line + 1, 1, std::string("unexpected end of file, expected ") + expecting);
    return lines[pos++];
  };
  StructureFile f;
  auto const& kind_line = next("'kind'");
  if (kind_line.tokens[0].text != "kind")
    throw parse_error(kind_line.number, kind_line.tokens[0].column, "expected 'kind'");
  if (kind_line.tokens.size() != 2)
    throw parse_error(kind_line.number, kind_line.tokens[0].column, "expected 'kind <kind>'");
  auto kind = detail::kind_from_string(kind_line.tokens[1].text);
  if (!kind) throw parse_error(kind_line.number, kind_line.tokens[1].column, "unknown kind '" + kind_line.tokens[1].text + "'");
  f.kind = *kind;

  auto const& el = next("'elements'");
  if (el.tokens[0].text != "elements") throw parse_error(el.number, el.tokens[0].column, "expected 'elements'");
  if (el.tokens.size() < 2) throw parse_error(el.number, el.tokens[0].column, "no elements listed");
  std::unordered_map<std::string, elem> index;
  for (std::size_t i = 1; i < el.tokens.size(); ++i) {
    auto const& tok = el.tokens[i];
    if (tok.text.back() == ':') throw parse_error(el.number, tok.column, "element label may not end in ':'");
    if (!index.emplace(tok.text, static_cast<elem>(i - 1)).second)
      throw parse_error(el.number, tok.column, "duplicate element '" + tok.text + "'");
    f.elements.push_back(tok.text);
  }
  std::size_t const n = f.elements.size();

  auto read_rows = [&](detail::Line const& header, std::size_t rows) {
    std::vector<elem> data;
    data.reserve(rows * n);
    for (std::size_t r = 0; r < rows; ++r) {
      if (pos == lines.size() || lines[pos].tokens[0].text.back() == ':')
        throw parse_error(pos == lines.size() ? last_line + 1 : lines[pos].number, 1,
                          "block '" + header.tokens[0].text + "' has " + std::to_string(r) + " rows, expected "
                              + std::to_string(rows));
      auto const& row = lines[pos++];
      if (row.tokens.size() != n) {
        std::size_t const col = row.tokens.size() > n ? row.tokens[n].column
                                                      : row.tokens.back().column + row.tokens.back().text.size();
        throw parse_error(row.number, col,
                          "row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(n));
      }
      for (auto const& tok : row.tokens) {
        auto it = index.find(tok.text);
        if (it == index.end()) throw parse_error(row.number, tok.column, "unknown element '" + tok.text + "'");
        data.push_back(it->second);
      }
    }
    return data;
  };

  while (pos < lines.size()) {
    auto const& line = lines[pos++];
    auto const& head = line.tokens[0];
    if (line.tokens.size() != 1) throw parse_error(line.number, line.tokens[1].column, "unexpected token after '" + head.text + "'");
    if (head.text == "derive_heap_from_group") {
      f.derive_heap_from_group = true;
    } else if (head.text == "mul:" || head.text == "group:") {
      auto& slot = head.text == "mul:" ? f.mul : f.group;
      if (slot) throw parse_error(line.number, head.column, "duplicate block '" + head.text + "'");
      slot = Table2(n, read_rows(line, n));
    } else if (head.text == "ternary:") {
      if (f.ternary) throw parse_error(line.number, head.column, "duplicate block 'ternary:'");
      f.ternary = Table3(n, read_rows(line, n * n));
    } else {
      throw parse_error(line.number, head.column, "unknown block '" + head.text + "'");
    }
  }

  auto require = [&](bool ok, char const* what) {
    if (!ok) throw parse_error(kind_line.number, kind_line.tokens[1].column, std::string("kind '") + to_string(f.kind) + "' " + what);
  };
  bool const has_heap = f.ternary || (f.group && f.derive_heap_from_group);
  require(!(f.ternary && f.derive_heap_from_group), "cannot both give 'ternary:' and derive it");
  switch (f.kind) {
    case StructureKind::heap: require(has_heap && !f.mul, "needs a heap ('ternary:' or a derived 'group:') and no 'mul:'"); break;
    case StructureKind::group: require(f.group && !f.mul && !f.ternary, "needs exactly a 'group:' block"); break;
    case StructureKind::pretruss: require(has_heap && f.mul.has_value(), "needs a heap and a 'mul:' block"); break;
    case StructureKind::ring:
    case StructureKind::nearring:
    case StructureKind::brace: require(f.group && f.mul && !f.ternary, "needs 'group:' and 'mul:' blocks"); break;
  }
  return f;
}

/// Throws structure_error when the file cannot be read.
inline StructureFile read_structure_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw structure_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

struct StructureCheck {
  AxiomReport report;
  std::string checked;                  ///< which axiom system was applied
  std::optional<FinitePreTruss> truss;  ///< when the file describes a valid pre-truss
};

/// Runs the axiom checker matching the declared kind.
inline StructureCheck check_structure(StructureFile const& f, std::size_t max_recorded = 16) {
  StructureCheck c;
  auto const& labels = f.elements;
  auto group_of = [&]() -> std::optional<FiniteGroup> {
    auto rep = check_group_axioms(*f.group, max_recorded);
    c.report.merge(rep);
    if (!rep.ok()) return std::nullopt;
    return FiniteGroup::from_table(labels, *f.group);
  };
  auto heap_of = [&]() -> std::optional<FiniteHeap> {
    if (f.derive_heap_from_group) {
      auto g = group_of();
      if (!g) return std::nullopt;
      return heap_from_group(*g);
    }
    auto rep = check_heap_axioms(*f.ternary, max_recorded);
    c.report.merge(rep);
    if (!rep.ok()) return std::nullopt;
    return FiniteHeap::from_table(labels, *f.ternary);
  };
  switch (f.kind) {
    case StructureKind::heap:
      c.checked = "heap axioms";
      heap_of();
      break;
    case StructureKind::group:
      c.checked = "group axioms";
      group_of();
      break;
    case StructureKind::pretruss: {
      c.checked = "heap axioms and associativity";
      auto h = heap_of();
      auto rep = check_semigroup_axioms(*f.mul, max_recorded);
      c.report.merge(rep);
      if (h && rep.ok()) c.truss = FinitePreTruss(std::move(*h), *f.mul);
      break;
    }
    case StructureKind::ring:
    case StructureKind::nearring:
    case StructureKind::brace: {
      c.checked = f.kind == StructureKind::ring       ? "ring axioms"
                  : f.kind == StructureKind::nearring ? "near-ring axioms"
                                                      : "skew brace axioms";
      auto g = group_of();
      if (!g) break;
      auto rep = f.kind == StructureKind::ring       ? check_ring_axioms(*g, *f.mul, max_recorded)
                 : f.kind == StructureKind::nearring ? check_near_ring_axioms(*g, *f.mul, max_recorded)
                                                     : check_skew_brace_axioms(*g, *f.mul, max_recorded);
      c.report.merge(rep);
      if (rep.ok()) c.truss = FinitePreTruss(heap_from_group(*g), *f.mul);
      break;
    }
  }
  return c;
}

/// Throws precondition_error for heap and group files, axiom_error on failure.
inline FinitePreTruss load_pretruss(StructureFile const& f) {
  if (f.kind == StructureKind::heap || f.kind == StructureKind::group)
    throw precondition_error(std::string("a ") + to_string(f.kind) + " file does not describe a pre-truss");
  auto c = check_structure(f, 1);
  if (!c.truss) throw axiom_error("not a " + std::string(to_string(f.kind)) + ": " + c.report.summary(f.elements));
  return std::move(*c.truss);
}

/// A `kind pretruss` file with explicit ternary and mul blocks.
inline std::string write_structure(FinitePreTruss const& t, std::string const& comment = {}) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "kind pretruss\nelements";
  for (auto const& l : t.labels()) os << ' ' << l;
  os << "\nternary:\n";
  std::size_t const n = t.size();
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) {
      for (elem c = 0; c < n; ++c) os << (c ? " " : "") << t.label(t(a, b, c));
      os << '\n';
    }
  os << "mul:\n";
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) os << (b ? " " : "") << t.label(t.mul(a, b));
    os << '\n';
  }
  return os.str();
}

}  // namespace trusskit
