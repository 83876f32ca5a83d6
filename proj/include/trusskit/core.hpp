#pragma once

/**
 * @file core.hpp
 * @brief Index-based operation tables, subsets, partitions and axiom reports.
 *
 * Every finite structure in trusskit lives on the carrier {0, ..., n-1};
 * element labels are opaque strings carried alongside for I/O only.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "trusskit/error.hpp"

namespace trusskit {

using elem = std::uint32_t;
using Labels = std::vector<std::string>;

/// Labels "0", "1", ..., "n-1".
inline Labels numeric_labels(std::size_t n) {
  Labels out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Dense binary operation table on {0..n-1}.
class Table2 {
 public:
  Table2() = default;
  explicit Table2(std::size_t n) : n_(n), data_(n * n, 0) {}
  Table2(std::size_t n, std::vector<elem> data) : n_(n), data_(std::move(data)) {
    validate();
  }

  template <typename F>
  static Table2 from_function(std::size_t n, F&& f) {
    Table2 t(n);
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b) t.set(a, b, static_cast<elem>(f(a, b)));
    t.validate();
    return t;
  }

  std::size_t size() const noexcept { return n_; }
  elem operator()(elem a, elem b) const noexcept { return data_[a * n_ + b]; }
  void set(elem a, elem b, elem v) noexcept { data_[a * n_ + b] = v; }
  std::vector<elem> const& data() const noexcept { return data_; }

  /// Throws structure_error unless the table is total with in-range entries.
  void validate() const {
    if (data_.size() != n_ * n_)
      throw structure_error("binary table has " + std::to_string(data_.size())
                            + " entries, expected " + std::to_string(n_ * n_));
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] >= n_)
        throw structure_error("binary table entry " + std::to_string(i)
                              + " is out of range");
  }

  bool operator==(Table2 const&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<elem> data_;
};

/// Dense ternary operation table on {0..n-1}; cell (i,j,k) at (i*n+j)*n+k.
class Table3 {
 public:
  Table3() = default;
  explicit Table3(std::size_t n) : n_(n), data_(n * n * n, 0) {}
  Table3(std::size_t n, std::vector<elem> data) : n_(n), data_(std::move(data)) {
    validate();
  }

  template <typename F>
  static Table3 from_function(std::size_t n, F&& f) {
    Table3 t(n);
    for (elem a = 0; a < n; ++a)
      for (elem b = 0; b < n; ++b)
        for (elem c = 0; c < n; ++c) t.set(a, b, c, static_cast<elem>(f(a, b, c)));
    t.validate();
    return t;
  }

  std::size_t size() const noexcept { return n_; }
  elem operator()(elem a, elem b, elem c) const noexcept {
    return data_[(a * n_ + b) * n_ + c];
  }
  void set(elem a, elem b, elem c, elem v) noexcept { data_[(a * n_ + b) * n_ + c] = v; }
  std::vector<elem> const& data() const noexcept { return data_; }

  void validate() const {
    if (data_.size() != n_ * n_ * n_)
      throw structure_error("ternary table has " + std::to_string(data_.size())
                            + " entries, expected " + std::to_string(n_ * n_ * n_));
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] >= n_)
        throw structure_error("ternary table entry " + std::to_string(i)
                              + " is out of range");
  }

  bool operator==(Table3 const&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<elem> data_;
};

/// A set of carrier indices, kept sorted and duplicate-free.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::vector<elem> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  Subset(std::initializer_list<elem> items) : Subset(std::vector<elem>(items)) {}

  static Subset all(std::size_t n) {
    std::vector<elem> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<elem>(i);
    return Subset(std::move(v));
  }

  static Subset from_mask(std::vector<char> const& mask) {
    std::vector<elem> v;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) v.push_back(static_cast<elem>(i));
    return Subset(std::move(v));
  }

  bool contains(elem x) const noexcept {
    return std::binary_search(items_.begin(), items_.end(), x);
  }
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  elem front() const { return items_.front(); }
  elem operator[](std::size_t i) const { return items_[i]; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  std::vector<elem> const& items() const noexcept { return items_; }

  bool is_subset_of(Subset const& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(),
                         items_.end());
  }

  /// Membership mask of length n, for hot loops.
  std::vector<char> mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (elem x : items_) m[x] = 1;
    return m;
  }

  bool operator==(Subset const&) const = default;
  /// Shorter sets first, then lexicographic; used for deterministic output.
  std::strong_ordering operator<=>(Subset const& o) const {
    if (auto c = items_.size() <=> o.items_.size(); c != 0) return c;
    return items_ <=> o.items_;
  }

 private:
  std::vector<elem> items_;
};

/// Partition of {0..n-1}; classes ordered by their least element.
struct Partition {
  std::vector<Subset> classes;
  std::vector<elem> class_of;

  /// Builds a partition from arbitrary class labels, renumbering canonically.
  static Partition from_labels(std::vector<elem> const& label) {
    Partition p;
    p.class_of.assign(label.size(), 0);
    std::vector<elem> renumber;
    std::vector<std::vector<elem>> members;
    std::vector<std::size_t> seen_label;
    std::vector<elem> map_label;
    for (std::size_t i = 0; i < label.size(); ++i) {
      auto it = std::find(seen_label.begin(), seen_label.end(), label[i]);
      elem cls;
      if (it == seen_label.end()) {
        cls = static_cast<elem>(members.size());
        seen_label.push_back(label[i]);
        members.emplace_back();
      } else {
        cls = static_cast<elem>(it - seen_label.begin());
      }
      members[cls].push_back(static_cast<elem>(i));
      p.class_of[i] = cls;
    }
    for (auto& m : members) p.classes.emplace_back(std::move(m));
    return p;
  }

  std::size_t size() const noexcept { return classes.size(); }
  bool operator==(Partition const&) const = default;
};

/// One cell of an operation table, for pinpointing the source of a violation.
struct Cell {
  std::vector<elem> args;
  bool operator==(Cell const&) const = default;
};

/// A violated identity with the witness tuple and every table cell it read.
struct Violation {
  std::string identity;
  std::vector<elem> witness;
  std::vector<Cell> cells;

  bool reads(Cell const& c) const {
    return std::find(cells.begin(), cells.end(), c) != cells.end();
  }
};

/// Result of an exhaustive axiom scan. Empty report means every axiom holds.
struct AxiomReport {
  std::vector<Violation> violations;
  std::size_t total = 0;  ///< violations found, including unrecorded ones
  std::size_t max_recorded = std::numeric_limits<std::size_t>::max();

  bool ok() const noexcept { return total == 0; }
  bool truncated() const noexcept { return total > violations.size(); }

  void add(Violation v) {
    ++total;
    if (violations.size() < max_recorded) violations.push_back(std::move(v));
  }
  void merge(AxiomReport const& other) {
    for (auto const& v : other.violations) add(v);
    total += other.total - other.violations.size();
  }

  std::string summary(Labels const& labels = {}) const {
    if (ok()) return "ok";
    auto const& v = violations.front();
    std::ostringstream os;
    os << total << " violation(s); first: " << v.identity << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      if (v.witness[i] < labels.size()) os << labels[v.witness[i]];
      else os << v.witness[i];
    }
    os << ")";
    return os.str();
  }
};

/// Outcome of a property scan that should never find a counterexample.
struct PropertyResult {
  bool holds = true;
  std::size_t cases = 0;
  std::vector<std::string> counterexamples;

  void fail(std::string what) {
    holds = false;
    if (counterexamples.size() < 16) counterexamples.push_back(std::move(what));
  }
};

/// A bijection of {0..n-1}, image[i] is the image of i.
using Bijection = std::vector<elem>;

inline std::string join_labels(Subset const& s, Labels const& labels,
                               char const* sep = ",") {
  std::string out;
  bool first = true;
  for (elem x : s) {
    if (!first) out += sep;
    first = false;
    out += x < labels.size() ? labels[x] : std::to_string(x);
  }
  return out;
}

}  // namespace trusskit
