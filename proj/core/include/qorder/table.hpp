#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qorder/error.hpp"

namespace qorder {

/// Square n×n table of element indices stored row-major; entry (i, j) is
/// the product with i on the left and j on the right.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Element fill = 0);

  /// Builds a table from nested rows. Throws ShapeError unless the rows
  /// form a square with every entry in {0..n-1}.
  static Table from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t size() const noexcept { return n_; }

  Element operator()(Element i, Element j) const noexcept { return cells_[i * n_ + j]; }
  Element& operator()(Element i, Element j) noexcept { return cells_[i * n_ + j]; }

  std::span<const Element> row(Element i) const noexcept {
    return {cells_.data() + i * n_, n_};
  }
  std::vector<Element> column(Element j) const;
  std::span<const Element> cells() const noexcept { return cells_; }

  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const Table&, const Table&) = default;
  friend auto operator<=>(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

/// Big-endian mixed-radix encoding shared by direct products of groups and
/// products of quandles: digits (d0, d1, ..., dk) with radices (r0, ..., rk)
/// map to ((d0·r1 + d1)·r2 + d2)... so a pair (a, b) maps to a·r1 + b.
class MixedRadix {
 public:
  explicit MixedRadix(std::vector<std::size_t> radices);

  std::size_t total() const noexcept { return total_; }
  const std::vector<std::size_t>& radices() const noexcept { return radices_; }

  Element encode(std::span<const Element> digits) const;
  std::vector<Element> decode(Element index) const;

 private:
  std::vector<std::size_t> radices_;
  std::size_t total_ = 1;
};

}  // namespace qorder
