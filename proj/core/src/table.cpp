#include "qorder/table.hpp"

#include <string>

namespace qorder {

Table::Table(std::size_t n, Element fill) : n_(n), cells_(n * n, fill) {}

Table Table::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) {
    throw ShapeError("table must have at least one row");
  }
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw ShapeError("table is not square: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n) {
        throw ShapeError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") = " + std::to_string(rows[i][j]) + " is out of range");
      }
      t(static_cast<Element>(i), static_cast<Element>(j)) = rows[i][j];
    }
  }
  return t;
}

std::vector<Element> Table::column(Element j) const {
  std::vector<Element> col(n_);
  for (std::size_t i = 0; i < n_; ++i) col[i] = cells_[i * n_ + j];
  return col;
}

std::vector<std::vector<Element>> Table::rows() const {
  std::vector<std::vector<Element>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(cells_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  cells_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

MixedRadix::MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
  if (radices_.empty()) throw ShapeError("mixed-radix encoding needs at least one radix");
  for (std::size_t r : radices_) {
    if (r == 0) throw ShapeError("mixed-radix radix must be positive");
    total_ *= r;
  }
}

Element MixedRadix::encode(std::span<const Element> digits) const {
  if (digits.size() != radices_.size()) throw ShapeError("digit count does not match radix count");
  std::size_t index = 0;
  for (std::size_t k = 0; k < radices_.size(); ++k) {
    if (digits[k] >= radices_[k]) throw ShapeError("digit out of range for its radix");
    index = index * radices_[k] + digits[k];
  }
  return static_cast<Element>(index);
}

std::vector<Element> MixedRadix::decode(Element index) const {
  if (index >= total_) throw ShapeError("mixed-radix index out of range");
  std::vector<Element> digits(radices_.size());
  std::size_t rest = index;
  for (std::size_t k = radices_.size(); k-- > 0;) {
    digits[k] = static_cast<Element>(rest % radices_[k]);
    rest /= radices_[k];
  }
  return digits;
}

}  // namespace qorder
