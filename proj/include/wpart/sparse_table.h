#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "wpart/types.h"

namespace wpart {

// Static range-maximum structure: O(n log n) build, O(1) query on [first, last].
template <typename T>
class SparseTable {
 public:
  SparseTable() = default;
  explicit SparseTable(std::vector<T> values) {
    const std::size_t n = values.size();
    if (n == 0) return;
    const int levels = std::bit_width(n);
    table_.resize(static_cast<std::size_t>(levels));
    table_[0] = std::move(values);
    for (int l = 1; l < levels; ++l) {
      const std::size_t half = std::size_t{1} << (l - 1);
      const std::size_t len = n - (std::size_t{1} << l) + 1;
      auto& row = table_[l];
      const auto& prev = table_[l - 1];
      row.resize(len);
      for (std::size_t i = 0; i < len; ++i) row[i] = std::max(prev[i], prev[i + half]);
    }
  }

  std::size_t size() const { return table_.empty() ? 0 : table_[0].size(); }
  const T& operator[](std::size_t i) const { return table_[0][i]; }

  // Inclusive range.
  T max(std::size_t first, std::size_t last) const {
    if (first > last || last >= size()) throw Error("sparse table: bad range");
    const int level = std::bit_width(last - first + 1) - 1;
    return std::max(table_[level][first], table_[level][last + 1 - (std::size_t{1} << level)]);
  }

 private:
  std::vector<std::vector<T>> table_;
};

}  // namespace wpart
