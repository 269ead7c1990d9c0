#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "topochrom/graph.hpp"

namespace topochrom::gf2 {

// Dense matrix over GF(2), one bitset per row.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows, Bitset(cols)), cols_(cols) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  void set(std::size_t r, std::size_t c, bool value = true) { rows_.at(r).set(c, value); }
  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }

  // Row echelon elimination on a copy.
  std::size_t rank() const;

 private:
  std::vector<Bitset> rows_;
  std::size_t cols_;
};

// A sparse column: strictly increasing row indices of its nonzero entries.
using SparseColumn = std::vector<std::uint32_t>;

// Rank by left-to-right column reduction: each column is XOR-reduced against
// earlier columns sharing its lowest (largest-index) nonzero entry.
std::size_t sparse_column_rank(std::vector<SparseColumn> columns);

}  // namespace topochrom::gf2
