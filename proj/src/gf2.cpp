#include "topochrom/gf2.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace topochrom::gf2 {

std::size_t DenseMatrix::rank() const {
  std::vector<Bitset> m = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !m[pivot].test(col)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r)
      if (m[r].test(col)) m[r] ^= m[rank];
    ++rank;
  }
  return rank;
}

std::size_t sparse_column_rank(std::vector<SparseColumn> columns) {
  // lowest row index -> column owning it as pivot
  std::unordered_map<std::uint32_t, std::size_t> owner;
  owner.reserve(columns.size());
  SparseColumn scratch;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseColumn& col = columns[j];
    while (!col.empty()) {
      auto it = owner.find(col.back());
      if (it == owner.end()) break;
      const SparseColumn& other = columns[it->second];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner.emplace(col.back(), j);
      ++rank;
    }
  }
  return rank;
}

}  // namespace topochrom::gf2
