#ifndef FPTLAB_LINALG_HPP
#define FPTLAB_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "fptlab/primefield.hpp"

namespace fptlab {

// (column, nonzero coefficient) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::uint64_t, std::uint32_t>>;

// Rank over F_p by incremental sparse echelon reduction.
std::size_t rank_sparse(std::vector<SparseRow> rows, Prime p);

// Rank over F_2 with rows packed 64 columns per word.
std::size_t rank_gf2_packed(const std::vector<SparseRow>& rows, std::uint64_t num_cols);

// Dispatches to the packed kernel for p = 2 when the dense matrix is small
// enough, otherwise to the sparse kernel.
std::size_t rank_mod_p(std::vector<SparseRow> rows, std::uint64_t num_cols, Prime p);

}  // namespace fptlab

#endif  // FPTLAB_LINALG_HPP
