#include "fptlab/linalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace fptlab {

namespace {

// a - c * b, both sorted by column; the leading entries cancel.
SparseRow axpy(const SparseRow& a, std::uint32_t c, const SparseRow& b, Prime p) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  const std::uint32_t negc = fp::neg(c, p);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, fp::mul(b[j].second, negc, p));
      ++j;
    } else {
      std::uint32_t s = fp::add(a[i].second, fp::mul(b[j].second, negc, p), p);
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

constexpr std::uint64_t kPackedColumnLimit = 4096;

}  // namespace

std::size_t rank_sparse(std::vector<SparseRow> rows, Prime p) {
  std::unordered_map<std::uint64_t, SparseRow> pivots;
  for (auto& row : rows) {
    SparseRow r = std::move(row);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        std::uint32_t inv = fp::inv(r.front().second, p);
        for (auto& e : r) e.second = fp::mul(e.second, inv, p);
        const std::uint64_t lead = r.front().first;
        pivots.emplace(lead, std::move(r));
        break;
      }
      r = axpy(r, r.front().second, it->second, p);
    }
  }
  return pivots.size();
}

std::size_t rank_gf2_packed(const std::vector<SparseRow>& rows, std::uint64_t num_cols) {
  const std::size_t words = static_cast<std::size_t>((num_cols + 63) / 64);
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::uint64_t> bits(words, 0);
    bool any = false;
    for (const auto& [col, c] : row) {
      if (c & 1U) {
        bits[col / 64] ^= std::uint64_t{1} << (col % 64);
        any = true;
      }
    }
    if (any) m.push_back(std::move(bits));
  }
  std::size_t rank = 0;
  for (std::size_t w = 0; w < words && rank < m.size(); ++w) {
    for (unsigned bit = 0; bit < 64 && rank < m.size(); ++bit) {
      const std::uint64_t mask = std::uint64_t{1} << bit;
      std::size_t pivot = rank;
      while (pivot < m.size() && !(m[pivot][w] & mask)) ++pivot;
      if (pivot == m.size()) continue;
      std::swap(m[rank], m[pivot]);
      for (std::size_t r = rank + 1; r < m.size(); ++r) {
        if (m[r][w] & mask) {
          for (std::size_t k = w; k < words; ++k) m[r][k] ^= m[rank][k];
        }
      }
      ++rank;
    }
  }
  return rank;
}

std::size_t rank_mod_p(std::vector<SparseRow> rows, std::uint64_t num_cols, Prime p) {
  if (p == 2 && num_cols <= kPackedColumnLimit) return rank_gf2_packed(rows, num_cols);
  return rank_sparse(std::move(rows), p);
}

}  // namespace fptlab
