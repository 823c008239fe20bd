#include "singular/homology.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace singular {

namespace {
constexpr std::size_t kWord = 64;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, std::vector<std::uint64_t>((cols + kWord - 1) / kWord, 0)) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (data_[r][c / kWord] >> (c % kWord)) & 1u;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  std::uint64_t mask = std::uint64_t{1} << (c % kWord);
  if (value)
    data_[r][c / kWord] |= mask;
  else
    data_[r][c / kWord] &= ~mask;
}

void BitMatrix::flip(std::size_t r, std::size_t c) {
  data_[r][c / kWord] ^= std::uint64_t{1} << (c % kWord);
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  BitMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!get(i, k)) continue;
      auto& dst = out.data_[i];
      const auto& src = rhs.data_[k];
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : data_)
    for (std::uint64_t w : r)
      if (w != 0) return false;
  return true;
}

std::size_t z2_rank(BitMatrix m) {
  std::size_t rank = 0;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));

  for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
    const std::size_t word = col / kWord;
    const std::uint64_t mask = std::uint64_t{1} << (col % kWord);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][word] & mask)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (!(rows[r][word] & mask)) continue;
      for (std::size_t w = word; w < rows[r].size(); ++w) rows[r][w] ^= rows[rank][w];
    }
    ++rank;
  }
  return rank;
}

ChainComplexZ2 boundary_matrices(const CellComplex& c) {
  ChainComplexZ2 out;
  std::map<VertexId, std::size_t> vrow;
  std::map<EdgeId, std::size_t> erow;
  for (const auto& [v, p] : c.vertices()) {
    vrow.emplace(v, out.vertex_order.size());
    out.vertex_order.push_back(v);
  }
  for (const auto& [id, e] : c.edges()) {
    if (c.deleted_edges().contains(id)) continue;
    erow.emplace(id, out.edge_order.size());
    out.edge_order.push_back(id);
  }
  for (const auto& [id, f] : c.faces()) out.face_order.push_back(id);

  out.d1 = BitMatrix(out.vertex_order.size(), out.edge_order.size());
  for (std::size_t j = 0; j < out.edge_order.size(); ++j) {
    const Edge& e = c.edge(out.edge_order[j]);
    // A self-loop contributes tail + head = 0.
    out.d1.flip(vrow.at(e.tail), j);
    out.d1.flip(vrow.at(e.head), j);
  }

  out.d2 = BitMatrix(out.edge_order.size(), out.face_order.size());
  for (std::size_t j = 0; j < out.face_order.size(); ++j) {
    for (const Side& s : c.face(out.face_order[j]).sides) {
      auto it = erow.find(s.edge);
      if (it != erow.end()) out.d2.flip(it->second, j);
    }
  }
  return out;
}

HomologyProfile betti_numbers(const CellComplex& c) {
  ChainComplexZ2 chain = boundary_matrices(c);
  const long v = static_cast<long>(chain.vertex_order.size());
  const long e = static_cast<long>(chain.edge_order.size());
  const long f = static_cast<long>(chain.face_order.size());
  const long r1 = static_cast<long>(z2_rank(chain.d1));
  const long r2 = static_cast<long>(z2_rank(chain.d2));
  return HomologyProfile(v - r1, e - r1 - r2, f - r2);
}

}  // namespace singular
