#pragma once

#include <cstdint>
#include <vector>

#include "singular/cell_complex.hpp"

namespace singular {

struct HomologyProfile {
  long beta0 = 0;
  long beta1 = 0;
  long beta2 = 0;
  long chi = 0;

  HomologyProfile() = default;
  HomologyProfile(long b0, long b1, long b2) : beta0(b0), beta1(b1), beta2(b2), chi(b0 - b1 + b2) {}

  bool operator==(const HomologyProfile&) const = default;
};

// Dense matrix over the two-element field, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c);

  BitMatrix operator*(const BitMatrix& rhs) const;
  bool is_zero() const;

  // Row-major view of one row's words.
  const std::vector<std::uint64_t>& row(std::size_t r) const { return data_[r]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<std::uint64_t>> data_;
};

std::size_t z2_rank(BitMatrix m);

// Cellular boundary maps over Z2 on quotient classes. Rows/columns follow the
// ascending id order of the live cells; tombstoned edges are not cells.
struct ChainComplexZ2 {
  BitMatrix d1;  // vertices x edges
  BitMatrix d2;  // edges x faces
  std::vector<VertexId> vertex_order;
  std::vector<EdgeId> edge_order;
  std::vector<FaceId> face_order;
};

ChainComplexZ2 boundary_matrices(const CellComplex& c);

HomologyProfile betti_numbers(const CellComplex& c);

}  // namespace singular
