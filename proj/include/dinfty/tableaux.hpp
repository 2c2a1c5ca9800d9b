#pragma once

// Shapes, triangular arrays and semistandard tableaux attached to a subset X
// of U(m, n), the bijections between them, and dual RSK on 0-1 matrices.

#include "dinfty/exact.hpp"
#include "dinfty/vandermonde.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dinfty {

/// A partition: weakly decreasing positive row lengths. Trailing zeros are
/// trimmed on construction; anything else that is not a partition throws.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<long> parts);

  const std::vector<long>& parts() const { return parts_; }
  std::size_t rows() const { return parts_.size(); }
  long size() const;
  bool empty() const { return parts_.empty(); }

  /// Conjugate partition.
  Shape transpose() const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<long> parts_;
};

std::string to_string(const Shape& s);

/// All partitions of size, in reverse lexicographic order (largest first part first).
std::vector<Shape> partitions_of(long size);

/// Lemma-2.2 style array: row r (1-based from the top) has m - r + 1 entries
/// and ends in x_{m-r+1}; rows weakly increase; columns strictly decrease.
struct TriangularArray {
  std::vector<std::vector<long>> rows;

  /// Checks every structural invariant against the right border X.
  bool valid_for(const SubsetX& x) const;

  friend bool operator==(const TriangularArray&, const TriangularArray&) = default;
};

struct Ssyt {
  Shape shape;
  std::vector<std::vector<long>> rows;
  long max_entry = 0;

  /// Rows weak, columns strict, entries in {1..max_entry}, rows match shape.
  bool valid() const;

  friend bool operator==(const Ssyt&, const Ssyt&) = default;
  friend auto operator<=>(const Ssyt& a, const Ssyt& b) {
    if (auto c = a.max_entry <=> b.max_entry; c != 0) return c;
    if (auto c = a.shape <=> b.shape; c != 0) return c;
    return a.rows <=> b.rows;
  }
};

nlohmann::json to_json(const Ssyt& t);
nlohmann::json to_json(const TriangularArray& a);
Ssyt ssyt_from_json(const nlohmann::json& j, long max_entry);
TriangularArray triangular_array_from_json(const nlohmann::json& j);

/// (x_m - m, ..., x_1 - 1), trimmed.
Shape shape_from_subset(const SubsetX& x);

/// (m+1-y_1, ..., m+n-y_n), trimmed. Throws if that is not a partition.
Shape complement_shape(const std::vector<long>& y, long m);

/// Every triangular array with right border X, ordered lexicographically by
/// the word obtained reading rows bottom to top, left to right.
std::vector<TriangularArray> enumerate_triangular_arrays(const SubsetX& x);

/// Shift rows, pad into the square array, then read entry (i, j) as the
/// rightmost position of j in row i of the tableau.
Ssyt array_to_ssyt(const TriangularArray& a);

/// Inverse of array_to_ssyt. Throws std::invalid_argument when T does not
/// have shape shape_from_subset(X) or its bound is not |X|.
TriangularArray ssyt_to_array(const Ssyt& t, const SubsetX& x);

/// Every SSYT of the given shape with entries in {1..max_entry}, ordered
/// lexicographically by rows read top to bottom.
std::vector<Ssyt> enumerate_ssyt(const Shape& shape, long max_entry);

/// Number of SSYT of the given shape and bound, without materializing them.
BigInt count_ssyt(const Shape& shape, long max_entry);

struct LemmaCounts {
  BigInt arrays;         // |triangular arrays for X|
  BigInt vx_over_g;      // V_X / G(m+1)
  BigInt ssyt_x;         // |SSYT(shape_from_subset(X), m)|
  BigInt ssyt_y;         // |SSYT(complement_shape(Y, m), n)|
  BigInt vy_over_g;      // V_Y / G(n+1)
  bool divisible = true; // G(m+1) | V_X and G(n+1) | V_Y
  bool holds = false;
};

LemmaCounts lemma_22_23_24_check(const SubsetX& x);
bool lemma25_check(const SubsetX& x);

/// n x m matrix of bits, row-major.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix(std::size_t rows, std::size_t cols);
  ZeroOneMatrix(std::size_t rows, std::size_t cols, std::uint64_t mask);  // bit r*cols+c

  /// Parses "10/01" style text: rows separated by '/', each a string of 0/1.
  static ZeroOneMatrix parse(const std::string& text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }
  std::size_t ones_count() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> bits_;
};

struct RskPair {
  Ssyt p;  // entries in {1..m}
  Ssyt q;  // entries in {1..n}
};

/// Dual RSK: column indices of each row, ascending, are inserted into a
/// row-strict tableau (bumping the leftmost entry >= the new value); the row
/// index is recorded at each new box; P is the transpose of the insertion
/// tableau. shape(Q) = transpose(shape(P)).
RskPair dual_rsk(const ZeroOneMatrix& mat);

/// Number of pairs (P, Q) with |P| = t*, shape(Q) = shape(P)^T, entries of P
/// in {1..m} and of Q in {1..n}, by direct enumeration.
BigInt count_pairs(long m, long n, long tstar);

}  // namespace dinfty
