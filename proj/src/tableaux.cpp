#include "dinfty/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dinfty {

Shape::Shape(std::vector<long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Shape: parts must be positive (only trailing zeros allowed)");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Shape: parts must be weakly decreasing");
  }
}

long Shape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

Shape Shape::transpose() const {
  if (parts_.empty()) return {};
  std::vector<long> t(static_cast<std::size_t>(parts_.front()), 0);
  for (long p : parts_)
    for (long j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
  return Shape(std::move(t));
}

std::string to_string(const Shape& s) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < s.parts().size(); ++i) out << (i ? "," : "") << s.parts()[i];
  out << ')';
  return out.str();
}

std::vector<Shape> partitions_of(long size) {
  std::vector<Shape> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long left, long cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (long p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (size >= 0) rec(size, size);
  return out;
}

// ---------------------------------------------------------------------------
// Triangular arrays

bool TriangularArray::valid_for(const SubsetX& x) const {
  const auto& xs = x.elements();
  const std::size_t m = xs.size();
  if (rows.size() != m) return false;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = rows[r];
    if (row.size() != m - r) return false;
    if (row.back() != xs[m - r - 1]) return false;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) return false;
      if (c > 0 && row[c] < row[c - 1]) return false;
      if (r + 1 < m && c < rows[r + 1].size() && row[c] <= rows[r + 1][c]) return false;
    }
  }
  return true;
}

std::vector<TriangularArray> enumerate_triangular_arrays(const SubsetX& x) {
  const auto& xs = x.elements();
  const std::size_t m = xs.size();
  std::vector<TriangularArray> out;
  TriangularArray cur;
  cur.rows.resize(m);
  for (std::size_t r = 0; r < m; ++r) cur.rows[r].assign(m - r, 0);
  cur.rows[m - 1][0] = xs[0];

  // Fill row r (moving upward from the bottom), position c, left to right.
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    auto& row = cur.rows[r];
    if (c + 1 == row.size()) {
      row[c] = xs[m - r - 1];
      if (c > 0 && row[c] < row[c - 1]) return;
      if (r == 0)
        out.push_back(cur);
      else
        fill(r - 1, 0);
      return;
    }
    const long below = cur.rows[r + 1][c];
    const long lo = std::max(c > 0 ? row[c - 1] : 1L, below + 1);
    const long hi = xs[m - r - 1];
    for (long v = lo; v <= hi; ++v) {
      row[c] = v;
      fill(r, c + 1);
    }
  };
  if (m == 1)
    out.push_back(cur);
  else
    fill(m - 2, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Semistandard tableaux

bool Ssyt::valid() const {
  if (rows.size() != shape.rows()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<long>(rows[i].size()) != shape.parts()[i]) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const long v = rows[i][j];
      if (v < 1 || v > max_entry) return false;
      if (j > 0 && v < rows[i][j - 1]) return false;
      if (i > 0 && v <= rows[i - 1][j]) return false;
    }
  }
  return true;
}

nlohmann::json to_json(const Ssyt& t) { return {{"shape", t.shape.parts()}, {"rows", t.rows}}; }

nlohmann::json to_json(const TriangularArray& a) { return {{"rows", a.rows}}; }

Ssyt ssyt_from_json(const nlohmann::json& j, long max_entry) {
  Ssyt t{Shape(j.at("shape").get<std::vector<long>>()), j.at("rows").get<std::vector<std::vector<long>>>(), max_entry};
  if (!t.valid()) throw std::invalid_argument("ssyt_from_json: not a valid SSYT");
  return t;
}

TriangularArray triangular_array_from_json(const nlohmann::json& j) {
  return TriangularArray{j.at("rows").get<std::vector<std::vector<long>>>()};
}

Shape shape_from_subset(const SubsetX& x) {
  const auto& xs = x.elements();
  std::vector<long> parts;
  for (std::size_t i = xs.size(); i-- > 0;) parts.push_back(xs[i] - static_cast<long>(i) - 1);
  return Shape(std::move(parts));
}

Shape complement_shape(const std::vector<long>& y, long m) {
  std::vector<long> parts;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i > 0 && y[i] <= y[i - 1]) throw std::invalid_argument("complement_shape: Y must be strictly increasing");
    const long part = m + static_cast<long>(i) + 1 - y[i];
    if (part < 0) throw std::invalid_argument("complement_shape: negative part");
    parts.push_back(part);
  }
  return Shape(std::move(parts));
}

Ssyt array_to_ssyt(const TriangularArray& a) {
  const std::size_t m = a.rows.size();
  if (m == 0) throw std::invalid_argument("array_to_ssyt: empty array");
  std::vector<std::vector<long>> square(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    if (a.rows[i].size() != m - i) throw std::invalid_argument("array_to_ssyt: not a triangular array");
    const long from_bottom = static_cast<long>(m - i);
    for (std::size_t c = 0; c < a.rows[i].size(); ++c) square[i][i + c] = a.rows[i][c] - from_bottom;
  }
  std::vector<long> parts;
  std::vector<std::vector<long>> rows;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> row;
    long filled = 0;
    for (std::size_t j = 0; j < m; ++j) {
      for (; filled < square[i][j]; ++filled) row.push_back(static_cast<long>(j) + 1);
    }
    parts.push_back(static_cast<long>(row.size()));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Ssyt{Shape(parts), std::move(rows), static_cast<long>(m)};
}

TriangularArray ssyt_to_array(const Ssyt& t, const SubsetX& x) {
  const std::size_t m = x.elements().size();
  if (t.shape != shape_from_subset(x)) throw std::invalid_argument("ssyt_to_array: shape does not match X");
  if (t.max_entry != static_cast<long>(m)) throw std::invalid_argument("ssyt_to_array: entry bound must equal |X|");
  if (!t.valid()) throw std::invalid_argument("ssyt_to_array: not a valid SSYT");
  TriangularArray a;
  a.rows.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const long from_bottom = static_cast<long>(m - i);
    for (std::size_t j = i; j < m; ++j) {
      long count = 0;
      if (i < t.rows.size())
        count = std::count_if(t.rows[i].begin(), t.rows[i].end(), [&](long v) { return v <= static_cast<long>(j) + 1; });
      a.rows[i].push_back(count + from_bottom);
    }
  }
  return a;
}

namespace {

// Row-major filling with the tightest bound from the left and above neighbours.
template <class Sink>
void fill_ssyt(const Shape& shape, long max_entry, std::vector<std::vector<long>>& rows, std::size_t i, std::size_t j,
               Sink& sink) {
  if (i == shape.rows()) {
    sink(rows);
    return;
  }
  if (static_cast<long>(j) == shape.parts()[i]) {
    fill_ssyt(shape, max_entry, rows, i + 1, 0, sink);
    return;
  }
  long lo = 1;
  if (j > 0) lo = std::max(lo, rows[i][j - 1]);
  if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
  // Column below still needs shape.rows() - i - 1 strictly larger entries at most.
  long depth_below = 0;
  for (std::size_t k = i + 1; k < shape.rows() && shape.parts()[k] > static_cast<long>(j); ++k) ++depth_below;
  const long hi = max_entry - depth_below;
  for (long v = lo; v <= hi; ++v) {
    rows[i][j] = v;
    fill_ssyt(shape, max_entry, rows, i, j + 1, sink);
  }
}

std::vector<std::vector<long>> blank_rows(const Shape& shape) {
  std::vector<std::vector<long>> rows;
  for (long p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  return rows;
}

}  // namespace

std::vector<Ssyt> enumerate_ssyt(const Shape& shape, long max_entry) {
  std::vector<Ssyt> out;
  auto rows = blank_rows(shape);
  auto sink = [&](const std::vector<std::vector<long>>& r) { out.push_back(Ssyt{shape, r, max_entry}); };
  fill_ssyt(shape, max_entry, rows, 0, 0, sink);
  return out;
}

BigInt count_ssyt(const Shape& shape, long max_entry) {
  BigInt count = 0;
  auto rows = blank_rows(shape);
  auto sink = [&](const std::vector<std::vector<long>>&) { ++count; };
  fill_ssyt(shape, max_entry, rows, 0, 0, sink);
  return count;
}

LemmaCounts lemma_22_23_24_check(const SubsetX& x) {
  LemmaCounts c;
  const long m = x.m();
  const long n = x.n();
  const auto y = x.complement();

  c.arrays = static_cast<unsigned long>(enumerate_triangular_arrays(x).size());
  c.ssyt_x = count_ssyt(shape_from_subset(x), m);
  c.ssyt_y = count_ssyt(complement_shape(y, m), n);

  const BigInt vx = vandermonde(x);
  const BigInt vy = vandermonde(std::span<const long>(y));
  const BigInt gm = barnes_g(static_cast<unsigned>(m + 1));
  const BigInt gn = barnes_g(static_cast<unsigned>(n + 1));
  c.divisible = (vx % gm == 0) && (vy % gn == 0);
  c.vx_over_g = vx / gm;
  c.vy_over_g = vy / gn;
  c.holds = c.divisible && c.arrays == c.vx_over_g && c.ssyt_x == c.vx_over_g && c.ssyt_y == c.vy_over_g;
  return c;
}

bool lemma25_check(const SubsetX& x) {
  return complement_shape(x.complement(), x.m()) == shape_from_subset(x).transpose();
}

// ---------------------------------------------------------------------------
// 0-1 matrices and dual RSK

ZeroOneMatrix::ZeroOneMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

ZeroOneMatrix::ZeroOneMatrix(std::size_t rows, std::size_t cols, std::uint64_t mask) : ZeroOneMatrix(rows, cols) {
  if (rows * cols > 64) throw std::invalid_argument("ZeroOneMatrix: mask constructor limited to 64 cells");
  for (std::size_t k = 0; k < rows * cols; ++k) bits_[k] = (mask >> k) & 1u;
}

ZeroOneMatrix ZeroOneMatrix::parse(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line, '/')) lines.push_back(line);
  if (lines.empty() || lines.front().empty()) throw std::invalid_argument("matrix: empty input");
  const std::size_t cols = lines.front().size();
  ZeroOneMatrix mat(lines.size(), cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols) throw std::invalid_argument("matrix: rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = lines[r][c];
      if (ch != '0' && ch != '1') throw std::invalid_argument("matrix: entries must be 0 or 1");
      mat.set(r, c, ch == '1');
    }
  }
  return mat;
}

std::size_t ZeroOneMatrix::ones_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

RskPair dual_rsk(const ZeroOneMatrix& mat) {
  std::vector<std::vector<long>> insertion;
  std::vector<std::vector<long>> recording;
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      if (!mat.at(r, c)) continue;
      long value = static_cast<long>(c) + 1;
      for (std::size_t row = 0;; ++row) {
        if (row == insertion.size()) {
          insertion.push_back({value});
          recording.push_back({static_cast<long>(r) + 1});
          break;
        }
        auto& ins = insertion[row];
        auto it = std::lower_bound(ins.begin(), ins.end(), value);
        if (it == ins.end()) {
          ins.push_back(value);
          recording[row].push_back(static_cast<long>(r) + 1);
          break;
        }
        std::swap(*it, value);
      }
    }
  }
  std::vector<long> parts;
  for (const auto& row : insertion) parts.push_back(static_cast<long>(row.size()));
  const Shape w_shape(parts);
  const Shape p_shape = w_shape.transpose();

  std::vector<std::vector<long>> p_rows;
  for (std::size_t i = 0; i < p_shape.rows(); ++i) {
    std::vector<long> row;
    for (long k = 0; k < p_shape.parts()[i]; ++k) row.push_back(insertion[static_cast<std::size_t>(k)][i]);
    p_rows.push_back(std::move(row));
  }
  return RskPair{Ssyt{p_shape, std::move(p_rows), static_cast<long>(mat.cols())},
                 Ssyt{w_shape, std::move(recording), static_cast<long>(mat.rows())}};
}

BigInt count_pairs(long m, long n, long tstar) {
  if (tstar < 0) return 0;
  BigInt total = 0;
  for (const auto& shape : partitions_of(tstar)) {
    if (static_cast<long>(shape.rows()) > m) continue;
    const Shape conj = shape.transpose();
    if (static_cast<long>(conj.rows()) > n) continue;
    total += count_ssyt(shape, m) * count_ssyt(conj, n);
  }
  return total;
}

}  // namespace dinfty
