// Exact sparse linear algebra over the rationals.
//
// Matrices are indexed against bases chosen by the caller; nothing in this
// header knows what the rows and columns stand for.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toric {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline std::string to_string(const BigRational& q) { return q.str(); }
inline std::string to_string(const BigInt& z) { return z.str(); }

/// Sparse vector: (index, value) pairs, strictly increasing in index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, BigRational>>;

namespace detail {

// out = a + factor * b
inline SparseVector axpy(const SparseVector& a, const BigRational& factor,
                         const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, factor * ib->second);
      ++ib;
    } else {
      BigRational v = ia->second + factor * ib->second;
      if (v != 0) out.emplace_back(ia->first, std::move(v));
      ++ia;
      ++ib;
    }
  }
  return out;
}

inline const BigRational* find(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(
      v.begin(), v.end(), index,
      [](const auto& entry, std::size_t i) { return entry.first < i; });
  if (it == v.end() || it->first != index) return nullptr;
  return &it->second;
}

}  // namespace detail

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, 1);
    return m;
  }

  static SparseMatrix from_dense(
      const std::vector<std::vector<BigRational>>& dense) {
    std::size_t cols = dense.empty() ? 0 : dense.front().size();
    SparseMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
      if (dense[r].size() != cols) {
        throw std::invalid_argument("from_dense: ragged rows");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (dense[r][c] != 0) m.data_[r].emplace_back(c, dense[r][c]);
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigRational at(std::size_t r, std::size_t c) const {
    check(r, c);
    const BigRational* v = detail::find(data_[r], c);
    return v ? *v : BigRational(0);
  }

  /// Adds `value` to entry (r, c); entries cancelling to zero are erased.
  void add(std::size_t r, std::size_t c, const BigRational& value) {
    check(r, c);
    if (value == 0) return;
    auto& row = data_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const auto& entry, std::size_t i) { return entry.first < i; });
    if (it != row.end() && it->first == c) {
      it->second += value;
      if (it->second == 0) row.erase(it);
    } else {
      row.insert(it, {c, value});
    }
  }

  void set(std::size_t r, std::size_t c, const BigRational& value) {
    add(r, c, value - at(r, c));
  }

  const SparseVector& row(std::size_t r) const { return data_.at(r); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : data_) n += row.size();
    return n;
  }

  bool is_zero() const { return nonzeros() == 0; }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
    }
    return t;
  }

  /// Column c as a sparse vector over the row indices.
  SparseVector column(std::size_t c) const {
    SparseVector out;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (const BigRational* v = detail::find(data_[r], c)) {
        out.emplace_back(r, *v);
      }
    }
    return out;
  }

  SparseVector apply(const SparseVector& x) const {
    SparseVector out;
    for (std::size_t r = 0; r < rows_; ++r) {
      BigRational acc = 0;
      auto it = x.begin();
      for (const auto& [c, v] : data_[r]) {
        while (it != x.end() && it->first < c) ++it;
        if (it == x.end()) break;
        if (it->first == c) acc += v * it->second;
      }
      if (acc != 0) out.emplace_back(r, std::move(acc));
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product: shape mismatch");
    }
    SparseMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      std::map<std::size_t, BigRational> acc;
      for (const auto& [k, v] : a.data_[r]) {
        for (const auto& [c, w] : b.data_[k]) acc[c] += v * w;
      }
      for (auto& [c, v] : acc) {
        if (v != 0) out.data_[r].emplace_back(c, std::move(v));
      }
    }
    return out;
  }

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
      throw std::out_of_range("SparseMatrix index out of range");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector> data_;
};

/// Incrementally built row echelon form.
///
/// Each inserted vector is reduced against the existing pivot rows in
/// insertion order; whatever survives becomes a new pivot row. Row i has
/// zeros in the pivot columns of rows 0..i-1, which is what makes the
/// insertion-order reduction terminate. Among the surviving entries the
/// pivot goes to the column touched by the fewest pivot rows so far, which
/// keeps fill-in down on the +-1 matrices this library produces.
class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width), col_load_(width, 0) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `v` modulo the current row space.
  SparseVector reduce(SparseVector v) const {
    using Item = std::pair<std::size_t, std::size_t>;  // (row order, column)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pending;
    auto enqueue = [&](const SparseVector& vec) {
      for (const auto& [c, value] : vec) {
        auto it = pivot_of_col_.find(c);
        if (it != pivot_of_col_.end()) pending.emplace(it->second, c);
      }
    };
    enqueue(v);
    while (!pending.empty()) {
      auto [order, c] = pending.top();
      pending.pop();
      const BigRational* coeff = detail::find(v, c);
      if (!coeff) continue;
      const SparseVector& prow = rows_[order];
      const BigRational& pivot = *detail::find(prow, c);
      BigRational factor = -(*coeff) / pivot;
      v = detail::axpy(v, factor, prow);
      for (const auto& [pc, value] : prow) {
        auto it = pivot_of_col_.find(pc);
        if (it != pivot_of_col_.end() && it->second > order) {
          pending.emplace(it->second, pc);
        }
      }
    }
    return v;
  }

  /// Returns true when `v` enlarged the row space.
  bool insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    std::size_t best = v.front().first;
    for (const auto& [c, value] : v) {
      if (col_load_[c] < col_load_[best]) best = c;
    }
    for (const auto& [c, value] : v) ++col_load_[c];
    pivot_of_col_.emplace(best, rows_.size());
    pivot_cols_.push_back(best);
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
  const std::vector<SparseVector>& rows() const { return rows_; }

  /// Basis of {x : r . x = 0 for every stored row r}.
  std::vector<SparseVector> null_space() const {
    std::vector<bool> is_pivot(width_, false);
    for (std::size_t c : pivot_cols_) is_pivot[c] = true;
    std::vector<SparseVector> basis;
    for (std::size_t f = 0; f < width_; ++f) {
      if (is_pivot[f]) continue;
      std::map<std::size_t, BigRational> x;
      x[f] = 1;
      // Row i only involves free columns and pivots of later rows, so solving
      // from the last row backwards sees every value it needs.
      for (std::size_t i = rows_.size(); i-- > 0;) {
        std::size_t pc = pivot_cols_[i];
        BigRational acc = 0;
        BigRational pivot = 0;
        for (const auto& [c, value] : rows_[i]) {
          if (c == pc) {
            pivot = value;
            continue;
          }
          auto it = x.find(c);
          if (it != x.end()) acc += value * it->second;
        }
        if (acc != 0) x[pc] = -acc / pivot;
      }
      SparseVector vec;
      for (auto& [c, value] : x) {
        if (value != 0) vec.emplace_back(c, std::move(value));
      }
      basis.push_back(std::move(vec));
    }
    return basis;
  }

 private:
  std::size_t width_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivot_cols_;
  std::map<std::size_t, std::size_t> pivot_of_col_;
  std::vector<std::size_t> col_load_;
};

namespace detail {

inline Echelon echelon_of_rows(const std::vector<SparseVector>& rows,
                               std::size_t width) {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].size() < rows[b].size();
  });
  Echelon e(width);
  for (std::size_t i : order) {
    if (!rows[i].empty()) e.insert(rows[i]);
  }
  return e;
}

inline std::vector<SparseVector> rows_of(const SparseMatrix& a) {
  std::vector<SparseVector> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return rows;
}

}  // namespace detail

inline std::size_t rank(const SparseMatrix& a) {
  return detail::echelon_of_rows(detail::rows_of(a), a.cols()).rank();
}

/// Basis of the right null space {x : A x = 0}.
inline std::vector<SparseVector> kernel_basis(const SparseMatrix& a) {
  return detail::echelon_of_rows(detail::rows_of(a), a.cols()).null_space();
}

/// ambient_dim minus the dimension of the span of `span_gens`.
inline std::size_t quotient_dimension(const std::vector<SparseVector>& span_gens,
                                      std::size_t ambient_dim) {
  for (const auto& v : span_gens) {
    if (!v.empty() && v.back().first >= ambient_dim) {
      throw std::invalid_argument("quotient_dimension: vector longer than ambient");
    }
  }
  return ambient_dim - detail::echelon_of_rows(span_gens, ambient_dim).rank();
}

inline SparseVector to_sparse(const std::vector<BigRational>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) out.emplace_back(i, dense[i]);
  }
  return out;
}

}  // namespace toric
