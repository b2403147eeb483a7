#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "s4lie/scalar.hpp"

namespace s4lie {

using Index = std::uint32_t;

struct Entry {
  Index index;
  Scalar value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sparse vector: entries sorted by index, no stored zeros.
class SparseVec {
 public:
  SparseVec() = default;
  static SparseVec unit(Index i, const Field& f);
  static SparseVec from_dense(std::span<const Scalar> values);

  std::vector<Scalar> to_dense(std::size_t dim, const Field& f) const;

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  const Scalar* find(Index i) const;
  Scalar get(Index i, const Field& f) const;
  // Largest index + 1, or 0 when empty.
  Index extent() const noexcept { return entries_.empty() ? 0 : entries_.back().index + 1; }

  // Appends an entry; indices must increase and value must be nonzero.
  void push_back(Index i, Scalar v);

  SparseVec scaled(const Scalar& c) const;
  SparseVec shifted(Index offset) const;
  SparseVec operator-() const;
  friend SparseVec operator+(const SparseVec& a, const SparseVec& b);
  friend SparseVec operator-(const SparseVec& a, const SparseVec& b);
  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> entries_;
};

Scalar dot(const SparseVec& a, const SparseVec& b, const Field& f);

// Dense scratch buffer for accumulating sparse linear combinations.
class Accumulator {
 public:
  Accumulator(std::size_t dim, const Field& f);

  void add(Index i, const Scalar& v);
  void sub(Index i, const Scalar& v);
  void add_product(Index i, const Scalar& x, const Scalar& y);
  void axpy(const Scalar& c, const SparseVec& v);
  void add(const SparseVec& v);
  void sub(const SparseVec& v);

  // Returns the accumulated vector and resets the buffer.
  SparseVec take();
  std::size_t dim() const noexcept { return values_.size(); }

 private:
  void touch(Index i);

  Field field_;
  std::vector<Scalar> values_;
  std::vector<Index> touched_;
  std::vector<char> mark_;
};

// Row-sparse matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Field& f);
  static Matrix identity(std::size_t n, const Field& f);
  static Matrix from_rows(std::vector<SparseVec> rows, std::size_t cols, const Field& f);
  static Matrix from_columns(std::span<const SparseVec> columns, std::size_t rows, const Field& f);
  // Row-major flat vector starting at offset.
  static Matrix unflatten(const SparseVec& flat, std::size_t rows, std::size_t cols, const Field& f,
                          Index offset = 0);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  const SparseVec& row(std::size_t r) const { return rows_[r]; }
  void set_row(std::size_t r, SparseVec v);
  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);
  SparseVec column(std::size_t c) const;

  SparseVec apply(const SparseVec& x) const;
  // Image of the basis vector e_c.
  SparseVec apply_unit(std::size_t c) const { return column(c); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Scalar trace() const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nnz() const;

  // Row-major flattening shifted by offset.
  SparseVec flatten(Index offset = 0) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::vector<SparseVec> rows_;
  std::size_t cols_ = 0;
  Field field_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

// Incremental reduced row echelon form. Rows are kept fully reduced: each row
// has a leading 1 at its pivot and zeros at every other pivot column.
// With tracking on, every row remembers its expression in terms of the
// accepted (independent) inserted vectors, numbered in acceptance order.
class Echelon {
 public:
  Echelon(std::size_t dim, const Field& f, bool track = false);

  // True when v was independent of the current rows.
  bool insert(const SparseVec& v);
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  // Coefficients with respect to the RREF rows (row order = pivot order).
  std::optional<SparseVec> rref_coordinates(const SparseVec& v) const;
  // Coefficients with respect to the accepted inserted vectors; requires tracking.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  const Field& field() const noexcept { return field_; }
  // Rows ordered by pivot column.
  std::vector<SparseVec> sorted_rows() const;
  std::vector<Index> sorted_pivots() const;

 private:
  std::size_t dim_;
  Field field_;
  bool track_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> transforms_;
  std::vector<Index> pivot_;
  std::vector<std::int32_t> row_of_col_;
  std::size_t accepted_ = 0;
};

// Subspace of F^n stored as a canonical reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, const Field& f);
  static Subspace span(std::span<const SparseVec> vectors, std::size_t ambient, const Field& f);
  static Subspace full(std::size_t ambient, const Field& f);
  static Subspace from_echelon(const Echelon& e);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const Field& field() const noexcept { return field_; }
  const std::vector<SparseVec>& basis() const noexcept { return basis_; }
  const std::vector<Index>& pivots() const noexcept { return pivots_; }
  Matrix basis_matrix() const;

  bool contains(const SparseVec& v) const;
  bool contains(const Subspace& other) const;
  SparseVec reduce(const SparseVec& v) const;
  // Coordinates w.r.t. basis(); empty optional when v is outside.
  std::optional<SparseVec> coordinates(const SparseVec& v) const;
  // Linear combination of basis vectors.
  SparseVec combine(const SparseVec& coords) const;

  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Field field_;
  std::vector<SparseVec> basis_;
  std::vector<Index> pivots_;
  std::vector<std::int32_t> row_of_col_;
};

// Null space of M (vectors x with Mx = 0).
Subspace kernel(const Matrix& m);
// Null space of the system whose equations are the given coefficient rows.
Subspace kernel_of_equations(std::span<const SparseVec> equations, std::size_t unknowns, const Field& f);
Subspace kernel_of_equations(const Echelon& reduced_equations);
Subspace echelon_span(std::span<const std::vector<Scalar>> vectors, std::size_t ambient, const Field& f);
bool subspace_contains(const Subspace& s, std::span<const Scalar> v);
std::size_t rank(const Matrix& m);

// Expresses vectors in a fixed (linearly independent) basis.
class BasisSolver {
 public:
  BasisSolver(std::span<const SparseVec> basis, std::size_t ambient, const Field& f);
  std::size_t size() const noexcept { return size_; }
  bool independent() const noexcept { return independent_; }
  std::optional<SparseVec> coordinates(const SparseVec& v) const;
  // Throws ShapeError when v is outside the span.
  SparseVec solve(const SparseVec& v) const;

 private:
  Echelon echelon_;
  std::size_t size_;
  bool independent_ = true;
};

}  // namespace s4lie
