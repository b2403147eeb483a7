#include "s4lie/linalg.hpp"

#include <algorithm>

#include "s4lie/errors.hpp"

namespace s4lie {

SparseVec SparseVec::unit(Index i, const Field& f) {
  SparseVec v;
  v.entries_.push_back({i, f.one()});
  return v;
}

SparseVec SparseVec::from_dense(std::span<const Scalar> values) {
  SparseVec v;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) v.entries_.push_back({static_cast<Index>(i), values[i]});
  return v;
}

std::vector<Scalar> SparseVec::to_dense(std::size_t dim, const Field& f) const {
  std::vector<Scalar> out(dim, f.zero());
  for (const auto& e : entries_) {
    if (e.index >= dim) throw ShapeError("sparse vector index out of range");
    out[e.index] = e.value;
  }
  return out;
}

const Scalar* SparseVec::find(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it == entries_.end() || it->index != i) return nullptr;
  return &it->value;
}

Scalar SparseVec::get(Index i, const Field& f) const {
  const Scalar* p = find(i);
  return p ? *p : f.zero();
}

void SparseVec::push_back(Index i, Scalar v) {
  if (v.is_zero()) return;
  entries_.push_back({i, std::move(v)});
}

SparseVec SparseVec::scaled(const Scalar& c) const {
  SparseVec r;
  if (c.is_zero()) return r;
  r.entries_.reserve(entries_.size());
  for (const auto& e : entries_) r.entries_.push_back({e.index, e.value * c});
  return r;
}

SparseVec SparseVec::shifted(Index offset) const {
  SparseVec r = *this;
  for (auto& e : r.entries_) e.index += offset;
  return r;
}

SparseVec SparseVec::operator-() const {
  SparseVec r = *this;
  for (auto& e : r.entries_) e.value = -e.value;
  return r;
}

namespace {

template <bool Subtract>
SparseVec merge(const SparseVec& a, const SparseVec& b) {
  SparseVec r;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->index < j->index)) {
      r.push_back(i->index, i->value);
      ++i;
    } else if (i == a.end() || j->index < i->index) {
      r.push_back(j->index, Subtract ? -j->value : j->value);
      ++j;
    } else {
      r.push_back(i->index, Subtract ? i->value - j->value : i->value + j->value);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

SparseVec operator+(const SparseVec& a, const SparseVec& b) { return merge<false>(a, b); }
SparseVec operator-(const SparseVec& a, const SparseVec& b) { return merge<true>(a, b); }

Scalar dot(const SparseVec& a, const SparseVec& b, const Field& f) {
  Scalar s = f.zero();
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->index < j->index) {
      ++i;
    } else if (j->index < i->index) {
      ++j;
    } else {
      s.add_product(i->value, j->value);
      ++i;
      ++j;
    }
  }
  return s;
}

Accumulator::Accumulator(std::size_t dim, const Field& f)
    : field_(f), values_(dim, f.zero()), mark_(dim, 0) {}

void Accumulator::touch(Index i) {
  if (i >= values_.size()) throw ShapeError("accumulator index out of range");
  if (!mark_[i]) {
    mark_[i] = 1;
    touched_.push_back(i);
  }
}

void Accumulator::add(Index i, const Scalar& v) {
  touch(i);
  values_[i] += v;
}

void Accumulator::sub(Index i, const Scalar& v) {
  touch(i);
  values_[i] -= v;
}

void Accumulator::add_product(Index i, const Scalar& x, const Scalar& y) {
  touch(i);
  values_[i].add_product(x, y);
}

void Accumulator::axpy(const Scalar& c, const SparseVec& v) {
  if (c.is_zero()) return;
  for (const auto& e : v) add_product(e.index, c, e.value);
}

void Accumulator::add(const SparseVec& v) {
  for (const auto& e : v) add(e.index, e.value);
}

void Accumulator::sub(const SparseVec& v) {
  for (const auto& e : v) sub(e.index, e.value);
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  SparseVec r;
  Scalar zero = field_.zero();
  for (Index i : touched_) {
    if (!values_[i].is_zero()) r.push_back(i, std::move(values_[i]));
    values_[i] = zero;
    mark_[i] = 0;
  }
  touched_.clear();
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f) : rows_(rows), cols_(cols), field_(f) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = SparseVec::unit(static_cast<Index>(i), f);
  return m;
}

Matrix Matrix::from_rows(std::vector<SparseVec> rows, std::size_t cols, const Field& f) {
  Matrix m;
  m.cols_ = cols;
  m.field_ = f;
  for (const auto& r : rows)
    if (r.extent() > cols) throw ShapeError("row entry outside column range");
  m.rows_ = std::move(rows);
  return m;
}

Matrix Matrix::from_columns(std::span<const SparseVec> columns, std::size_t rows, const Field& f) {
  std::vector<std::vector<Entry>> buckets(rows);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& e : columns[c]) {
      if (e.index >= rows) throw ShapeError("column entry outside row range");
      buckets[e.index].push_back({static_cast<Index>(c), e.value});
    }
  }
  Matrix m(rows, columns.size(), f);
  for (std::size_t r = 0; r < rows; ++r)
    for (auto& e : buckets[r]) m.rows_[r].push_back(e.index, std::move(e.value));
  return m;
}

Matrix Matrix::unflatten(const SparseVec& flat, std::size_t rows, std::size_t cols, const Field& f,
                         Index offset) {
  Matrix m(rows, cols, f);
  const std::size_t end = offset + rows * cols;
  for (const auto& e : flat) {
    if (e.index < offset || e.index >= end) continue;
    std::size_t k = e.index - offset;
    m.rows_[k / cols].push_back(static_cast<Index>(k % cols), e.value);
  }
  return m;
}

void Matrix::set_row(std::size_t r, SparseVec v) {
  if (v.extent() > cols_) throw ShapeError("row entry outside column range");
  rows_.at(r) = std::move(v);
}

Scalar Matrix::at(std::size_t r, std::size_t c) const { return rows_.at(r).get(static_cast<Index>(c), field_); }

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows() || c >= cols_) throw ShapeError("matrix index out of range");
  SparseVec delta;
  delta.push_back(static_cast<Index>(c), v - at(r, c));
  rows_[r] = rows_[r] + delta;
}

SparseVec Matrix::column(std::size_t c) const {
  SparseVec out;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (const Scalar* p = rows_[r].find(static_cast<Index>(c))) out.push_back(static_cast<Index>(r), *p);
  return out;
}

SparseVec Matrix::apply(const SparseVec& x) const {
  if (x.extent() > cols_) throw ShapeError("vector does not match matrix columns");
  SparseVec out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) continue;
    out.push_back(static_cast<Index>(r), dot(rows_[r], x, field_));
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows()) throw ShapeError("matrix product shape mismatch");
  Matrix m(rows(), o.cols_, field_);
  Accumulator acc(o.cols_, field_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) continue;
    for (const auto& e : rows_[r]) acc.axpy(e.value, o.rows_[e.index]);
    m.rows_[r] = acc.take();
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  Matrix m(rows(), cols_, field_);
  for (std::size_t r = 0; r < rows_.size(); ++r) m.rows_[r] = rows_[r] + o.rows_[r];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  Matrix m(rows(), cols_, field_);
  for (std::size_t r = 0; r < rows_.size(); ++r) m.rows_[r] = rows_[r] - o.rows_[r];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& r : m.rows_) r = -r;
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows(), cols_, field_);
  for (std::size_t r = 0; r < rows_.size(); ++r) m.rows_[r] = rows_[r].scaled(c);
  return m;
}

Matrix Matrix::transpose() const {
  return from_columns(rows_, cols_, field_);
}

Scalar Matrix::trace() const {
  Scalar t = field_.zero();
  for (std::size_t r = 0; r < rows_.size() && r < cols_; ++r)
    if (const Scalar* p = rows_[r].find(static_cast<Index>(r))) t += *p;
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseVec& r) { return r.empty(); });
}

bool Matrix::is_identity() const {
  if (rows() != cols_) return false;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& e = rows_[r].entries();
    if (e.size() != 1 || e[0].index != r || !e[0].value.is_one()) return false;
  }
  return true;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.nnz();
  return n;
}

SparseVec Matrix::flatten(Index offset) const {
  SparseVec out;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r]) out.push_back(static_cast<Index>(offset + r * cols_ + e.index), e.value);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.cols_ == b.cols_ && a.rows_ == b.rows_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  Matrix m(a.rows() * br, a.cols() * bc, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < br; ++k) {
      SparseVec row;
      for (const auto& ea : a.row(i))
        for (const auto& eb : b.row(k)) row.push_back(static_cast<Index>(ea.index * bc + eb.index), ea.value * eb.value);
      m.set_row(i * br + k, std::move(row));
    }
  }
  return m;
}

Echelon::Echelon(std::size_t dim, const Field& f, bool track)
    : dim_(dim), field_(f), track_(track), row_of_col_(dim, -1) {}

SparseVec Echelon::reduce(const SparseVec& v) const {
  if (v.extent() > dim_) throw ShapeError("vector outside echelon ambient dimension");
  bool hit = false;
  for (const auto& e : v)
    if (row_of_col_[e.index] >= 0) {
      hit = true;
      break;
    }
  if (!hit) return v;
  Accumulator acc(dim_, field_);
  acc.add(v);
  for (const auto& e : v) {
    std::int32_t r = row_of_col_[e.index];
    if (r >= 0) acc.axpy(-e.value, rows_[r]);
  }
  return acc.take();
}

bool Echelon::insert(const SparseVec& v) {
  if (v.extent() > dim_) throw ShapeError("vector outside echelon ambient dimension");
  SparseVec trans;
  SparseVec red;
  if (track_) {
    // Reduction coefficients are the entries of v at pivot columns.
    Accumulator tacc(accepted_ + 1, field_);
    Accumulator acc(dim_, field_);
    acc.add(v);
    tacc.add(static_cast<Index>(accepted_), field_.one());
    for (const auto& e : v) {
      std::int32_t r = row_of_col_[e.index];
      if (r < 0) continue;
      acc.axpy(-e.value, rows_[r]);
      tacc.axpy(-e.value, transforms_[r]);
    }
    red = acc.take();
    trans = tacc.take();
  } else {
    red = reduce(v);
  }
  if (red.empty()) return false;
  Scalar lead_inv = red.entries().front().value.inverse();
  Index piv = red.entries().front().index;
  red = red.scaled(lead_inv);
  if (track_) trans = trans.scaled(lead_inv);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar* c = rows_[r].find(piv);
    if (!c) continue;
    Scalar coef = *c;
    rows_[r] = rows_[r] - red.scaled(coef);
    if (track_) transforms_[r] = transforms_[r] - trans.scaled(coef);
  }
  row_of_col_[piv] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(red));
  pivot_.push_back(piv);
  if (track_) transforms_.push_back(std::move(trans));
  ++accepted_;
  return true;
}

std::vector<SparseVec> Echelon::sorted_rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (Index c = 0; c < dim_; ++c)
    if (row_of_col_[c] >= 0) out.push_back(rows_[row_of_col_[c]]);
  return out;
}

std::vector<Index> Echelon::sorted_pivots() const {
  std::vector<Index> p = pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

std::optional<SparseVec> Echelon::rref_coordinates(const SparseVec& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Index> order = sorted_pivots();
  SparseVec out;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (const Scalar* p = v.find(order[k])) out.push_back(static_cast<Index>(k), *p);
  return out;
}

std::optional<SparseVec> Echelon::coordinates(const SparseVec& v) const {
  if (!track_) throw Error(ErrorKind::precondition, "echelon built without transform tracking");
  if (!contains(v)) return std::nullopt;
  Accumulator acc(accepted_ + 1, field_);
  for (const auto& e : v) {
    std::int32_t r = row_of_col_[e.index];
    if (r >= 0) acc.axpy(e.value, transforms_[r]);
  }
  return acc.take();
}

Subspace::Subspace(std::size_t ambient, const Field& f) : ambient_(ambient), field_(f), row_of_col_(ambient, -1) {}

Subspace Subspace::from_echelon(const Echelon& e) {
  Subspace s(e.dim(), e.field());
  s.basis_ = e.sorted_rows();
  s.pivots_ = e.sorted_pivots();
  for (std::size_t k = 0; k < s.pivots_.size(); ++k) s.row_of_col_[s.pivots_[k]] = static_cast<std::int32_t>(k);
  return s;
}

Subspace Subspace::span(std::span<const SparseVec> vectors, std::size_t ambient, const Field& f) {
  Echelon e(ambient, f);
  for (const auto& v : vectors) e.insert(v);
  return from_echelon(e);
}

Subspace Subspace::full(std::size_t ambient, const Field& f) {
  Echelon e(ambient, f);
  for (std::size_t i = 0; i < ambient; ++i) e.insert(SparseVec::unit(static_cast<Index>(i), f));
  return from_echelon(e);
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis_, ambient_, field_); }

SparseVec Subspace::reduce(const SparseVec& v) const {
  if (v.extent() > ambient_) throw ShapeError("vector outside subspace ambient dimension");
  Accumulator acc(ambient_, field_);
  acc.add(v);
  bool hit = false;
  for (const auto& e : v) {
    std::int32_t r = row_of_col_[e.index];
    if (r >= 0) {
      acc.axpy(-e.value, basis_[r]);
      hit = true;
    }
  }
  if (!hit) {
    acc.take();
    return v;
  }
  return acc.take();
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("subspace ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const SparseVec& v) { return contains(v); });
}

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
  if (!contains(v)) return std::nullopt;
  SparseVec out;
  for (const auto& e : v) {
    std::int32_t r = row_of_col_[e.index];
    if (r >= 0) out.push_back(static_cast<Index>(r), e.value);
  }
  return out;
}

SparseVec Subspace::combine(const SparseVec& coords) const {
  Accumulator acc(ambient_, field_);
  for (const auto& e : coords) {
    if (e.index >= basis_.size()) throw ShapeError("coordinate index outside subspace basis");
    acc.axpy(e.value, basis_[e.index]);
  }
  return acc.take();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("subspace ambient mismatch");
  Echelon e(ambient_, field_);
  for (const auto& v : basis_) e.insert(v);
  for (const auto& v : other.basis_) e.insert(v);
  return from_echelon(e);
}

Subspace kernel_of_equations(const Echelon& red) {
  const std::size_t n = red.dim();
  std::vector<SparseVec> rows = red.sorted_rows();
  std::vector<Index> piv = red.sorted_pivots();
  std::vector<char> is_pivot(n, 0);
  for (Index p : piv) is_pivot[p] = 1;
  // Column view of the non-pivot part: for free column f, entries (row k, value).
  std::vector<std::vector<Entry>> free_cols(n);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (const auto& e : rows[k])
      if (!is_pivot[e.index]) free_cols[e.index].push_back({static_cast<Index>(k), e.value});
  Echelon out(n, red.field());
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Entry> ent;
    ent.push_back({f, red.field().one()});
    for (const auto& e : free_cols[f]) ent.push_back({piv[e.index], -e.value});
    std::sort(ent.begin(), ent.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    SparseVec v;
    for (auto& e : ent) v.push_back(e.index, std::move(e.value));
    out.insert(v);
  }
  return Subspace::from_echelon(out);
}

Subspace kernel_of_equations(std::span<const SparseVec> equations, std::size_t unknowns, const Field& f) {
  Echelon e(unknowns, f);
  for (const auto& eq : equations) e.insert(eq);
  return kernel_of_equations(e);
}

Subspace kernel(const Matrix& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return kernel_of_equations(rows, m.cols(), m.field());
}

Subspace echelon_span(std::span<const std::vector<Scalar>> vectors, std::size_t ambient, const Field& f) {
  Echelon e(ambient, f);
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw ShapeError("vector dimension does not match ambient dimension");
    e.insert(SparseVec::from_dense(v));
  }
  return Subspace::from_echelon(e);
}

bool subspace_contains(const Subspace& s, std::span<const Scalar> v) {
  if (v.size() != s.ambient()) throw ShapeError("vector dimension does not match subspace");
  return s.contains(SparseVec::from_dense(v));
}

std::size_t rank(const Matrix& m) {
  Echelon e(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return e.rank();
}

BasisSolver::BasisSolver(std::span<const SparseVec> basis, std::size_t ambient, const Field& f)
    : echelon_(ambient, f, true), size_(basis.size()) {
  for (const auto& v : basis)
    if (!echelon_.insert(v)) independent_ = false;
  if (!independent_) throw ShapeError("basis vectors are linearly dependent");
}

std::optional<SparseVec> BasisSolver::coordinates(const SparseVec& v) const { return echelon_.coordinates(v); }

SparseVec BasisSolver::solve(const SparseVec& v) const {
  auto c = echelon_.coordinates(v);
  if (!c) throw ShapeError("vector outside the span of the basis");
  return *c;
}

}  // namespace s4lie
