#include "s4lie/algebra.hpp"

#include <deque>
#include <map>

#include "s4lie/errors.hpp"
#include "s4lie/parallel.hpp"

namespace s4lie {

namespace {

nlohmann::json idx(std::initializer_list<std::size_t> v) { return nlohmann::json(std::vector<std::size_t>(v)); }

void check_square(const std::optional<Matrix>& m, std::size_t n, const char* what) {
  if (m && (m->rows() != n || m->cols() != n))
    throw ShapeError(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

}  // namespace

std::shared_ptr<const Algebra::Data> Algebra::build(Data d) {
  const std::size_t n = d.n;
  check_square(d.involution, n, "involution");
  check_square(d.form, n, "form");
  for (const auto* m : {&d.involution, &d.form})
    if (*m && (*m)->field() != d.field) throw ContextError("matrix field differs from algebra field");
  d.left.clear();
  d.right.clear();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseVec> lcols, rcols;
    for (std::size_t j = 0; j < n; ++j) {
      lcols.push_back(d.table[i * n + j]);
      rcols.push_back(d.table[j * n + i]);
    }
    d.left.push_back(Matrix::from_columns(lcols, n, d.field));
    d.right.push_back(Matrix::from_columns(rcols, n, d.field));
  }
  return std::make_shared<const Data>(std::move(d));
}

Algebra::Algebra(const Field& f, std::size_t n, std::span<const MulEntry> mul, std::optional<Matrix> involution,
                 std::optional<Matrix> form, std::string name) {
  std::vector<SparseVec> table(n * n);
  std::map<std::size_t, std::vector<const MulEntry*>> by_pair;
  for (const auto& e : mul) {
    if (e.i >= n || e.j >= n || e.k >= n) throw ShapeError("structure constant index out of range");
    if (e.c.discriminant() != f.discriminant()) throw ContextError("structure constant in a different field");
    by_pair[e.i * n + e.j].push_back(&e);
  }
  Accumulator a(n, f);
  for (auto& [p, list] : by_pair) {
    for (const auto* e : list) a.add(e->k, e->c);
    table[p] = a.take();
  }
  *this = from_table(f, n, std::move(table), std::move(involution), std::move(form), std::move(name));
}

Algebra Algebra::from_table(const Field& f, std::size_t n, std::vector<SparseVec> table,
                            std::optional<Matrix> involution, std::optional<Matrix> form, std::string name) {
  if (table.size() != n * n) throw ShapeError("multiplication table size mismatch");
  for (const auto& v : table)
    if (v.extent() > n) throw ShapeError("structure constant index out of range");
  Data d;
  d.field = f;
  d.n = n;
  d.table = std::move(table);
  d.involution = std::move(involution);
  d.form = std::move(form);
  d.name = std::move(name);
  return Algebra(build(std::move(d)));
}

SparseVec Algebra::multiply(const SparseVec& x, const SparseVec& y) const {
  Accumulator acc(dim(), field());
  for (const auto& ex : x)
    for (const auto& ey : y) {
      const SparseVec& p = basis_product(ex.index, ey.index);
      if (p.empty()) continue;
      acc.axpy(ex.value * ey.value, p);
    }
  return acc.take();
}

Matrix Algebra::left(const SparseVec& x) const {
  Matrix m(dim(), dim(), field());
  for (const auto& e : x) m = m + d_->left[e.index].scaled(e.value);
  return m;
}

Matrix Algebra::right(const SparseVec& x) const {
  Matrix m(dim(), dim(), field());
  for (const auto& e : x) m = m + d_->right[e.index].scaled(e.value);
  return m;
}

bool Algebra::zero_product() const {
  for (const auto& v : d_->table)
    if (!v.empty()) return false;
  return true;
}

const Matrix& Algebra::involution() const {
  if (!d_->involution) throw Error(ErrorKind::missing_structure, "algebra has no involution");
  return *d_->involution;
}

Matrix Algebra::bar_operator(const Matrix& d) const {
  const Matrix& b = involution();
  return b * d * b;
}

const Matrix& Algebra::form() const {
  if (!d_->form) throw Error(ErrorKind::missing_structure, "algebra has no quadratic form");
  return *d_->form;
}

Scalar Algebra::polar(const SparseVec& x, const SparseVec& y) const { return dot(x, form().apply(y), field()); }

Scalar Algebra::quadratic(const SparseVec& x) const { return polar(x, x) * field().rational(1, 2); }

std::vector<MulEntry> Algebra::mul_entries() const {
  std::vector<MulEntry> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& e : basis_product(i, j))
        out.push_back({static_cast<Index>(i), static_cast<Index>(j), e.index, e.value});
  return out;
}

Algebra Algebra::with_involution(std::optional<Matrix> b) const {
  Data d = *d_;
  d.involution = std::move(b);
  return Algebra(build(std::move(d)));
}

Algebra Algebra::with_form(std::optional<Matrix> q) const {
  Data d = *d_;
  d.form = std::move(q);
  return Algebra(build(std::move(d)));
}

Algebra Algebra::with_name(std::string name) const {
  Data d = *d_;
  d.name = std::move(name);
  return Algebra(std::make_shared<const Data>(std::move(d)));
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.field() == b.field() && a.dim() == b.dim() && a.d_->table == b.d_->table &&
         a.d_->involution == b.d_->involution && a.d_->form == b.d_->form;
}

std::optional<std::string> involution_violation(const Algebra& a) {
  if (!a.has_involution()) return std::nullopt;
  const Matrix& b = a.involution();
  if (!(b * b).is_identity()) return "involution does not square to the identity";
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec lhs = b.apply(a.basis_product(i, j));
      SparseVec rhs = a.multiply(b.column(j), b.column(i));
      if (!(lhs == rhs))
        return "involution law fails on basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  return std::nullopt;
}

std::optional<std::string> form_violation(const Algebra& a) {
  if (!a.has_form()) return std::nullopt;
  if (!(a.form().transpose() == a.form())) return "form matrix is not symmetric";
  return std::nullopt;
}

void validate(const Algebra& a) {
  if (auto v = involution_violation(a)) throw Error(ErrorKind::invalid_involution, *v);
  if (auto v = form_violation(a)) throw Error(ErrorKind::invalid_form, *v);
}

Algebra make_algebra(const Field& f, std::size_t n, std::span<const MulEntry> mul, std::optional<Matrix> involution,
                     std::optional<Matrix> form, std::string name) {
  Algebra a(f, n, mul, std::move(involution), std::move(form), std::move(name));
  validate(a);
  return a;
}

OperatorPair mult_operator(const Algebra& a, const SparseVec& x) {
  if (x.extent() > a.dim()) throw ShapeError("element dimension mismatch");
  return {a.left(x), a.right(x)};
}

SparseVec commutator(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  return a.multiply(x, y) - a.multiply(y, x);
}

SparseVec associator(const Algebra& a, const SparseVec& x, const SparseVec& y, const SparseVec& z) {
  return a.multiply(a.multiply(x, y), z) - a.multiply(x, a.multiply(y, z));
}

Report check_symmetric_composition(const Algebra& s) {
  if (!s.has_form()) throw Error(ErrorKind::missing_structure, "symmetric composition check needs a quadratic form");
  Report r("symmetric composition");
  const std::size_t n = s.dim();
  const Field& f = s.field();
  r.expect(rank(s.form()) == n, "regular-form", nullptr, "polar form must be nondegenerate");
  // q(u, v) for u = e_i * e_j, precomputed as Q (e_i * e_j).
  std::vector<SparseVec> qp(n * n);
  for (std::size_t p = 0; p < n * n; ++p) qp[p] = s.form().apply(s.basis_product(p / n, p % n));
  auto qe = [&](std::size_t i, std::size_t j) { return s.form().at(i, j); };
  constexpr std::size_t cap = 1000;

  // q(x*y, z*w) + q(x*w, z*y) = q(x,z) q(y,w)
  nlohmann::json bad = nlohmann::json::array();
  std::size_t failures = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          Scalar lhs = dot(s.basis_product(x, y), qp[z * n + w], f) + dot(s.basis_product(x, w), qp[z * n + y], f);
          if (lhs != qe(x, z) * qe(y, w)) {
            if (failures++ < cap) bad.push_back(idx({x, y, z, w}));
          }
        }
  Check comp;
  comp.condition = "composition";
  comp.cases = n * n * n * n;
  comp.pass = failures == 0;
  if (failures) {
    comp.witness = bad;
    comp.detail = std::to_string(failures) + " failing tuples";
  }
  r.add(comp);

  // q(x*y, z) = q(x, y*z)
  bad = nlohmann::json::array();
  failures = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Scalar lhs = dot(s.basis_product(x, y), s.form().column(z), f);
        Scalar rhs = dot(s.form().column(x), s.basis_product(y, z), f);
        if (lhs != rhs && failures++ < cap) bad.push_back(idx({x, y, z}));
      }
  Check assoc;
  assoc.condition = "form-associativity";
  assoc.cases = n * n * n;
  assoc.pass = failures == 0;
  if (failures) {
    assoc.witness = bad;
    assoc.detail = std::to_string(failures) + " failing tuples";
  }
  r.add(assoc);
  return r;
}

Matrix inner_derivation(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  SparseVec xb = a.bar(x), yb = a.bar(y);
  SparseVec c = commutator(a, x, y) + commutator(a, xb, yb);
  const Field& f = a.field();
  Matrix d = (a.left(c) - a.right(c)).scaled(f.rational(1, 3));
  // (z,y,x) = R_x R_y z - R_{yx} z ; (z,xb,yb) = R_yb R_xb z - R_{xb yb} z
  d = d + a.right(x) * a.right(y) - a.right(a.multiply(y, x));
  d = d - a.right(yb) * a.right(xb) + a.right(a.multiply(xb, yb));
  return d;
}

bool is_derivation(const Algebra& a, const Matrix& d) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec lhs = d.apply(a.basis_product(i, j));
      SparseVec rhs = a.multiply(d.column(i), a.basis(j)) + a.multiply(a.basis(i), d.column(j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Subspace derivation_algebra(const Algebra& a, bool respect_involution) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  Echelon eqs(n * n, f);
  Accumulator acc(n * n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // component k of D(e_i e_j) - D(e_i) e_j - e_i D(e_j)
      std::map<Index, std::map<Index, Scalar>> rows;
      auto add = [&](Index k, Index u, const Scalar& v) {
        auto& row = rows[k];
        auto it = row.find(u);
        if (it == row.end())
          row.emplace(u, v);
        else
          it->second += v;
      };
      for (const auto& e : a.basis_product(i, j))
        for (Index k = 0; k < n; ++k) add(k, static_cast<Index>(k * n + e.index), e.value);
      for (std::size_t r = 0; r < n; ++r) {
        for (const auto& e : a.basis_product(r, j)) add(e.index, static_cast<Index>(r * n + i), -e.value);
        for (const auto& e : a.basis_product(i, r)) add(e.index, static_cast<Index>(r * n + j), -e.value);
      }
      for (auto& [k, row] : rows) {
        for (auto& [u, v] : row) acc.add(u, v);
        eqs.insert(acc.take());
      }
    }
  if (respect_involution) {
    const Matrix& b = a.involution();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        // (DB - BD)[r][c]
        for (std::size_t m = 0; m < n; ++m) {
          if (const Scalar* p = b.row(m).find(static_cast<Index>(c))) acc.add(static_cast<Index>(r * n + m), *p);
          if (const Scalar* p = b.row(r).find(static_cast<Index>(m))) acc.sub(static_cast<Index>(m * n + c), *p);
        }
        eqs.insert(acc.take());
      }
  }
  return kernel_of_equations(eqs);
}

Subspace inner_derivation_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  Echelon e(n * n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.insert(inner_derivation(a, a.basis(i), a.basis(j)).flatten());
  return Subspace::from_echelon(e);
}

Subspace ideal_closure(const Algebra& a, std::span<const SparseVec> generators, std::span<const Matrix> extra) {
  const std::size_t n = a.dim();
  Echelon e(n, a.field());
  std::deque<SparseVec> queue;
  for (const auto& g : generators)
    if (e.insert(g)) queue.push_back(g);
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    auto push = [&](const SparseVec& w) {
      if (!w.empty() && e.insert(w)) queue.push_back(w);
    };
    for (std::size_t i = 0; i < n && e.rank() < n; ++i) {
      push(a.multiply(a.basis(i), v));
      push(a.multiply(v, a.basis(i)));
    }
    for (const auto& m : extra) push(m.apply(v));
  }
  return Subspace::from_echelon(e);
}

Subspace skew_elements(const Algebra& a) {
  return kernel(a.involution() + Matrix::identity(a.dim(), a.field()));
}

Subspace hermitian_elements(const Algebra& a) {
  return kernel(a.involution() - Matrix::identity(a.dim(), a.field()));
}

Subspace product_span(const Algebra& a) {
  const std::size_t n = a.dim();
  Echelon e(n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.insert(a.basis_product(i, j));
  return Subspace::from_echelon(e);
}

std::optional<SparseVec> unit_element(const Algebra& a) {
  // Unknown u with u e_j = e_j and e_j u = e_j for all j: inhomogeneous system,
  // solved as a kernel with an extra coordinate t for the right-hand side.
  const std::size_t n = a.dim();
  const Field& f = a.field();
  Echelon eqs(n + 1, f);
  Accumulator acc(n + 1, f);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (int side = 0; side < 2; ++side) {
        for (std::size_t i = 0; i < n; ++i) {
          const SparseVec& p = side == 0 ? a.basis_product(i, j) : a.basis_product(j, i);
          if (const Scalar* c = p.find(static_cast<Index>(k))) acc.add(static_cast<Index>(i), *c);
        }
        if (j == k) acc.sub(static_cast<Index>(n), f.one());
        eqs.insert(acc.take());
      }
    }
  Subspace ker = kernel_of_equations(eqs);
  for (const auto& v : ker.basis()) {
    const Scalar* t = v.find(static_cast<Index>(n));
    if (!t) continue;
    SparseVec u;
    Scalar inv = t->inverse();
    for (const auto& e : v)
      if (e.index < n) u.push_back(e.index, e.value * inv);
    return u;
  }
  return std::nullopt;
}

Algebra star_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const Matrix& b = a.involution();
  std::vector<SparseVec> table(n * n);
  for (std::size_t p = 0; p < n * n; ++p) table[p] = b.apply(a.basis_product(p / n, p % n));
  std::optional<Matrix> form;
  if (a.has_form()) form = a.form();
  return Algebra::from_table(a.field(), n, std::move(table), b, std::move(form), a.name().empty() ? "" : a.name() + "*");
}

namespace {

SparseVec lift(const SparseVec& v, const Field& f) {
  SparseVec out;
  for (const auto& e : v) out.push_back(e.index, Scalar(f, e.value.rational_part()));
  return out;
}

Matrix lift(const Matrix& m, const Field& f) {
  std::vector<SparseVec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(lift(m.row(r), f));
  return Matrix::from_rows(std::move(rows), m.cols(), f);
}

}  // namespace

Algebra extend_scalars(const Algebra& a, const Field& f) {
  if (a.field() == f) return a;
  if (!a.field().is_rational()) throw ContextError("only rational algebras can be extended");
  const std::size_t n = a.dim();
  std::vector<SparseVec> table;
  for (std::size_t i = 0; i < n * n; ++i) table.push_back(lift(a.basis_product(i / n, i % n), f));
  std::optional<Matrix> b, q;
  if (a.has_involution()) b = lift(a.involution(), f);
  if (a.has_form()) q = lift(a.form(), f);
  return Algebra::from_table(f, n, std::move(table), std::move(b), std::move(q), a.name());
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) throw ContextError("direct sum of algebras over different fields");
  const std::size_t n = a.dim(), m = b.dim(), t = n + m;
  const Field& f = a.field();
  std::vector<SparseVec> table(t * t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * t + j] = a.basis_product(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[(n + i) * t + n + j] = b.basis_product(i, j).shifted(static_cast<Index>(n));
  auto block = [&](const Matrix& x, const Matrix& y) {
    Matrix out(t, t, f);
    for (std::size_t r = 0; r < n; ++r) out.set_row(r, x.row(r));
    for (std::size_t r = 0; r < m; ++r) out.set_row(n + r, y.row(r).shifted(static_cast<Index>(n)));
    return out;
  };
  std::optional<Matrix> inv, form;
  if (a.has_involution() && b.has_involution()) inv = block(a.involution(), b.involution());
  if (a.has_form() && b.has_form()) form = block(a.form(), b.form());
  return Algebra::from_table(f, t, std::move(table), std::move(inv), std::move(form), a.name() + "+" + b.name());
}

Algebra tensor_product(const Algebra& s, const Algebra& t, std::string name) {
  if (s.field() != t.field()) throw ContextError("tensor product of algebras over different fields");
  const std::size_t n = s.dim(), m = t.dim(), nm = n * m;
  std::vector<SparseVec> table(nm * nm);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t y = 0; y < m; ++y) {
          SparseVec v;
          for (const auto& e : s.basis_product(a, b))
            for (const auto& g : t.basis_product(x, y)) v.push_back(static_cast<Index>(e.index * m + g.index), e.value * g.value);
          table[(a * m + x) * nm + b * m + y] = std::move(v);
        }
  std::optional<Matrix> inv, form;
  if (s.has_involution() && t.has_involution()) inv = kron(s.involution(), t.involution());
  if (s.has_form() && t.has_form()) form = kron(s.form(), t.form());
  return Algebra::from_table(s.field(), nm, std::move(table), std::move(inv), std::move(form), std::move(name));
}

Algebra twisted_product(const Algebra& a, const Matrix& p, const Matrix& q, std::string name) {
  const std::size_t n = a.dim();
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = a.multiply(p.column(i), q.column(j));
  std::optional<Matrix> inv, form;
  if (a.has_involution()) inv = a.involution();
  if (a.has_form()) form = a.form();
  return Algebra::from_table(a.field(), n, std::move(table), std::move(inv), std::move(form), std::move(name));
}

}  // namespace s4lie
