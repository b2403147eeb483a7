#include "s4lie/triality.hpp"

#include <map>
#include <random>

#include "s4lie/errors.hpp"
#include "s4lie/parallel.hpp"

namespace s4lie {

Triple Triple::zero(std::size_t n, const Field& f) { return Triple(Matrix(n, n, f), Matrix(n, n, f), Matrix(n, n, f)); }

Triple Triple::operator+(const Triple& o) const { return Triple(d[0] + o.d[0], d[1] + o.d[1], d[2] + o.d[2]); }
Triple Triple::operator-(const Triple& o) const { return Triple(d[0] - o.d[0], d[1] - o.d[1], d[2] - o.d[2]); }
Triple Triple::operator-() const { return Triple(-d[0], -d[1], -d[2]); }
Triple Triple::scaled(const Scalar& c) const { return Triple(d[0].scaled(c), d[1].scaled(c), d[2].scaled(c)); }
bool Triple::is_zero() const { return d[0].is_zero() && d[1].is_zero() && d[2].is_zero(); }

SparseVec Triple::flatten() const {
  const std::size_t n2 = dim() * dim();
  SparseVec out;
  for (int i = 0; i < 3; ++i)
    for (const auto& e : d[i].flatten(static_cast<Index>(i * n2))) out.push_back(e.index, e.value);
  return out;
}

Triple Triple::unflatten(const SparseVec& v, std::size_t n, const Field& f) {
  const Index n2 = static_cast<Index>(n * n);
  return Triple(Matrix::unflatten(v, n, n, f, 0), Matrix::unflatten(v, n, n, f, n2), Matrix::unflatten(v, n, n, f, 2 * n2));
}

Triple bracket(const Triple& a, const Triple& b) {
  return Triple(commutator(a.d[0], b.d[0]), commutator(a.d[1], b.d[1]), commutator(a.d[2], b.d[2]));
}

Triple theta(const Triple& t) { return Triple(t.d[2], t.d[0], t.d[1]); }

Triple theta_power(const Triple& t, int k) {
  Triple r = t;
  for (int i = 0; i < mod3(k); ++i) r = theta(r);
  return r;
}

Triple xi(const Algebra& a, const Triple& t) {
  return Triple(a.bar_operator(t.d[0]), a.bar_operator(t.d[2]), a.bar_operator(t.d[1]));
}

namespace {

std::vector<SparseVec> columns(const Matrix& m) {
  Matrix t = m.transpose();
  std::vector<SparseVec> out;
  out.reserve(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) out.push_back(t.row(r));
  return out;
}

SparseVec apply_cols(const std::vector<SparseVec>& cols, const SparseVec& x, const Field& f) {
  if (x.nnz() == 1 && x.entries()[0].value.is_one()) return cols[x.entries()[0].index];
  Accumulator acc(cols.size(), f);
  for (const auto& e : x) acc.axpy(e.value, cols[e.index]);
  return acc.take();
}

// d~_i(e_a e_b) = d_{i+1}(e_a) e_b + e_a d_{i+2}(e_b), where d~ = d (stri) or B d B (lrt).
bool satisfies_triality(const Algebra& a, const Triple& t, bool lrta) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  std::array<std::vector<SparseVec>, 3> cols, lhs_cols;
  for (int i = 0; i < 3; ++i) {
    cols[i] = columns(t.d[i]);
    lhs_cols[i] = lrta ? columns(a.bar_operator(t.d[i])) : cols[i];
  }
  for (int i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        SparseVec lhs = apply_cols(lhs_cols[i], a.basis_product(x, y), f);
        SparseVec rhs = a.multiply(cols[mod3(i + 1)][x], a.basis(y)) + a.multiply(a.basis(x), cols[mod3(i + 2)][y]);
        if (!(lhs == rhs)) return false;
      }
  return true;
}

Subspace triality_space(const Algebra& a, bool lrta) {
  const std::size_t n = a.dim(), n2 = n * n;
  const Field& f = a.field();
  Echelon eqs(3 * n2, f);
  std::vector<SparseVec> bcols;
  std::optional<Matrix> b;
  if (lrta) b = a.involution();
  Accumulator acc(3 * n2, f);
  for (int i = 0; i < 3; ++i) {
    const Index oi = static_cast<Index>(i * n2), o1 = static_cast<Index>(mod3(i + 1) * n2),
                o2 = static_cast<Index>(mod3(i + 2) * n2);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const SparseVec& p = a.basis_product(x, y);
        std::map<Index, std::map<Index, Scalar>> rows;
        auto add = [&](Index k, Index u, const Scalar& v) {
          auto& row = rows[k];
          auto it = row.find(u);
          if (it == row.end())
            row.emplace(u, v);
          else
            it->second += v;
        };
        if (lrta) {
          // (B d B p)_k = sum_{r,c} B[k][r] d[r][c] (B p)[c]
          SparseVec bp = b->apply(p);
          for (Index k = 0; k < n; ++k)
            for (const auto& br : b->row(k))
              for (const auto& e : bp) add(k, static_cast<Index>(oi + br.index * n + e.index), br.value * e.value);
        } else {
          for (const auto& e : p)
            for (Index k = 0; k < n; ++k) add(k, static_cast<Index>(oi + k * n + e.index), e.value);
        }
        for (std::size_t r = 0; r < n; ++r) {
          for (const auto& e : a.basis_product(r, y)) add(e.index, static_cast<Index>(o1 + r * n + x), -e.value);
          for (const auto& e : a.basis_product(x, r)) add(e.index, static_cast<Index>(o2 + r * n + y), -e.value);
        }
        for (auto& [k, row] : rows) {
          for (auto& [u, v] : row) acc.add(u, v);
          eqs.insert(acc.take());
        }
      }
  }
  return kernel_of_equations(eqs);
}

std::vector<Triple> to_triples(const Subspace& s, std::size_t n, const Field& f) {
  std::vector<Triple> out;
  for (const auto& v : s.basis()) out.push_back(Triple::unflatten(v, n, f));
  return out;
}

nlohmann::json tuple(std::initializer_list<long long> v) { return nlohmann::json(std::vector<long long>(v)); }

void add_scaled(Matrix& acc, const Matrix& m, const Scalar& c) {
  if (c.is_one())
    acc = acc + m;
  else
    acc = acc + m.scaled(c);
}

}  // namespace

bool in_stri(const Algebra& a, const Triple& t) { return satisfies_triality(a, t, false); }
bool in_lrt(const Algebra& a, const Triple& t) { return satisfies_triality(a, t, true); }
Subspace stri_space(const Algebra& a) { return triality_space(a, false); }
Subspace lrt_space(const Algebra& a) { return triality_space(a, true); }

std::vector<Triple> stri_solve(const Algebra& a) { return to_triples(stri_space(a), a.dim(), a.field()); }

std::vector<Triple> lrt_solve(const Algebra& a) {
  Subspace direct = lrt_space(a);
  Subspace via_star = stri_space(star_algebra(a));
  if (!(direct == via_star))
    throw Error(ErrorKind::construction, "lrt(A,.,bar) differs from stri of the star product");
  return to_triples(direct, a.dim(), a.field());
}

DeltaMap DeltaMap::unchecked(const Field& f, std::size_t n, std::vector<Triple> values) {
  if (values.size() != n * (n - (n ? 1 : 0)) / 2 && !(n == 0 && values.empty()))
    throw ShapeError("delta map needs one triple per basis pair a<b");
  for (const auto& t : values)
    for (const auto& m : t.d)
      if (m.rows() != n || m.cols() != n) throw ShapeError("delta triple has wrong operator shape");
  DeltaMap d;
  d.n_ = n;
  d.field_ = f;
  d.values_ = std::move(values);
  return d;
}

DeltaMap DeltaMap::from_function(const Field& f, std::size_t n,
                                 const std::function<Triple(std::size_t, std::size_t)>& fn) {
  std::vector<Triple> values;
  values.reserve(n * (n ? n - 1 : 0) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) values.push_back(fn(a, b));
  return unchecked(f, n, std::move(values));
}

std::optional<std::pair<std::size_t, std::size_t>> DeltaMap::membership_violation(const Algebra& a, bool lrta) const {
  if (a.dim() != n_) throw ShapeError("delta map dimension differs from algebra dimension");
  // Membership is linear: it suffices to test a basis of the span of all values.
  Echelon e(3 * n_ * n_, field_);
  for (const auto& t : values_) e.insert(t.flatten());
  bool all_ok = true;
  for (const auto& row : e.sorted_rows())
    if (!satisfies_triality(a, Triple::unflatten(row, n_, field_), lrta)) {
      all_ok = false;
      break;
    }
  if (all_ok) return std::nullopt;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x + 1; y < n_; ++y)
      if (!satisfies_triality(a, stored(x, y), lrta)) return std::make_pair(x, y);
  return std::nullopt;
}

DeltaMap DeltaMap::verified(const Algebra& a, DeltaMap m, bool lrta) {
  if (auto bad = m.membership_violation(a, lrta))
    throw Error(ErrorKind::axiom, std::string("delta value outside ") + (lrta ? "lrt" : "stri") + " at basis pair (" +
                                      std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  return m;
}

bool DeltaMap::vanishes(std::size_t a, std::size_t b) const {
  if (a == b) return true;
  return a < b ? stored(a, b).is_zero() : stored(b, a).is_zero();
}

Triple DeltaMap::at(std::size_t a, std::size_t b) const {
  if (a == b) return Triple::zero(n_, field_);
  return a < b ? stored(a, b) : -stored(b, a);
}

Matrix DeltaMap::component(int i, std::size_t a, std::size_t b) const {
  if (a == b) return Matrix(n_, n_, field_);
  return a < b ? stored(a, b)[i] : -stored(b, a)[i];
}

SparseVec DeltaMap::apply(int i, std::size_t a, std::size_t b, const SparseVec& z) const {
  if (a == b) return {};
  if (a < b) return stored(a, b)[i].apply(z);
  return -stored(b, a)[i].apply(z);
}

Matrix DeltaMap::eval_component(int i, const SparseVec& x, const SparseVec& y) const {
  Matrix acc(n_, n_, field_);
  for (const auto& ex : x)
    for (const auto& ey : y) {
      if (ex.index == ey.index) continue;
      std::size_t a = ex.index, b = ey.index;
      Scalar c = ex.value * ey.value;
      if (a > b) {
        std::swap(a, b);
        c = -c;
      }
      const Matrix& m = stored(a, b)[i];
      if (m.is_zero()) continue;
      add_scaled(acc, m, c);
    }
  return acc;
}

Triple DeltaMap::eval(const SparseVec& x, const SparseVec& y) const {
  return Triple(eval_component(0, x, y), eval_component(1, x, y), eval_component(2, x, y));
}

DeltaMap DeltaMap::with_component_scaled(int i, const Scalar& c) const {
  DeltaMap m = *this;
  for (auto& t : m.values_) t[i] = t[i].scaled(c);
  return m;
}

Triple delta_structurable(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  SparseVec xb = a.bar(x), yb = a.bar(y);
  Matrix lx = a.left(x), ly = a.left(y), lxb = a.left(xb), lyb = a.left(yb);
  Matrix rx = a.right(x), ry = a.right(y), rxb = a.right(xb), ryb = a.right(yb);
  Matrix d0 = a.right(a.multiply(xb, y) - a.multiply(yb, x)) + ly * lxb - lx * lyb;
  Matrix d1 = lyb * lx - lxb * ly;
  Matrix d2 = ryb * rx - rxb * ry;
  return Triple(std::move(d0), std::move(d1), std::move(d2));
}

DeltaMap delta_structurable_map(const Algebra& a) {
  return DeltaMap::from_function(a.field(), a.dim(),
                                 [&](std::size_t x, std::size_t y) { return delta_structurable(a, a.basis(x), a.basis(y)); });
}

Triple composition_triple(const Algebra& s, const SparseVec& x, const SparseVec& y) {
  const std::size_t n = s.dim();
  const Field& f = s.field();
  SparseVec qx = s.form().apply(x), qy = s.form().apply(y);
  // sigma(z) = q(x,z) y - q(y,z) x, column c = (Qx)_c y - (Qy)_c x
  std::vector<SparseVec> cols(n);
  for (std::size_t c = 0; c < n; ++c) cols[c] = y.scaled(qx.get(static_cast<Index>(c), f)) - x.scaled(qy.get(static_cast<Index>(c), f));
  Matrix sigma = Matrix::from_columns(cols, n, f);
  Matrix half = Matrix::identity(n, f).scaled(s.polar(x, y) * f.rational(1, 2));
  Matrix lx = s.left(x), ly = s.left(y), rx = s.right(x), ry = s.right(y);
  return Triple(std::move(sigma), half - rx * ly, half - lx * ry);
}

DeltaMap delta_tensor(const Algebra& s, const Algebra& t) {
  for (const Algebra* f : {&s, &t}) {
    Report r = check_symmetric_composition(*f);
    if (!r.passed()) throw Error(ErrorKind::axiom, "tensor factor " + f->name() + " is not a symmetric composition algebra");
  }
  const std::size_t n = s.dim(), m = t.dim(), nm = n * m;
  const Field& f = s.field();
  std::vector<Triple> ts(n * n), tt(m * m);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) ts[a * n + b] = composition_triple(s, s.basis(a), s.basis(b));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) tt[x * m + y] = composition_triple(t, t.basis(x), t.basis(y));
  Matrix in = Matrix::identity(n, f), im = Matrix::identity(m, f);
  std::vector<Triple> kts(n * n), ktt(m * m);
  for (std::size_t p = 0; p < n * n; ++p)
    if (!ts[p].is_zero()) kts[p] = Triple(kron(ts[p].d[0], im), kron(ts[p].d[1], im), kron(ts[p].d[2], im));
  for (std::size_t p = 0; p < m * m; ++p)
    if (!tt[p].is_zero()) ktt[p] = Triple(kron(in, tt[p].d[0]), kron(in, tt[p].d[1]), kron(in, tt[p].d[2]));
  DeltaMap d = DeltaMap::from_function(f, nm, [&](std::size_t u, std::size_t v) {
    std::size_t a = u / m, x = u % m, b = v / m, y = v % m;
    Triple out = Triple::zero(nm, f);
    Scalar qt = t.form().at(x, y), qs = s.form().at(a, b);
    if (!qt.is_zero() && !ts[a * n + b].is_zero()) out = out + kts[a * n + b].scaled(qt);
    if (!qs.is_zero() && !tt[x * m + y].is_zero()) out = out + ktt[x * m + y].scaled(qs);
    return out;
  });
  return DeltaMap::verified(tensor_product(s, t), std::move(d), false);
}

namespace {

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(std::uint64_t seed) : rng(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng() % n); }
  std::pair<std::size_t, std::size_t> distinct_pair(std::size_t n) {
    std::size_t a = below(n), b = below(n - 1);
    if (b >= a) ++b;
    return {a, b};
  }
};

// Shared driver for conditions (i)-(vi). lrta switches the bar-twisted forms.
Report check_axioms(const Algebra& a, const DeltaMap& delta, const CheckOptions& opt, bool lrta) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  if (delta.dim() != n) throw ShapeError("delta map dimension differs from algebra dimension");
  if (lrta && !a.has_involution()) throw Error(ErrorKind::missing_structure, "LRTA check needs an involution");
  Report r(lrta ? "normal LRTA conditions" : "normal STA conditions");

  auto bad = delta.membership_violation(a, lrta);
  r.expect(!bad, "membership", bad ? tuple({(long long)bad->first, (long long)bad->second}) : nlohmann::json(),
           lrta ? "delta values in lrt" : "delta values in stri");

  auto exhaustive_for = [&](std::size_t limit) {
    if (opt.force_exhaustive) return true;
    if (opt.force_sampled) return false;
    return n <= limit;
  };
  auto finish = [&](const std::string& name, bool exhaustive, std::size_t cases, std::optional<std::size_t> fail,
                    const std::function<nlohmann::json(std::size_t)>& witness) {
    Check c;
    c.condition = name;
    c.mode = exhaustive ? CheckMode::exhaustive : CheckMode::sampled;
    if (!exhaustive) c.seed = opt.seed;
    c.cases = cases;
    c.pass = !fail;
    if (fail) c.witness = witness(*fail);
    r.add(std::move(c));
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);

  // Condition (i): [d_i(a,b), d_j(x,y)] = d_j(d_{i-j}(a,b)x, y) + d_j(x, d_{i-j}(a,b)y)
  {
    bool ex = exhaustive_for(opt.exhaustive_limit_first);
    std::vector<std::array<std::size_t, 4>> tuples;
    if (ex) {
      for (const auto& p : pairs)
        if (!delta.vanishes(p.first, p.second))
          for (const auto& q : pairs) tuples.push_back({p.first, p.second, q.first, q.second});
    } else if (n >= 2) {
      Sampler s(opt.seed);
      for (std::size_t k = 0; k < opt.samples; ++k) {
        auto [a0, b0] = s.distinct_pair(n);
        auto [x0, y0] = s.distinct_pair(n);
        tuples.push_back({a0, b0, x0, y0});
      }
    }
    std::vector<int> fail_ij(tuples.size(), -1);
    auto fail = find_first_failure(tuples.size(), [&](std::size_t k) {
      auto [ta, tb, tx, ty] = tuples[k];
      if (delta.vanishes(ta, tb)) return true;
      Triple dab = delta.at(ta, tb);
      Triple dxy = delta.at(tx, ty);
      SparseVec ex_ = a.basis(tx), ey = a.basis(ty);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Matrix lhs = commutator(dab[i], dxy[j]);
          const Matrix& m = dab[i - j];
          Matrix rhs = delta.eval_component(j, m.column(tx), ey) + delta.eval_component(j, ex_, m.column(ty));
          if (!(lhs == rhs)) {
            fail_ij[k] = i * 3 + j;
            return false;
          }
        }
      return true;
    });
    finish("i", ex, tuples.size(), fail, [&](std::size_t k) {
      auto [ta, tb, tx, ty] = tuples[k];
      return tuple({(long long)ta, (long long)tb, (long long)tx, (long long)ty, fail_ij[k] / 3, fail_ij[k] % 3});
    });
  }

  bool ex = exhaustive_for(opt.exhaustive_limit_rest);
  std::vector<std::array<std::size_t, 3>> triples;
  if (ex) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) triples.push_back({x, y, z});
  } else if (n >= 1) {
    Sampler s(opt.seed + 1);
    for (std::size_t k = 0; k < opt.samples; ++k) triples.push_back({s.below(n), s.below(n), s.below(n)});
  }
  auto triple_witness = [&](std::size_t k) {
    return tuple({(long long)triples[k][0], (long long)triples[k][1], (long long)triples[k][2]});
  };

  // Condition (ii)
  {
    auto fail = find_first_failure(triples.size(), [&](std::size_t k) {
      auto [x, y, z] = triples[k];
      SparseVec ex_ = a.basis(x), ey = a.basis(y), ez = a.basis(z);
      Matrix sum(n, n, f);
      if (lrta) {
        sum = delta.eval_component(0, a.bar(ex_), a.basis_product(y, z)) +
              delta.eval_component(1, a.bar(ey), a.basis_product(z, x)) +
              delta.eval_component(2, a.bar(ez), a.basis_product(x, y));
      } else {
        sum = delta.eval_component(0, ex_, a.basis_product(y, z)) + delta.eval_component(2, ey, a.basis_product(z, x)) +
              delta.eval_component(1, ez, a.basis_product(x, y));
      }
      return sum.is_zero();
    });
    finish("ii", ex, triples.size(), fail, triple_witness);
  }

  // Condition (iii): cyclic sum, alternating, so x<y<z suffices in exhaustive mode.
  {
    std::vector<std::array<std::size_t, 3>> t3;
    if (ex) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          for (std::size_t z = y + 1; z < n; ++z) t3.push_back({x, y, z});
    } else {
      t3 = triples;
    }
    auto fail = find_first_failure(t3.size(), [&](std::size_t k) {
      auto [x, y, z] = t3[k];
      SparseVec s = delta.apply(0, x, y, a.basis(z)) + delta.apply(0, y, z, a.basis(x)) + delta.apply(0, z, x, a.basis(y));
      return s.empty();
    });
    finish("iii", ex, t3.size(), fail, [&](std::size_t k) {
      return tuple({(long long)t3[k][0], (long long)t3[k][1], (long long)t3[k][2]});
    });
  }

  std::vector<std::pair<std::size_t, std::size_t>> plist;
  if (ex) {
    plist = pairs;
  } else if (n >= 2) {
    Sampler s(opt.seed + 2);
    for (std::size_t k = 0; k < opt.samples; ++k) plist.push_back(s.distinct_pair(n));
  }
  auto pair_witness = [&](std::size_t k) { return tuple({(long long)plist[k].first, (long long)plist[k].second}); };

  // Conditions (iv), (v)
  {
    auto fail4 = find_first_failure(plist.size(), [&](std::size_t k) {
      auto [x, y] = plist[k];
      Matrix expect;
      if (lrta) {
        SparseVec xb = a.bar(a.basis(x)), yb = a.bar(a.basis(y));
        expect = a.left(yb) * a.left_basis(x) - a.left(xb) * a.left_basis(y);
      } else {
        expect = a.right_basis(y) * a.left_basis(x) - a.right_basis(x) * a.left_basis(y);
      }
      return delta.component(1, x, y) == expect;
    });
    finish("iv", ex, plist.size(), fail4, pair_witness);
    auto fail5 = find_first_failure(plist.size(), [&](std::size_t k) {
      auto [x, y] = plist[k];
      Matrix expect;
      if (lrta) {
        SparseVec xb = a.bar(a.basis(x)), yb = a.bar(a.basis(y));
        expect = a.right(yb) * a.right_basis(x) - a.right(xb) * a.right_basis(y);
      } else {
        expect = a.left_basis(y) * a.right_basis(x) - a.left_basis(x) * a.right_basis(y);
      }
      return delta.component(2, x, y) == expect;
    });
    finish("v", ex, plist.size(), fail5, pair_witness);
  }

  // Condition (vi): bar(delta_i(x,y)) = delta_{-i}(xb, yb)
  if (lrta) {
    auto fail = find_first_failure(plist.size(), [&](std::size_t k) {
      auto [x, y] = plist[k];
      Triple t = delta.at(x, y);
      SparseVec xb = a.bar(a.basis(x)), yb = a.bar(a.basis(y));
      for (int i = 0; i < 3; ++i)
        if (!(a.bar_operator(t[i]) == delta.eval_component(-i, xb, yb))) return false;
      return true;
    });
    finish("vi", ex, plist.size(), fail, pair_witness);
  }
  return r;
}

}  // namespace

Report check_sta(const Algebra& a, const DeltaMap& delta, const CheckOptions& opt) {
  return check_axioms(a, delta, opt, false);
}

Report check_lrta(const Algebra& a, const DeltaMap& delta, const CheckOptions& opt) {
  return check_axioms(a, delta, opt, true);
}

SparseVec degree5_value(const Algebra& a, const SparseVec& x, const SparseVec& y, const SparseVec& z,
                        const SparseVec& u, const SparseVec& v) {
  auto m = [&](const SparseVec& p, const SparseVec& q) { return a.multiply(p, q); };
  SparseVec yz = m(y, z), xu = m(x, u), zx = m(z, x), uv = m(u, v), xy = m(x, y);
  SparseVec s = m(m(xu, yz), v);
  s = s - m(m(m(yz, u), x), v);
  s = s + m(u, m(yz, m(v, x)));
  s = s - m(u, m(x, m(v, yz)));
  s = s + m(zx, m(uv, y));
  s = s - m(y, m(uv, zx));
  s = s + m(m(z, uv), xy);
  s = s - m(m(xy, uv), z);
  return s;
}

Report check_degree5(const Algebra& a, std::size_t samples, std::uint64_t seed) {
  Report r("degree 5 identity");
  const std::size_t n = a.dim();
  auto witness = [](const std::array<std::size_t, 5>& t) {
    return tuple({(long long)t[0], (long long)t[1], (long long)t[2], (long long)t[3], (long long)t[4]});
  };
  auto run = [&](const std::vector<std::array<std::size_t, 5>>& tuples, const std::string& name, bool exhaustive) {
    auto fail = find_first_failure(tuples.size(), [&](std::size_t k) {
      const auto& t = tuples[k];
      return degree5_value(a, a.basis(t[0]), a.basis(t[1]), a.basis(t[2]), a.basis(t[3]), a.basis(t[4])).empty();
    });
    Check c;
    c.condition = name;
    c.mode = exhaustive ? CheckMode::exhaustive : CheckMode::sampled;
    if (!exhaustive) c.seed = seed;
    c.cases = tuples.size();
    c.pass = !fail;
    if (fail) c.witness = witness(tuples[*fail]);
    r.add(std::move(c));
  };
  if (n == 0) return r;
  if (n <= 4) {
    std::vector<std::array<std::size_t, 5>> all;
    std::size_t total = n * n * n * n * n;
    for (std::size_t k = 0; k < total; ++k) {
      std::size_t c = k;
      std::array<std::size_t, 5> t{};
      for (auto& x : t) {
        x = c % n;
        c /= n;
      }
      all.push_back(t);
    }
    run(all, "degree5", true);
  }
  std::vector<std::array<std::size_t, 5>> sample;
  Sampler s(seed);
  for (std::size_t k = 0; k < samples; ++k) sample.push_back({s.below(n), s.below(n), s.below(n), s.below(n), s.below(n)});
  run(sample, "degree5-sampled", false);
  return r;
}

DeltaMap derive_delta0(const Algebra& base, const DeltaMap& delta, bool lrta) {
  const Algebra a = lrta ? star_algebra(base) : base;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  // Pick basis products spanning A*A.
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  std::vector<SparseVec> products;
  {
    Echelon e(n, f);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (e.insert(a.basis_product(u, v))) {
          chosen.emplace_back(u, v);
          products.push_back(a.basis_product(u, v));
        }
  }
  if (products.size() < n)
    throw Error(ErrorKind::underdetermined, "A*A is a proper subspace (dim " + std::to_string(products.size()) + " < " +
                                                std::to_string(n) + "); delta_0 is not determined");
  BasisSolver solver(products, n, f);
  std::vector<SparseVec> unit_coords(n);
  for (std::size_t k = 0; k < n; ++k) unit_coords[k] = solver.solve(a.basis(k));

  return DeltaMap::from_function(f, n, [&](std::size_t x, std::size_t y) {
    const Triple& t = delta.stored(x, y);
    auto rhs = [&](std::size_t u, std::size_t v) {
      return a.multiply(t.d[1].column(u), a.basis(v)) + a.multiply(a.basis(u), t.d[2].column(v));
    };
    std::vector<SparseVec> images;
    for (const auto& [u, v] : chosen) images.push_back(rhs(u, v));
    std::vector<SparseVec> cols(n);
    for (std::size_t k = 0; k < n; ++k) {
      Accumulator acc(n, f);
      for (const auto& e : unit_coords[k]) acc.axpy(e.value, images[e.index]);
      cols[k] = acc.take();
    }
    Matrix d0 = Matrix::from_columns(cols, n, f);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (!(d0.apply(a.basis_product(u, v)) == rhs(u, v)))
          throw Error(ErrorKind::not_a_triple, "no delta_0 satisfies the triality relation for pair (" + std::to_string(x) +
                                                   "," + std::to_string(y) + ")");
    return Triple(std::move(d0), t.d[1], t.d[2]);
  });
}

}  // namespace s4lie
