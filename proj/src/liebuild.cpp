#include "s4lie/liebuild.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "s4lie/errors.hpp"
#include "s4lie/parallel.hpp"

namespace s4lie {

LieAlgebra::LieAlgebra(const Field& f, std::vector<Block> blocks, GradingKind kind, std::vector<SparseVec> table)
    : field_(f), blocks_(std::move(blocks)), kind_(kind), table_(std::move(table)) {
  n_ = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    offsets_.push_back(n_);
    for (std::size_t i = 0; i < blocks_[b].dim; ++i) block_of_.push_back(b);
    n_ += blocks_[b].dim;
  }
  if (table_.size() != n_ * n_) throw ShapeError("bracket table size does not match block dimensions");
  for (std::size_t i = 0; i < n_; ++i) {
    if (!table_[i * n_ + i].empty()) throw ShapeError("bracket has a nonzero diagonal entry at " + std::to_string(i));
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (table_[i * n_ + j].extent() > n_) throw ShapeError("bracket index out of range");
      if (!(table_[j * n_ + i] == -table_[i * n_ + j]))
        throw ShapeError("bracket not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  ad_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i)
    ad_.push_back(Matrix::from_columns(std::span<const SparseVec>(table_.data() + i * n_, n_), n_, field_));
}

LieAlgebra LieAlgebra::from_entries(const Field& f, std::vector<Block> blocks, GradingKind kind,
                                    std::span<const MulEntry> entries) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.dim;
  std::vector<std::vector<std::pair<Index, Scalar>>> raw(n * n);
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n || e.k >= n) throw ShapeError("bracket index out of range");
    if (e.i >= e.j) throw ShapeError("bracket entries must have i < j");
    raw[e.i * n + e.j].emplace_back(e.k, e.c);
  }
  std::vector<SparseVec> table(n * n);
  Accumulator acc(n, f);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (raw[p].empty()) continue;
    for (const auto& [k, c] : raw[p]) acc.add(k, c);
    table[p] = acc.take();
    table[(p % n) * n + p / n] = -table[p];
  }
  return LieAlgebra(f, std::move(blocks), kind, std::move(table));
}

std::size_t LieAlgebra::block_index(const std::string& label) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].label == label) return b;
  throw Error(ErrorKind::unknown_name, "no block labelled " + label);
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  Accumulator acc(n_, field_);
  for (const auto& ex : x)
    for (const auto& ey : y) {
      const SparseVec& p = bracket_basis(ex.index, ey.index);
      if (!p.empty()) acc.axpy(ex.value * ey.value, p);
    }
  return acc.take();
}

Matrix LieAlgebra::ad(const SparseVec& x) const {
  Matrix m(n_, n_, field_);
  for (const auto& e : x) m = m + ad_[e.index].scaled(e.value);
  return m;
}

std::vector<MulEntry> LieAlgebra::entries() const {
  std::vector<MulEntry> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (const auto& e : bracket_basis(i, j))
        out.push_back({static_cast<Index>(i), static_cast<Index>(j), e.index, e.value});
  return out;
}

LieAlgebra LieAlgebra::with_table(std::vector<SparseVec> table) const {
  return LieAlgebra(field_, blocks_, kind_, std::move(table));
}

const Matrix* GroupAction::find(const std::string& name) const {
  for (const auto& [k, m] : generators)
    if (k == name) return &m;
  return nullptr;
}

const Matrix& GroupAction::get(const std::string& name) const {
  if (const Matrix* m = find(name)) return *m;
  throw Error(ErrorKind::action_structure, "group action has no generator " + name);
}

namespace {

nlohmann::json tuple(std::initializer_list<std::size_t> v) { return nlohmann::json(std::vector<std::size_t>(v)); }

SparseVec triple_coordinates(const Subspace& t, const Triple& x) {
  auto c = t.coordinates(x.flatten());
  if (!c) throw Error(ErrorKind::construction, "bracket leaves the span of theta^i delta(A,A)");
  return *c;
}

Matrix block_sign(std::size_t m, std::size_t n, const Field& f, std::array<int, 3> sign) {
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < m; ++i) cols.push_back(SparseVec::unit(static_cast<Index>(i), f));
  for (int b = 0; b < 3; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      SparseVec e = SparseVec::unit(static_cast<Index>(m + b * n + a), f);
      cols.push_back(sign[b] > 0 ? e : -e);
    }
  return Matrix::from_columns(cols, m + 3 * n, f);
}

Construction build(const Algebra& a, const DeltaMap& delta, bool lrta, const BuildOptions& opt) {
  if (delta.dim() != a.dim()) throw ShapeError("delta map dimension differs from algebra dimension");
  if (lrta && !a.has_involution()) throw Error(ErrorKind::missing_structure, "LRTA construction needs an involution");
  if (!opt.force) {
    Report r = lrta ? check_lrta(a, delta, opt.check) : check_sta(a, delta, opt.check);
    for (const auto& c : r.checks())
      if (!c.pass)
        throw Error(ErrorKind::axiom, std::string(lrta ? "LRTA" : "STA") + " condition " + c.condition +
                                          " fails, witness " + c.witness.dump());
  }
  const Algebra p = lrta ? star_algebra(a) : a;
  const std::size_t n = a.dim();
  const Field& f = a.field();

  Echelon span(3 * n * n, f);
  for (const auto& v : delta.values())
    for (int i = 0; i < 3; ++i) span.insert(theta_power(v, i).flatten());
  Construction g;
  g.t = Subspace::from_echelon(span);
  g.algebra = a;
  g.delta = delta;
  g.lrta = lrta;
  const std::size_t m = g.t.dim(), N = m + 3 * n;

  std::vector<Triple> tm;
  for (const auto& v : g.t.basis()) tm.push_back(Triple::unflatten(v, n, f));

  std::vector<SparseVec> table(N * N);
  auto set = [&](std::size_t i, std::size_t j, SparseVec v) {
    table[j * N + i] = -v;
    table[i * N + j] = std::move(v);
  };
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) set(u, v, triple_coordinates(g.t, bracket(tm[u], tm[v])));
  for (std::size_t u = 0; u < m; ++u)
    for (int i = 0; i < 3; ++i) {
      Matrix tr = tm[u][i].transpose();
      for (std::size_t x = 0; x < n; ++x) set(u, g.iota(i, x), tr.row(x).shifted(static_cast<Index>(g.iota(i, 0))));
    }
  for (int i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        set(g.iota(i, x), g.iota(i + 1, y), p.basis_product(x, y).shifted(static_cast<Index>(g.iota(i + 2, 0))));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const Triple& d = delta.stored(x, y);
      if (d.is_zero()) continue;
      for (int i = 0; i < 3; ++i) set(g.iota(i, x), g.iota(i, y), triple_coordinates(g.t, theta_power(d, i)));
    }
  g.lie = LieAlgebra(f, {{"t", m, 0}, {"iota0", n, 2}, {"iota1", n, 1}, {"iota2", n, 3}}, GradingKind::klein,
                     std::move(table));

  g.action.group = lrta ? "S4" : "A4";
  g.action.generators.emplace_back("tau1", block_sign(m, n, f, {1, -1, -1}));
  g.action.generators.emplace_back("tau2", block_sign(m, n, f, {-1, 1, -1}));
  std::vector<SparseVec> phi;
  for (std::size_t u = 0; u < m; ++u) phi.push_back(triple_coordinates(g.t, theta(tm[u])));
  for (int i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x) phi.push_back(SparseVec::unit(static_cast<Index>(g.iota(i + 1, x)), f));
  g.action.generators.emplace_back("phi", Matrix::from_columns(phi, N, f));
  if (lrta) {
    std::vector<SparseVec> tau;
    for (std::size_t u = 0; u < m; ++u) {
      auto c = g.t.coordinates(xi(a, tm[u]).flatten());
      if (!c) throw Error(ErrorKind::construction, "xi does not preserve the span of theta^i delta(A,A)");
      tau.push_back(*c);
    }
    const Matrix& b = a.involution();
    for (int i = 0; i < 3; ++i) {
      int target = i == 0 ? 0 : 3 - i;
      for (std::size_t x = 0; x < n; ++x) tau.push_back(-b.column(x).shifted(static_cast<Index>(g.iota(target, 0))));
    }
    g.action.generators.emplace_back("tau", Matrix::from_columns(tau, N, f));
  }
  if (opt.verify) {
    Report r = verify_all(g.lie, g.action, opt.check.seed);
    for (const auto& c : r.checks())
      if (!c.pass) throw Error(ErrorKind::construction, "constructed algebra fails " + c.condition);
  }
  return g;
}

int combine(GradingKind kind, int a, int b) { return kind == GradingKind::klein ? (a ^ b) : a + b; }

}  // namespace

Construction construct_g_sta(const Algebra& a, const DeltaMap& delta, const BuildOptions& opt) {
  return build(a, delta, false, opt);
}

Construction construct_g_lrta(const Algebra& a, const DeltaMap& delta, const BuildOptions& opt) {
  return build(a, delta, true, opt);
}

Report verify_jacobi(const LieAlgebra& l, const JacobiMode& mode) {
  Report r("Jacobi identity");
  const std::size_t n = l.dim();
  // J(i,j,k) = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]; [v,e_k] = -ad_k v
  auto jacobi_zero = [&](std::size_t i, std::size_t j, std::size_t k) {
    SparseVec s = l.ad_basis(k).apply(l.bracket_basis(i, j)) + l.ad_basis(i).apply(l.bracket_basis(j, k)) +
                  l.ad_basis(j).apply(l.bracket_basis(k, i));
    return s.empty();
  };
  Check c;
  c.condition = "jacobi";
  if (mode.full) {
    c.mode = CheckMode::exhaustive;
    c.cases = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
    auto bad_i = find_first_failure(n, [&](std::size_t i) {
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (!jacobi_zero(i, j, k)) return false;
      return true;
    });
    if (bad_i) {
      c.pass = false;
      std::size_t i = *bad_i;
      for (std::size_t j = i + 1; j < n && c.witness.is_null(); ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (!jacobi_zero(i, j, k)) {
            c.witness = tuple({i, j, k});
            break;
          }
    }
  } else {
    c.mode = CheckMode::sampled;
    c.seed = mode.seed;
    c.cases = mode.samples;
    std::vector<std::array<std::size_t, 3>> tuples;
    if (n >= 3) {
      std::mt19937_64 rng(mode.seed);
      for (std::size_t s = 0; s < mode.samples; ++s) {
        std::size_t i, j, k;
        do {
          i = rng() % n;
          j = rng() % n;
          k = rng() % n;
        } while (i == j || j == k || i == k);
        tuples.push_back({i, j, k});
      }
    }
    auto bad = find_first_failure(tuples.size(), [&](std::size_t s) {
      return jacobi_zero(tuples[s][0], tuples[s][1], tuples[s][2]);
    });
    if (bad) {
      c.pass = false;
      c.witness = tuple({tuples[*bad][0], tuples[*bad][1], tuples[*bad][2]});
    }
  }
  r.add(std::move(c));
  return r;
}

Report verify_grading(const LieAlgebra& l) {
  Report r("grading");
  const std::size_t n = l.dim();
  nlohmann::json witness;
  for (std::size_t i = 0; i < n && witness.is_null(); ++i)
    for (std::size_t j = i + 1; j < n && witness.is_null(); ++j) {
      int g = combine(l.grading(), l.blocks()[l.block_of(i)].grade, l.blocks()[l.block_of(j)].grade);
      for (const auto& e : l.bracket_basis(i, j))
        if (l.blocks()[l.block_of(e.index)].grade != g) {
          witness = tuple({i, j, e.index});
          break;
        }
    }
  r.expect(witness.is_null(), "grading", witness);
  return r;
}

GroupAction klein_action(const LieAlgebra& l) {
  if (l.grading() != GradingKind::klein) throw Error(ErrorKind::grading, "klein action needs a klein grading");
  const std::size_t n = l.dim();
  const Field& f = l.field();
  Matrix t1(n, n, f), t2(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    const int g = l.blocks()[l.block_of(i)].grade;
    t1.set(i, i, f.integer(g & 1 ? -1 : 1));
    t2.set(i, i, f.integer(g & 2 ? -1 : 1));
  }
  return {"V4", {{"tau1", t1}, {"tau2", t2}}};
}

Check check_automorphism(const LieAlgebra& l, const Matrix& g, const std::string& name) {
  const std::size_t n = l.dim();
  if (g.rows() != n || g.cols() != n) throw ShapeError(name + " has the wrong shape");
  Matrix gt = g.transpose();
  auto ok = [&](std::size_t i, std::size_t j) { return g.apply(l.bracket_basis(i, j)) == l.bracket(gt.row(i), gt.row(j)); };
  auto bad = find_first_failure(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (!ok(i, j)) return false;
    return true;
  });
  Check c;
  c.condition = "automorphism " + name;
  c.cases = n * (n - 1) / 2;
  c.pass = !bad;
  if (bad)
    for (std::size_t j = *bad + 1; j < n; ++j)
      if (!ok(*bad, j)) {
        c.witness = tuple({*bad, j});
        break;
      }
  return c;
}

Report verify_group_action(const LieAlgebra& l, const GroupAction& action) {
  Report r("group action " + action.group);
  const std::size_t n = l.dim();
  const Field& f = l.field();
  const bool s4 = action.group == "S4", v4 = action.group == "V4";
  if (action.group != "A4" && !s4 && !v4) throw Error(ErrorKind::action_structure, "unknown group " + action.group);
  std::vector<std::string> names = {"tau1", "tau2"};
  if (!v4) names.push_back("phi");
  if (s4) names.push_back("tau");
  for (const auto& name : names) {
    const Matrix* g = action.find(name);
    if (!g) {
      r.fail("generator " + name, nullptr, "missing");
      continue;
    }
    if (g->rows() != n || g->cols() != n) throw ShapeError("generator " + name + " has the wrong shape");
    r.add(check_automorphism(l, *g, name));
  }
  for (const auto& name : names)
    if (!action.find(name)) return r;
  const Matrix id = Matrix::identity(n, f);
  const Matrix &t1 = action.get("tau1"), &t2 = action.get("tau2");
  auto rel = [&](const std::string& word, const Matrix& lhs, const Matrix& rhs) {
    r.expect(lhs == rhs, "relation " + word, word);
  };
  rel("tau1^2 = 1", t1 * t1, id);
  rel("tau2^2 = 1", t2 * t2, id);
  rel("tau1 tau2 = tau2 tau1", t1 * t2, t2 * t1);
  if (v4) return r;
  const Matrix& phi = action.get("phi");
  rel("phi^3 = 1", phi * phi * phi, id);
  rel("phi tau1 = tau2 phi", phi * t1, t2 * phi);
  rel("phi tau2 = tau1 tau2 phi", phi * t2, t1 * t2 * phi);
  if (s4) {
    const Matrix& tau = action.get("tau");
    rel("tau^2 = 1", tau * tau, id);
    rel("tau1 tau = tau tau1", t1 * tau, tau * t1);
    rel("tau2 tau = tau tau2 tau1", t2 * tau, tau * t2 * t1);
    rel("tau phi = phi^2 tau", tau * phi, phi * phi * tau);
  }
  return r;
}

Report verify_all(const LieAlgebra& l, const GroupAction& action, std::uint64_t seed) {
  Report r("Lie algebra checks");
  r.merge(verify_jacobi(l, JacobiMode::automatic(l.dim(), seed)));
  r.merge(verify_grading(l));
  r.merge(verify_group_action(l, action));
  return r;
}

namespace {

Subspace joint_eigenspace(const Matrix& a, const Matrix& b, int sa, int sb) {
  const std::size_t n = a.rows();
  const Field& f = a.field();
  Matrix ma = a - Matrix::identity(n, f).scaled(f.integer(sa));
  Matrix mb = b - Matrix::identity(n, f).scaled(f.integer(sb));
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(ma.row(i));
    rows.push_back(mb.row(i));
  }
  return kernel_of_equations(rows, n, f);
}

}  // namespace

Extracted extract_coordinate_algebra(const LieAlgebra& l, const GroupAction& action) {
  const std::size_t N = l.dim();
  const Field& f = l.field();
  const Matrix &t1 = action.get("tau1"), &t2 = action.get("tau2"), &phi = action.get("phi");
  for (const Matrix* m : {&t1, &t2, &phi})
    if (m->rows() != N || m->cols() != N) throw ShapeError("generator shape differs from algebra dimension");
  Subspace t = joint_eigenspace(t1, t2, 1, 1);
  Subspace g0 = joint_eigenspace(t1, t2, 1, -1);
  Subspace g1 = joint_eigenspace(t1, t2, -1, 1);
  Subspace g2 = joint_eigenspace(t1, t2, -1, -1);
  const std::size_t n = g0.dim();
  if (g1.dim() != n || g2.dim() != n || t.dim() + 3 * n != N)
    throw Error(ErrorKind::action_structure,
                "eigenspace dimensions " + std::to_string(t.dim()) + "," + std::to_string(g0.dim()) + "," +
                    std::to_string(g1.dim()) + "," + std::to_string(g2.dim()) + " do not fit phi shifting blocks");
  std::array<std::vector<SparseVec>, 3> iota;
  iota[0] = g0.basis();
  for (const auto& b : iota[0]) {
    iota[1].push_back(phi.apply(b));
    iota[2].push_back(phi.apply(iota[1].back()));
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!g1.contains(iota[1][a]) || !g2.contains(iota[2][a]))
      throw Error(ErrorKind::action_structure, "phi does not map g0 to g1 to g2");
  std::array<BasisSolver, 3> solve = {BasisSolver(iota[0], N, f), BasisSolver(iota[1], N, f),
                                      BasisSolver(iota[2], N, f)};
  auto coords = [&](int i, const SparseVec& v, const char* what) {
    auto c = solve[i].coordinates(v);
    if (!c) throw Error(ErrorKind::grading, std::string(what) + " lands outside its graded block");
    return *c;
  };
  std::vector<SparseVec> star(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) star[x * n + y] = coords(0, l.bracket(iota[1][x], iota[2][y]), "[iota1 x, iota2 y]");

  Extracted out;
  std::optional<Matrix> bar;
  if (const Matrix* tau = action.find("tau")) {
    std::vector<SparseVec> cols;
    for (std::size_t x = 0; x < n; ++x) cols.push_back(-coords(0, tau->apply(iota[0][x]), "tau(iota0 x)"));
    bar = Matrix::from_columns(cols, n, f);
    out.lrta = true;
    for (auto& v : star) v = bar->apply(v);
  }
  out.algebra = Algebra::from_table(f, n, std::move(star), bar);
  if (bar)
    if (auto v = involution_violation(out.algebra)) throw Error(ErrorKind::invalid_involution, *v);

  std::vector<Triple> values;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      SparseVec d = l.bracket(iota[0][x], iota[0][y]);
      if (!t.contains(d)) throw Error(ErrorKind::grading, "[iota0 x, iota0 y] lands outside t");
      Triple tr;
      for (int i = 0; i < 3; ++i) {
        std::vector<SparseVec> cols;
        for (std::size_t c = 0; c < n; ++c) cols.push_back(coords(i, l.bracket(d, iota[i][c]), "[t, iota_i x]"));
        tr[i] = Matrix::from_columns(cols, n, f);
      }
      values.push_back(std::move(tr));
    }
  out.delta = DeltaMap::verified(out.algebra, DeltaMap::unchecked(f, n, std::move(values)), out.lrta);
  return out;
}

Matrix killing_form(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  const Field& f = l.field();
  // kappa(i,j) = sum_{l,k} c_{il}^k c_{jk}^l; index c_{jk}^l by (k,l).
  std::vector<std::vector<std::pair<Index, Scalar>>> by_kl(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& e : l.bracket_basis(j, k)) by_kl[k * n + e.index].emplace_back(static_cast<Index>(j), e.value);
  std::vector<SparseVec> rows(n);
  parallel_for(n, [&](std::size_t i) {
    Accumulator acc(n, f);
    for (std::size_t m = 0; m < n; ++m)
      for (const auto& e : l.bracket_basis(i, m))
        for (const auto& [j, c] : by_kl[e.index * n + m]) acc.add_product(j, e.value, c);
    rows[i] = acc.take();
  });
  return Matrix::from_rows(std::move(rows), n, f);
}

const char* verdict_name(SimpleVerdict v) {
  switch (v) {
    case SimpleVerdict::simple: return "simple";
    case SimpleVerdict::invariant_ideal: return "invariant_ideal";
    case SimpleVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

struct Spin {
  Echelon span;
  std::vector<SparseVec> vectors;
  std::vector<std::pair<std::size_t, std::size_t>> word;  // (parent, operator) per accepted vector
  Spin(std::size_t n, const Field& f) : span(n, f, true) {}
};

// Smallest subspace containing v and stable under every operator.
Spin spin(const SparseVec& v, const std::vector<const Matrix*>& ops, std::size_t n, const Field& f) {
  Spin s(n, f);
  if (!s.span.insert(v)) return s;
  s.vectors.push_back(v);
  s.word.emplace_back(0, ops.size());
  for (std::size_t k = 0; k < s.vectors.size() && s.span.rank() < n; ++k)
    for (std::size_t o = 0; o < ops.size() && s.span.rank() < n; ++o) {
      SparseVec u = ops[o]->apply(s.vectors[k]);
      if (u.empty()) continue;
      if (s.span.insert(u)) {
        s.vectors.push_back(std::move(u));
        s.word.emplace_back(k, o);
      }
    }
  return s;
}

// Rational roots of a polynomial with rational coefficients (low degree first).
std::vector<mpq_class> rational_roots(std::vector<mpq_class> c) {
  std::vector<mpq_class> roots;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.size() < 2) return roots;
  std::size_t shift = 0;
  while (sgn(c[shift]) == 0) ++shift;
  if (shift) roots.push_back(0);
  c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  if (c.size() < 2) return roots;
  mpz_class lcm = 1;
  for (const auto& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& q : c) z.push_back(mpz_class(q * lcm));
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> d;
    v = abs(v);
    if (v > 100000) return d;
    for (mpz_class i = 1; i <= v; ++i)
      if (v % i == 0) d.push_back(i);
    return d;
  };
  for (const auto& p : divisors(z.front()))
    for (const auto& q : divisors(z.back()))
      for (int s : {1, -1}) {
        mpq_class r(s * p, q);
        r.canonicalize();
        mpq_class val = 0, pw = 1;
        for (const auto& co : z) {
          val += co * pw;
          pw *= r;
        }
        if (sgn(val) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  return roots;
}

}  // namespace

SimplicityResult is_simple_with_action(const LieAlgebra& l, const GroupAction& action, std::uint64_t seed) {
  SimplicityResult res;
  const std::size_t n = l.dim();
  const Field& f = l.field();
  if (n == 0) {
    res.detail = "zero algebra";
    return res;
  }
  std::vector<const Matrix*> ops;
  for (std::size_t i = 0; i < n; ++i) ops.push_back(&l.ad_basis(i));
  for (const auto& [name, m] : action.generators) ops.push_back(&m);
  res.killing_nondegenerate = rank(killing_form(l)) == n;

  // Candidate cyclic vectors, each inside a joint eigenspace of tau1, tau2 when available.
  std::vector<std::pair<SparseVec, Subspace>> candidates;
  const Matrix* t1 = action.find("tau1");
  const Matrix* t2 = action.find("tau2");
  if (t1 && t2) {
    for (auto [sa, sb] : {std::pair{1, -1}, {-1, 1}, {-1, -1}, {1, 1}}) {
      Subspace e = joint_eigenspace(*t1, *t2, sa, sb);
      for (const auto& b : e.basis()) candidates.emplace_back(b, e);
    }
  } else {
    Subspace full = Subspace::full(n, f);
    for (std::size_t i = 0; i < n; ++i) candidates.emplace_back(l.basis(i), full);
  }
  std::mt19937_64 rng(seed);
  {
    Subspace full = Subspace::full(n, f);
    for (int r = 0; r < 4; ++r) {
      Accumulator acc(n, f);
      for (std::size_t i = 0; i < n; ++i) acc.add(static_cast<Index>(i), f.integer(static_cast<long>(rng() % 7) - 3));
      SparseVec v = acc.take();
      if (!v.empty()) candidates.emplace_back(v, full);
    }
  }

  std::optional<std::size_t> cyclic;
  std::optional<Spin> cyc_spin;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Spin s = spin(candidates[c].first, ops, n, f);
    if (s.span.rank() < n) {
      res.verdict = SimpleVerdict::invariant_ideal;
      res.ideal = Subspace::from_echelon(s.span);
      res.detail = "closure of a probe vector is a proper invariant ideal";
      return res;
    }
    if (!cyclic) {
      cyclic = c;
      cyc_spin = std::move(s);
    }
    if (res.killing_nondegenerate) break;
  }
  if (!res.killing_nondegenerate) {
    res.detail = "Killing form degenerate and every probe generates the whole algebra";
    return res;
  }

  // Fixed centroid: C commutes with all ad and generators, so it is fixed by w = C(v) in
  // the eigenspace E of v. C(p_k) = M_k w along the spinning words.
  const Subspace& E = candidates[*cyclic].second;
  const Spin& s = *cyc_spin;
  const std::size_t d = E.dim();
  std::vector<Matrix> M;
  M.reserve(n);
  M.push_back(Matrix::from_columns(E.basis(), n, f));
  for (std::size_t k = 1; k < s.vectors.size(); ++k) M.push_back(*ops[s.word[k].second] * M[s.word[k].first]);
  Echelon eqs(d, f);
  for (std::size_t k = 0; k < n && eqs.rank() + 1 < d; ++k)
    for (std::size_t o = 0; o < ops.size() && eqs.rank() + 1 < d; ++o) {
      SparseVec u = ops[o]->apply(s.vectors[k]);
      Matrix lhs = *ops[o] * M[k];
      if (!u.empty()) {
        SparseVec c = *s.span.coordinates(u);
        for (const auto& e : c) lhs = lhs - M[e.index].scaled(e.value);
      }
      for (std::size_t r = 0; r < n; ++r)
        if (!lhs.row(r).empty()) eqs.insert(lhs.row(r));
    }
  Subspace cent = kernel_of_equations(eqs);
  res.centroid_dim = cent.dim();
  if (cent.dim() == 1) {
    res.verdict = SimpleVerdict::simple;
    res.detail = "fixed centroid is one-dimensional";
    return res;
  }

  // Build a non-scalar centroid element and split along a rational eigenvalue.
  BasisSolver pb(s.vectors, n, f);
  for (const auto& w : cent.basis()) {
    std::vector<SparseVec> cols(n);
    for (std::size_t j = 0; j < n; ++j) {
      SparseVec cj = pb.solve(l.basis(j));
      Accumulator acc(n, f);
      for (const auto& e : cj) acc.axpy(e.value, M[e.index].apply(w));
      cols[j] = acc.take();
    }
    Matrix C = Matrix::from_columns(cols, n, f);
    bool scalar = true;
    Scalar c00 = C.at(0, 0);
    if (!(C == Matrix::identity(n, f).scaled(c00))) scalar = false;
    if (scalar) continue;
    // minimal polynomial
    Echelon pow(n * n, f, true);
    std::vector<Matrix> powers = {Matrix::identity(n, f)};
    std::vector<mpq_class> coeffs;
    bool rational = true;
    for (std::size_t k = 0; k <= d; ++k) {
      if (k > 0) powers.push_back(powers.back() * C);
      auto c = pow.coordinates(powers.back().flatten());
      if (c) {
        coeffs.assign(k + 1, 0);
        coeffs[k] = 1;
        for (const auto& e : *c) {
          if (!e.value.is_rational()) rational = false;
          coeffs[e.index] = -e.value.rational_part();
        }
        break;
      }
      pow.insert(powers.back().flatten());
    }
    if (!rational || coeffs.empty()) continue;
    for (const auto& root : rational_roots(coeffs)) {
      Matrix shifted = C - Matrix::identity(n, f).scaled(f.make(root));
      Subspace ideal = kernel(shifted);
      if (ideal.dim() > 0 && ideal.dim() < n) {
        res.verdict = SimpleVerdict::invariant_ideal;
        res.ideal = ideal;
        res.detail = "eigenspace of a fixed centroid element";
        return res;
      }
    }
  }
  res.detail = "fixed centroid has dimension " + std::to_string(cent.dim()) + " without a rational splitting";
  return res;
}

Report steinberg_relations_check(const Construction& g) {
  Report r("Steinberg relations");
  if (!g.lrta) throw Error(ErrorKind::precondition, "Steinberg check needs an LRTA construction");
  const Algebra& a = g.algebra;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const LieAlgebra& l = g.lie;
  const Matrix& b = a.involution();
  // u_ij(x) for the cyclic pairs is -iota_k(x); reversed pairs use u_ji(x) = u_ij(-xbar).
  auto block = [&](int i, const SparseVec& x) { return x.shifted(static_cast<Index>(g.iota(i, 0))); };
  auto u = [&](int i, int j, const SparseVec& x) -> SparseVec {
    if (i == 1 && j == 2) return -block(0, x);
    if (i == 2 && j == 3) return -block(1, x);
    if (i == 3 && j == 1) return -block(2, x);
    if (i == 2 && j == 1) return block(0, b.apply(x));
    if (i == 3 && j == 2) return block(1, b.apply(x));
    return block(2, b.apply(x));  // u13
  };
  nlohmann::json witness;
  std::size_t cases = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        if (i == j || j == k || i == k) continue;
        for (std::size_t x = 0; x < n && witness.is_null(); ++x)
          for (std::size_t y = 0; y < n; ++y) {
            ++cases;
            SparseVec lhs = l.bracket(u(i, j, a.basis(x)), u(j, k, a.basis(y)));
            if (!(lhs == u(i, k, a.basis_product(x, y)))) {
              witness = {i, j, k, x, y};
              break;
            }
          }
      }
  Check c;
  c.condition = "[u_ij(a), u_jk(b)] = u_ik(ab)";
  c.cases = cases;
  c.pass = witness.is_null();
  c.witness = witness;
  r.add(std::move(c));

  // Action on generators' images (the phi row maps u31 to u12).
  struct Rule {
    const char* gen;
    int from_i, from_j, to_i, to_j, sign;
    bool bar;
  };
  const Rule rules[] = {
      {"tau1", 1, 2, 1, 2, 1, false},  {"tau1", 2, 3, 2, 3, -1, false}, {"tau1", 3, 1, 3, 1, -1, false},
      {"tau2", 1, 2, 1, 2, -1, false}, {"tau2", 2, 3, 2, 3, 1, false},  {"tau2", 3, 1, 3, 1, -1, false},
      {"phi", 1, 2, 2, 3, 1, false},   {"phi", 2, 3, 3, 1, 1, false},   {"phi", 3, 1, 1, 2, 1, false},
      {"tau", 1, 2, 1, 2, -1, true},   {"tau", 2, 3, 3, 1, -1, true},   {"tau", 3, 1, 2, 3, -1, true},
  };
  for (const auto& rule : rules) {
    const Matrix& m = g.action.get(rule.gen);
    nlohmann::json w;
    for (std::size_t x = 0; x < n; ++x) {
      SparseVec img = m.apply(u(rule.from_i, rule.from_j, a.basis(x)));
      SparseVec arg = rule.bar ? b.apply(a.basis(x)) : a.basis(x);
      SparseVec expect = u(rule.to_i, rule.to_j, arg);
      if (rule.sign < 0) expect = -expect;
      if (!(img == expect)) {
        w = {x};
        break;
      }
    }
    std::string name = std::string(rule.gen) + " on u" + std::to_string(rule.from_i) + std::to_string(rule.from_j);
    r.expect(w.is_null(), name, w);
  }
  (void)f;
  return r;
}

Report rho_compatibility_check(const Construction& g) {
  Report r("rho compatibility");
  const std::size_t n = g.algebra.dim(), m = g.t_dim();
  const Field& f = g.algebra.field();
  const Matrix& phi = g.action.get("phi");
  nlohmann::json witness;
  // action of t-vector v on block i as an n x n matrix
  auto act = [&](const SparseVec& v, int i) {
    std::vector<SparseVec> cols;
    for (std::size_t x = 0; x < n; ++x) {
      SparseVec img = g.lie.bracket(v, g.lie.basis(g.iota(i, x)));
      SparseVec local;
      for (const auto& e : img) local.push_back(static_cast<Index>(e.index - g.iota(i, 0)), e.value);
      cols.push_back(std::move(local));
    }
    return Matrix::from_columns(cols, n, f);
  };
  for (std::size_t p = 0; p < m && witness.is_null(); ++p) {
    SparseVec d = g.lie.basis(p), pd = phi.apply(d);
    for (int i = 0; i < 3; ++i)
      if (!(act(pd, i + 1) == act(d, i))) {
        witness = {p, i};
        break;
      }
  }
  r.expect(witness.is_null(), "rho_{i+1}(phi d) = rho_i(d)", witness);
  return r;
}


Report check_lie_isomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& psi,
                             const GroupAction* src_action, const GroupAction* dst_action) {
  Report r("Lie isomorphism");
  const std::size_t n = src.dim();
  if (psi.cols() != n || psi.rows() != dst.dim()) throw ShapeError("isomorphism matrix has the wrong shape");
  const std::size_t rk = rank(psi);
  r.expect(rk == n && n == dst.dim(), "bijective",
           nlohmann::json{{"rank", rk}, {"source_dim", n}, {"target_dim", dst.dim()}});
  Matrix pt = psi.transpose();
  auto ok = [&](std::size_t i, std::size_t j) {
    return psi.apply(src.bracket_basis(i, j)) == dst.bracket(pt.row(i), pt.row(j));
  };
  auto bad = find_first_failure(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (!ok(i, j)) return false;
    return true;
  });
  nlohmann::json w;
  if (bad)
    for (std::size_t j = *bad + 1; j < n; ++j)
      if (!ok(*bad, j)) {
        w = tuple({*bad, j});
        break;
      }
  Check c;
  c.condition = "bracket preserved";
  c.cases = n * (n - 1) / 2;
  c.pass = !bad;
  c.witness = w;
  r.add(std::move(c));
  if (src_action && dst_action)
    for (const auto& [name, g] : src_action->generators) {
      const Matrix* h = dst_action->find(name);
      if (!h) {
        r.fail("equivariant " + name, name, "generator missing on the target");
        continue;
      }
      r.expect(psi * g == *h * psi, "equivariant " + name, name);
    }
  return r;
}

}  // namespace s4lie
