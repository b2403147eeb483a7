#include "s4lie/kantor.hpp"

#include "s4lie/errors.hpp"
#include "s4lie/parallel.hpp"

namespace s4lie {

namespace {

nlohmann::json pair_witness(std::size_t a, std::size_t b) { return nlohmann::json::array({a, b}); }

SparseVec unshift(const SparseVec& v, std::size_t offset, std::size_t len) {
  SparseVec out;
  for (const auto& e : v) {
    if (e.index < offset || e.index >= offset + len)
      throw Error(ErrorKind::grading, "vector has components outside the expected block");
    out.push_back(static_cast<Index>(e.index - offset), e.value);
  }
  return out;
}

SparseVec coords_in(const Subspace& s, const SparseVec& v, const char* what) {
  auto c = s.coordinates(v);
  if (!c) throw Error(ErrorKind::construction, std::string(what) + " leaves its subspace");
  return *c;
}

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

bool same_space(const Subspace& a, const Subspace& b) { return a.dim() == b.dim() && a.contains(b); }

Subspace triple_span(const std::vector<Triple>& ts, std::size_t n, const Field& f) {
  std::vector<SparseVec> flat;
  for (const auto& t : ts) flat.push_back(t.flatten());
  return Subspace::span(flat, 3 * n * n, f);
}

Subspace diagonal_triples(const Subspace& d, std::size_t n, const Field& f) {
  std::vector<Triple> ts;
  for (const auto& v : d.basis()) ts.push_back(Triple::diagonal(Matrix::unflatten(v, n, n, f)));
  return triple_span(ts, n, f);
}

SparseVec require_unit(const Algebra& a) {
  auto one = unit_element(a);
  if (!one) throw Error(ErrorKind::precondition, "algebra has no unit");
  return *one;
}

void require_involution(const Algebra& a) {
  if (!a.has_involution()) throw Error(ErrorKind::missing_structure, "algebra has no involution");
}

// Structure constants of l in the basis given by the columns.
LieAlgebra change_basis(const LieAlgebra& l, const std::vector<SparseVec>& basis, std::vector<Block> blocks,
                        GradingKind kind, const BasisSolver& solve) {
  const std::size_t n = basis.size();
  std::vector<SparseVec> table(n * n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) table[i * n + j] = solve.solve(l.bracket(basis[i], basis[j]));
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) table[j * n + i] = -table[i * n + j];
  return LieAlgebra(l.field(), std::move(blocks), kind, std::move(table));
}

Matrix conjugate(const Matrix& g, const std::vector<SparseVec>& basis, const BasisSolver& solve) {
  std::vector<SparseVec> cols;
  for (const auto& b : basis) cols.push_back(solve.solve(g.apply(b)));
  return Matrix::from_columns(cols, basis.size(), g.field());
}

}  // namespace

Matrix V_operator(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  require_involution(a);
  const SparseVec xb = a.bar(x), yb = a.bar(y);
  return a.left(a.multiply(x, yb)) + a.right(x) * a.right(yb) - a.right(y) * a.right(xb);
}

Matrix T_operator(const Algebra& a, const SparseVec& x) { return V_operator(a, x, require_unit(a)); }

Subspace derivation_choice(const Algebra& a, DerivationChoice c) {
  require_involution(a);
  const std::size_t n = a.dim();
  if (c == DerivationChoice::full) return derivation_algebra(a, true);
  Echelon e(n * n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e.insert(inner_derivation(a, a.basis(i), a.basis(j)).flatten());
  return Subspace::from_echelon(e);
}

Triple ts_triple(const Algebra& a, const SparseVec& s0, const SparseVec& s1, const SparseVec& s2) {
  return Triple(a.left(s1) - a.right(s2), a.left(s2) - a.right(s0), a.left(s0) - a.right(s1));
}

Subspace ts_space(const Algebra& a) {
  require_involution(a);
  std::vector<Triple> ts;
  const Subspace skew = skew_elements(a);
  for (const auto& s : skew.basis()) {
    ts.push_back(ts_triple(a, -s, s, SparseVec{}));
    ts.push_back(ts_triple(a, -s, SparseVec{}, s));
  }
  return triple_span(ts, a.dim(), a.field());
}

Subspace l_space(const Algebra& a, const Subspace& d) {
  return diagonal_triples(d, a.dim(), a.field()).sum(ts_space(a));
}

Subspace inlrt_space(const Algebra& a) {
  require_involution(a);
  const std::size_t n = a.dim();
  std::vector<Triple> ts;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      Triple d = delta_structurable(a, a.basis(x), a.basis(y));
      for (int i = 0; i < 3; ++i) ts.push_back(theta_power(d, i));
    }
  return triple_span(ts, n, a.field());
}

SparseVec KantorAlgebra::in_k1(const SparseVec& x, bool tilde) const {
  return x.shifted(static_cast<Index>(offset(tilde ? -1 : 1)));
}

SparseVec KantorAlgebra::in_k2(const SparseVec& s, bool tilde) const {
  return coords_in(skew, s, "skew element").shifted(static_cast<Index>(offset(tilde ? -2 : 2)));
}

SparseVec KantorAlgebra::in_k0(const Matrix& f) const {
  return coords_in(k0, f.flatten(), "operator").shifted(static_cast<Index>(offset(0)));
}

Matrix KantorAlgebra::k0_operator(std::size_t u) const {
  const std::size_t n = algebra.dim();
  return Matrix::unflatten(k0.basis()[u], n, n, algebra.field());
}

Matrix KantorAlgebra::operator_of(const SparseVec& v) const {
  const std::size_t n = algebra.dim();
  return Matrix::unflatten(k0.combine(unshift(v, offset(0), k0.dim())), n, n, algebra.field());
}

Matrix KantorAlgebra::sigma(const Scalar& beta) const {
  const Field& f = lie.field();
  Matrix m(lie.dim(), lie.dim(), f);
  for (std::size_t i = 0; i < lie.dim(); ++i) {
    const int deg = lie.blocks()[lie.block_of(i)].grade;
    Scalar c = f.one();
    for (int k = 0; k < (deg < 0 ? -deg : deg); ++k) c *= beta;
    m.set(i, i, deg < 0 ? c.inverse() : c);
  }
  return m;
}

SparseVec KantorAlgebra::epsilon(int i, const SparseVec& x) const {
  const Field& f = algebra.field();
  const Scalar ainv = alpha.inverse();
  const SparseVec xb = algebra.bar(x);
  switch (mod3(i)) {
    case 1: return in_k1(x, false) + in_k1(x, true).scaled(ainv);
    case 2: return in_k1(xb, false).scaled(alpha) - in_k1(xb, true);
    default: {
      const SparseVec s = x - xb;
      SparseVec v = in_k2(s, false).scaled(alpha) - in_k2(s, true).scaled(ainv);
      return (in_k0(T_operator(algebra, x + xb)) + v).scaled(f.rational(1, 2));
    }
  }
}

Subspace KantorAlgebra::block(int s1, int s2) const { return joint_eigenspace(tau1, tau2, s1, s2); }

KantorAlgebra kantor_build(const Algebra& a, const Subspace& d, const Scalar& alpha) {
  require_involution(a);
  const std::size_t n = a.dim();
  const Field& f = a.field();
  if (alpha.field() != f) throw ContextError("alpha over another field");
  if (alpha.is_zero()) throw Error(ErrorKind::precondition, "alpha must be nonzero");
  if (d.ambient() != n * n || d.field() != f) throw ShapeError("derivation subspace has the wrong ambient space");
  if (!d.contains(derivation_choice(a, DerivationChoice::inner)))
    throw Error(ErrorKind::containment, "d does not contain inder(A)");
  if (!derivation_choice(a, DerivationChoice::full).contains(d))
    throw Error(ErrorKind::containment, "d is not inside der(A)");

  KantorAlgebra k;
  k.algebra = a;
  k.d = d;
  k.alpha = alpha;
  k.one = require_unit(a);
  k.skew = skew_elements(a);
  std::vector<SparseVec> ops = d.basis();
  for (std::size_t i = 0; i < n; ++i) ops.push_back(T_operator(a, a.basis(i)).flatten());
  k.k0 = Subspace::span(ops, n * n, f);

  const std::size_t ms = k.skew.dim(), m0 = k.k0.dim();
  const std::size_t om2 = 0, om1 = ms, o0 = ms + n, o1 = ms + n + m0, o2 = ms + 2 * n + m0;
  const std::size_t N = 2 * ms + 2 * n + m0;
  std::vector<SparseVec> table(N * N);
  auto set = [&](std::size_t i, std::size_t j, SparseVec v) {
    table[j * N + i] = -v;
    table[i * N + j] = std::move(v);
  };
  auto sh = [](const SparseVec& v, std::size_t off) { return v.shifted(static_cast<Index>(off)); };
  auto k0c = [&](const Matrix& m) { return coords_in(k.k0, m.flatten(), "K0 bracket"); };
  auto sc = [&](const SparseVec& v) { return coords_in(k.skew, v, "skew part"); };

  std::vector<Matrix> F(m0), Fe(m0);
  for (std::size_t u = 0; u < m0; ++u) {
    F[u] = k.k0_operator(u);
    const SparseVec f1 = F[u].apply(k.one);
    Fe[u] = F[u] - T_operator(a, f1 + a.bar(f1));
  }
  // f^delta(s) = f(s) + s bar(f(1))
  auto fdelta = [&](const Matrix& g, const SparseVec& s) { return g.apply(s) + a.multiply(s, a.bar(g.apply(k.one))); };
  const auto& S = k.skew.basis();

  for (std::size_t u = 0; u < m0; ++u) {
    for (std::size_t v = u + 1; v < m0; ++v) set(o0 + u, o0 + v, sh(k0c(commutator(F[u], F[v])), o0));
    for (std::size_t x = 0; x < n; ++x) {
      set(o0 + u, o1 + x, sh(F[u].column(x), o1));
      set(o0 + u, om1 + x, sh(Fe[u].column(x), om1));
    }
    for (std::size_t s = 0; s < ms; ++s) {
      set(o0 + u, o2 + s, sh(sc(fdelta(F[u], S[s])), o2));
      set(o0 + u, om2 + s, sh(sc(fdelta(Fe[u], S[s])), om2));
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const SparseVec ex = a.basis(x), ey = a.basis(y);
      const SparseVec w = sc(a.multiply(ex, a.bar(ey)) - a.multiply(ey, a.bar(ex)));
      set(o1 + x, o1 + y, sh(w, o2));
      set(om1 + x, om1 + y, sh(w, om2));
    }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) set(o1 + x, om1 + y, sh(k0c(V_operator(a, a.basis(x), a.basis(y))), o0));
    for (std::size_t s = 0; s < ms; ++s) {
      set(o1 + x, om2 + s, sh(-a.multiply(S[s], a.basis(x)), om1));
      set(o2 + s, om1 + x, sh(a.multiply(S[s], a.basis(x)), o1));
    }
  }
  for (std::size_t r = 0; r < ms; ++r)
    for (std::size_t s = 0; s < ms; ++s) set(o2 + r, om2 + s, sh(k0c(a.left(S[r]) * a.left(S[s])), o0));

  k.lie = LieAlgebra(f, {{"K-2", ms, -2}, {"K-1", n, -1}, {"K0", m0, 0}, {"K1", n, 1}, {"K2", ms, 2}},
                     GradingKind::integer, std::move(table));

  std::vector<SparseVec> cols(N);
  for (std::size_t s = 0; s < ms; ++s) {
    cols[om2 + s] = SparseVec::unit(static_cast<Index>(o2 + s), f);
    cols[o2 + s] = SparseVec::unit(static_cast<Index>(om2 + s), f);
  }
  for (std::size_t x = 0; x < n; ++x) {
    cols[om1 + x] = SparseVec::unit(static_cast<Index>(o1 + x), f);
    cols[o1 + x] = SparseVec::unit(static_cast<Index>(om1 + x), f);
  }
  for (std::size_t u = 0; u < m0; ++u) cols[o0 + u] = sh(k0c(Fe[u]), o0);
  k.chi = Matrix::from_columns(cols, N, f);
  k.tau1 = k.sigma(f.integer(-1));
  k.tau2 = k.sigma(alpha) * k.chi;
  return k;
}

KantorAlgebra kantor_build(const Algebra& a, DerivationChoice c, const Scalar& alpha) {
  return kantor_build(a, derivation_choice(a, c), alpha);
}

Report epsilon_table_check(const KantorAlgebra& k) {
  Report r("epsilon brackets");
  const Algebra& a = k.algebra;
  const std::size_t n = a.dim();
  const Scalar ainv = k.alpha.inverse();
  const Field& f = a.field();
  std::array<std::vector<SparseVec>, 3> eps;
  for (int i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x) eps[i].push_back(k.epsilon(i, a.basis(x)));
  // [eps_i x, eps_{i+1} y] = c_i eps_{i+2}(conj(xy))
  const std::array<Scalar, 3> coef = {ainv, f.integer(-2), -k.alpha};
  const std::array<const char*, 3> names = {"[eps0 x, eps1 y] = alpha^-1 eps2(conj xy)",
                                            "[eps1 x, eps2 y] = -2 eps0(conj xy)",
                                            "[eps2 x, eps0 y] = -alpha eps1(conj xy)"};
  for (int i = 0; i < 3; ++i) {
    auto ok = [&](std::size_t x, std::size_t y) {
      const SparseVec rhs = k.epsilon(i + 2, a.bar(a.basis_product(x, y))).scaled(coef[i]);
      return k.lie.bracket(eps[i][x], eps[mod3(i + 1)][y]) == rhs;
    };
    auto bad = find_first_failure(n, [&](std::size_t x) {
      for (std::size_t y = 0; y < n; ++y)
        if (!ok(x, y)) return false;
      return true;
    });
    if (!bad) {
      r.pass(names[i], n * n);
      continue;
    }
    for (std::size_t y = 0; y < n; ++y)
      if (!ok(*bad, y)) {
        r.fail(names[i], pair_witness(*bad, y));
        break;
      }
  }
  return r;
}

Report kantor_verify(const KantorAlgebra& k) {
  Report r("Kantor algebra");
  const LieAlgebra& l = k.lie;
  const Field& f = l.field();
  const std::size_t N = l.dim(), n = k.algebra.dim();
  r.merge(verify_jacobi(l, JacobiMode::automatic(N)));
  r.merge(verify_grading(l));
  const Matrix sa = k.sigma(k.alpha);
  r.add(check_automorphism(l, k.chi, "chi"));
  r.add(check_automorphism(l, sa, "sigma_alpha"));
  r.add(check_automorphism(l, k.tau1, "tau1"));
  r.add(check_automorphism(l, k.tau2, "tau2"));
  const Matrix id = Matrix::identity(N, f);
  r.expect(k.chi * k.chi == id, "chi^2 = 1");
  const Scalar three = f.integer(3);
  r.expect(sa * k.sigma(three) == k.sigma(k.alpha * three), "sigma_alpha sigma_3 = sigma_3alpha");
  r.expect(k.tau1 * k.tau1 == id, "tau1^2 = 1");
  r.expect(k.tau2 * k.tau2 == id, "tau2^2 = 1");
  r.expect(k.tau1 * k.tau2 == k.tau2 * k.tau1, "tau1 tau2 = tau2 tau1");
  // Eigenspaces (-,+), (+,-), (-,-) are eps1(A), eps0(A), eps2(A).
  const std::array<std::pair<int, int>, 3> signs = {{{1, -1}, {-1, 1}, {-1, -1}}};
  for (int i = 0; i < 3; ++i) {
    std::vector<SparseVec> vs;
    for (std::size_t x = 0; x < n; ++x) vs.push_back(k.epsilon(i, k.algebra.basis(x)));
    Subspace e = Subspace::span(vs, N, f);
    Subspace b = k.block(signs[i].first, signs[i].second);
    r.expect(e.dim() == n && same_space(e, b), "eigenspace of eps" + std::to_string(i),
             nlohmann::json::array({b.dim(), e.dim()}));
  }
  r.merge(epsilon_table_check(k));
  return r;
}

Report lemma41(const Algebra& a, const Subspace& d) {
  require_involution(a);
  Report r("lrt decomposition");
  const std::size_t n = a.dim();
  const Field& f = a.field();
  auto ok = [&](std::size_t x, std::size_t y) {
    const SparseVec ex = a.basis(x), ey = a.basis(y);
    Triple t = delta_structurable(a, ex, ey);
    return t[0] + t[1] + t[2] == inner_derivation(a, a.bar(ex), ey).scaled(f.integer(-3));
  };
  auto bad = find_first_failure(n, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y)
      if (!ok(x, y)) return false;
    return true;
  });
  if (bad) {
    for (std::size_t y = 0; y < n; ++y)
      if (!ok(*bad, y)) {
        r.fail("(a) sum delta_i(x,y) = -3 D(xbar,y)", pair_witness(*bad, y));
        break;
      }
  } else {
    r.pass("(a) sum delta_i(x,y) = -3 D(xbar,y)", n * n);
  }

  const Subspace lrt = lrt_space(a), ts = ts_space(a);
  const Subspace der3 = diagonal_triples(derivation_choice(a, DerivationChoice::full), n, f);
  const Subspace inder3 = diagonal_triples(derivation_choice(a, DerivationChoice::inner), n, f);
  const Subspace inlrt = inlrt_space(a);
  auto decomposition = [&](const std::string& name, const Subspace& whole, const Subspace& part) {
    const Subspace s = part.sum(ts);
    r.expect(s.dim() == part.dim() + ts.dim(), "(b) " + name + " sum is direct",
             nlohmann::json::array({part.dim(), ts.dim(), s.dim()}));
    r.expect(same_space(s, whole), "(b) " + name + " = sum",
             nlohmann::json::array({whole.dim(), s.dim()}),
             std::to_string(whole.dim()) + " = " + std::to_string(part.dim()) + " + " + std::to_string(ts.dim()));
  };
  decomposition("lrt = der^<3> + T_S", lrt, der3);
  decomposition("inlrt = inder^<3> + T_S", inlrt, inder3);

  const Subspace l = l_space(a, d);
  r.expect(lrt.contains(l), "(c) l(A,d) inside lrt");
  const Subspace d3 = diagonal_triples(d, n, f);
  r.expect(d3.sum(ts).dim() == d3.dim() + ts.dim(), "(c) d^<3> + T_S direct");
  std::vector<Triple> basis;
  for (const auto& v : l.basis()) basis.push_back(Triple::unflatten(v, n, f));
  const std::size_t m = basis.size();
  auto closed = [&](std::size_t i) {
    for (std::size_t j = i + 1; j < m; ++j)
      if (!l.contains(bracket(basis[i], basis[j]).flatten())) return false;
    return true;
  };
  auto fail = find_first_failure(m, closed);
  r.expect(!fail, "(c) l(A,d) closed under bracket", fail ? nlohmann::json(*fail) : nlohmann::json(nullptr));
  return r;
}

Triple psi(const KantorAlgebra& k, const SparseVec& p) {
  const Algebra& a = k.algebra;
  const std::size_t n = a.dim(), N = k.lie.dim();
  const Field& f = a.field();
  if (!(k.tau1.apply(p) == p) || !(k.tau2.apply(p) == p))
    throw Error(ErrorKind::precondition, "element outside the K_(00) block");
  Triple t;
  for (int i = 0; i < 3; ++i) {
    std::vector<SparseVec> eps;
    for (std::size_t x = 0; x < n; ++x) eps.push_back(k.epsilon(i, a.basis(x)));
    BasisSolver solve(eps, N, f);
    std::vector<SparseVec> cols;
    for (std::size_t x = 0; x < n; ++x) {
      auto c = solve.coordinates(k.lie.bracket(p, eps[x]));
      if (!c) throw Error(ErrorKind::grading, "[p, eps_i x] leaves eps_i(A)");
      cols.push_back(*c);
    }
    t[i] = Matrix::from_columns(cols, n, f);
  }
  return t;
}

Report psi_check(const KantorAlgebra& k) {
  Report r("psi");
  const Algebra& a = k.algebra;
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const Subspace k00 = k.block(1, 1);
  const auto& basis = k00.basis();
  const std::size_t m = basis.size();
  std::vector<Triple> img(m);
  parallel_for(m, [&](std::size_t u) { img[u] = psi(k, basis[u]); });

  auto hom = [&](std::size_t u) {
    for (std::size_t v = u + 1; v < m; ++v) {
      const SparseVec c = k00.coordinates(k.lie.bracket(basis[u], basis[v])).value();
      Triple lhs = Triple::zero(n, f);
      for (const auto& e : c) lhs = lhs + img[e.index].scaled(e.value);
      if (!(lhs == bracket(img[u], img[v]))) return false;
    }
    return true;
  };
  auto bad = find_first_failure(m, hom);
  r.expect(!bad, "homomorphism", bad ? nlohmann::json(*bad) : nlohmann::json(nullptr));
  const Subspace image = triple_span(img, n, f);
  r.expect(image.dim() == m, "injective", nlohmann::json::array({m, image.dim()}));
  r.expect(same_space(image, l_space(a, k.d)), "image = l(A,d)");
  r.expect(image.dim() == k.d.dim() + 2 * k.skew.dim(), "dim image = dim d + 2 dim S",
           nlohmann::json::array({image.dim(), k.d.dim(), k.skew.dim()}));

  bool ok = true;
  for (const auto& v : k.d.basis()) {
    Matrix d = Matrix::unflatten(v, n, n, f);
    ok = ok && psi(k, k.in_k0(d)) == Triple::diagonal(d);
  }
  r.expect(ok, "psi(d) = (d,d,d)");
  bool ts = true, ss = true;
  for (const auto& s : k.skew.basis()) {
    const Matrix T = T_operator(a, s), L = a.left(s), R = a.right(s);
    ts = ts && psi(k, k.in_k0(T)) == Triple(L - R, T, a.bar_operator(T));
    ts = ts && a.bar_operator(T) == -(R + L.scaled(f.integer(2)));
    const SparseVec p = k.in_k2(s, false).scaled(k.alpha) + k.in_k2(s, true).scaled(k.alpha.inverse());
    ss = ss && psi(k, p) == Triple(-(L + R), L, R);
  }
  r.expect(ts, "psi(T_s) = (L_s - R_s, T_s, bar T_s)");
  r.expect(ss, "psi(alpha(0,s) + alpha^-1(0,s)~) = (-(L_s+R_s), L_s, R_s)");
  return r;
}

AFAlgebra af_build(const Algebra& a, const std::array<Scalar, 3>& gamma, const Subspace& v) {
  require_involution(a);
  const std::size_t n = a.dim();
  const Field& f = a.field();
  for (const auto& g : gamma) {
    if (g.field() != f) throw ContextError("gamma over another field");
    if (g.is_zero()) throw Error(ErrorKind::precondition, "gamma components must be nonzero");
  }
  if (v.ambient() != 3 * n * n || v.field() != f) throw ShapeError("v has the wrong ambient space");
  if (!v.contains(inlrt_space(a))) throw Error(ErrorKind::containment, "v does not contain inlrt(A)");
  if (!lrt_space(a).contains(v)) throw Error(ErrorKind::containment, "v is not inside lrt(A)");

  AFAlgebra af;
  af.algebra = a;
  af.gamma = gamma;
  af.v = v;
  const std::size_t m = v.dim(), N = m + 3 * n;
  std::vector<Triple> T;
  for (const auto& b : v.basis()) T.push_back(Triple::unflatten(b, n, f));
  std::vector<SparseVec> table(N * N);
  auto set = [&](std::size_t i, std::size_t j, SparseVec w) {
    table[j * N + i] = -w;
    table[i * N + j] = std::move(w);
  };
  auto vc = [&](const Triple& t) {
    auto c = v.coordinates(t.flatten());
    if (!c) throw Error(ErrorKind::containment, "v is not closed under the bracket");
    return *c;
  };
  auto sh = [](const SparseVec& w, std::size_t off) { return w.shifted(static_cast<Index>(off)); };
  // T acts on [12], [23], [31] through T3, T1, T2.
  const std::array<int, 3> acting = {2, 0, 1};
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t w = u + 1; w < m; ++w) set(u, w, vc(bracket(T[u], T[w])));
    for (int b = 0; b < 3; ++b)
      for (std::size_t x = 0; x < n; ++x) set(u, af.index(b, x), sh(T[u][acting[b]].column(x), af.index(b, 0)));
  }
  // [a[ij], b[ij]] = gamma_i/gamma_j (delta1, delta2, delta0) for (12), rotated for (23), (31).
  const std::array<Scalar, 3> same = {gamma[0] / gamma[1], gamma[1] / gamma[2], gamma[2] / gamma[0]};
  const std::array<int, 3> rot = {2, 0, 1};
  // [a[12], b[23]] = -g1/g3 conj(ab)[31], [a[23], b[31]] = -g2/g1 conj(ab)[12], [a[31], b[12]] = -g3/g2 conj(ab)[23]
  const std::array<Scalar, 3> cross = {-gamma[0] / gamma[2], -gamma[1] / gamma[0], -gamma[2] / gamma[1]};
  for (int b = 0; b < 3; ++b)
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        Triple d = theta_power(delta_structurable(a, a.basis(x), a.basis(y)), rot[b]);
        set(af.index(b, x), af.index(b, y), vc(d.scaled(same[b])));
      }
      for (std::size_t y = 0; y < n; ++y) {
        const int c = (b + 2) % 3;
        set(af.index(b, x), af.index((b + 1) % 3, y),
            sh(a.bar(a.basis_product(x, y)).scaled(cross[b]), af.index(c, 0)));
      }
    }
  af.lie = LieAlgebra(f, {{"v", m, 0}, {"A12", n, 2}, {"A23", n, 1}, {"A31", n, 3}}, GradingKind::klein,
                      std::move(table));
  return af;
}

AFAlgebra af_build(const Algebra& a, const std::array<Scalar, 3>& gamma, DerivationChoice c) {
  return af_build(a, gamma, l_space(a, derivation_choice(a, c)));
}

Report psi_iso_check(const Algebra& a, const Subspace& d, const Scalar& alpha) {
  Report r("Kantor to Allison-Faulkner");
  const Field& f = a.field();
  const std::size_t n = a.dim();
  KantorAlgebra k = kantor_build(a, d, alpha);
  AFAlgebra af = af_build(a, {f.one(), f.integer(-1), alpha * f.integer(2)}, l_space(a, d));
  const std::size_t N = k.lie.dim();
  r.expect(N == af.lie.dim(), "dimensions agree", nlohmann::json::array({N, af.lie.dim()}));
  if (N != af.lie.dim()) return r;

  std::vector<SparseVec> src, dst;
  const Subspace k00 = k.block(1, 1);
  for (const auto& p : k00.basis()) {
    src.push_back(p);
    dst.push_back(coords_in(af.v, theta_power(psi(k, p), 2).flatten(), "Psi image"));
  }
  const std::array<Scalar, 3> scale = {f.one(), f.rational(1, 2), f.integer(-1)};
  for (int i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x) {
      src.push_back(k.epsilon(i, a.basis(x)).scaled(scale[i]));
      dst.push_back(SparseVec::unit(static_cast<Index>(af.index(i, x)), f));
    }
  BasisSolver solve(src, N, f);
  r.expect(solve.independent() && src.size() == N, "K = K_(00) + eps0(A) + eps1(A) + eps2(A)");
  if (!r.passed()) return r;
  Matrix img = Matrix::from_columns(dst, N, f);
  std::vector<SparseVec> cols;
  for (std::size_t u = 0; u < N; ++u) cols.push_back(img.apply(solve.solve(SparseVec::unit(static_cast<Index>(u), f))));
  r.merge(check_lie_isomorphism(k.lie, af.lie, Matrix::from_columns(cols, N, f)));
  return r;
}

KantorS4 kantor_s4(const Algebra& a, const Subspace& d) {
  const Field& f = a.field();
  if (!f.has_sqrt_minus_one()) throw Error(ErrorKind::field_capability, "field has no square root of -1");
  KantorS4 out;
  out.kantor = kantor_build(a, d, f.integer(2));
  const KantorAlgebra& k = out.kantor;
  const std::size_t n = a.dim(), N = k.lie.dim();
  const Subspace k00 = k.block(1, 1);
  const std::size_t m = k00.dim();
  const Scalar i = f.radical();
  const std::array<Scalar, 3> scale = {i, i, f.rational(-1, 2)};
  std::vector<SparseVec> basis = k00.basis();
  for (int b = 0; b < 3; ++b)
    for (std::size_t x = 0; x < n; ++x) basis.push_back(k.epsilon(b, a.basis(x)).scaled(scale[b]));
  BasisSolver solve(basis, N, f);
  if (!solve.independent() || basis.size() != N)
    throw Error(ErrorKind::construction, "K_(00) and the iota blocks do not span K");
  out.basis = Matrix::from_columns(basis, N, f);
  out.lie = change_basis(k.lie, basis, {{"t", m, 0}, {"iota0", n, 2}, {"iota1", n, 1}, {"iota2", n, 3}},
                         GradingKind::klein, solve);

  std::vector<Triple> images;
  std::vector<SparseVec> flat;
  for (const auto& p : k00.basis()) {
    images.push_back(psi(k, p));
    flat.push_back(images.back().flatten());
  }
  BasisSolver psi_inv(flat, 3 * n * n, f);
  auto iota = [&](int b, const SparseVec& x) { return x.shifted(static_cast<Index>(m + static_cast<std::size_t>(b) * n)); };
  std::vector<SparseVec> phi(N), tau(N);
  for (std::size_t u = 0; u < m; ++u) {
    phi[u] = psi_inv.solve(theta(images[u]).flatten());
    tau[u] = psi_inv.solve(xi(a, images[u]).flatten());
  }
  const Scalar m1 = f.integer(-1);
  const std::array<int, 3> tau_target = {0, 2, 1};
  for (int b = 0; b < 3; ++b)
    for (std::size_t x = 0; x < n; ++x) {
      phi[m + b * n + x] = iota((b + 1) % 3, a.basis(x));
      tau[m + b * n + x] = iota(tau_target[b], a.bar(a.basis(x))).scaled(m1);
    }
  out.action.group = "S4";
  out.action.generators = {{"tau1", conjugate(k.tau1, basis, solve)},
                           {"tau2", conjugate(k.tau2, basis, solve)},
                           {"phi", Matrix::from_columns(phi, N, f)},
                           {"tau", Matrix::from_columns(tau, N, f)}};
  return out;
}

KantorS4 kantor_s4(const Algebra& a, DerivationChoice c) { return kantor_s4(a, derivation_choice(a, c)); }

Report kantor_s4_check(const KantorS4& s) {
  Report r("S4 on the Kantor algebra");
  const Algebra& a = s.kantor.algebra;
  const std::size_t n = a.dim(), m = s.lie.block_offset(1);
  auto iota = [&](int b, const SparseVec& x) { return x.shifted(static_cast<Index>(m + static_cast<std::size_t>(b) * n)); };
  for (int i = 0; i < 3; ++i) {
    auto ok = [&](std::size_t x, std::size_t y) {
      return s.lie.bracket(iota(i, a.basis(x)), iota((i + 1) % 3, a.basis(y))) ==
             iota((i + 2) % 3, a.bar(a.basis_product(x, y)));
    };
    std::optional<nlohmann::json> w;
    for (std::size_t x = 0; x < n && !w; ++x)
      for (std::size_t y = 0; y < n && !w; ++y)
        if (!ok(x, y)) w = pair_witness(x, y);
    const std::string name = "[iota" + std::to_string(i) + " x, iota" + std::to_string((i + 1) % 3) +
                             " y] = iota" + std::to_string((i + 2) % 3) + "(conj xy)";
    if (w)
      r.fail(name, *w);
    else
      r.pass(name, n * n);
  }
  r.merge(verify_all(s.lie, s.action));
  return r;
}

Report kantor_s4_af_check(const KantorS4& s) {
  Report r("S4 Kantor algebra to Allison-Faulkner with gamma = (-1,-1,-1)");
  const KantorAlgebra& k = s.kantor;
  const Algebra& a = k.algebra;
  const Field& f = a.field();
  const std::size_t n = a.dim(), m = s.lie.block_offset(1), N = s.lie.dim();
  const Scalar m1 = f.integer(-1);
  AFAlgebra af = af_build(a, {m1, m1, m1}, l_space(a, k.d));
  r.expect(N == af.lie.dim(), "dimensions agree", nlohmann::json::array({N, af.lie.dim()}));
  if (N != af.lie.dim()) return r;
  std::vector<SparseVec> cols;
  for (std::size_t u = 0; u < m; ++u)
    cols.push_back(coords_in(af.v, theta_power(psi(k, s.basis.column(u)), 2).flatten(), "Psi image"));
  for (int i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < n; ++x) cols.push_back(SparseVec::unit(static_cast<Index>(af.index(i, x)), f).scaled(m1));
  r.merge(check_lie_isomorphism(s.lie, af.lie, Matrix::from_columns(cols, N, f)));
  return r;
}

}  // namespace s4lie
