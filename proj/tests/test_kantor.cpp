#include <doctest.h>

#include "oracles.hpp"
#include "s4lie/catalog.hpp"
#include "s4lie/errors.hpp"
#include "s4lie/kantor.hpp"
#include "s4lie/triality.hpp"

using namespace s4lie;

namespace {

// Structure constants read off bracket_basis; the rest is plain dense arithmetic.
oracle::Table lie_table(const LieAlgebra& l) {
  oracle::Table t(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      for (const auto& e : l.bracket_basis(i, j)) t.at(i, j, e.index) = e.value.rational_part();
  return t;
}

bool dense_jacobi(const oracle::Table& t) {
  const std::size_t n = t.n;
  std::vector<mpq_class> acc(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), mpq_class(0));
        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& c : cyc)
          for (std::size_t m = 0; m < n; ++m) {
            const mpq_class& a = t.at(c[1], c[2], m);
            if (a == 0) continue;
            for (std::size_t r = 0; r < n; ++r) acc[r] += a * t.at(c[0], m, r);
          }
        for (const auto& v : acc)
          if (v != 0) return false;
      }
  return true;
}

std::size_t killing_rank(const oracle::Table& t) {
  const std::size_t n = t.n;
  // ad_x as dense matrices: (ad_x)[r][m] = c(x, m, r)
  oracle::Dense k(n, std::vector<mpq_class>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      mpq_class tr = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t m = 0; m < n; ++m) tr += t.at(x, m, r) * t.at(y, r, m);
      k[x][y] = tr;
    }
  return oracle::dense_rank(std::move(k));
}

Algebra complex_numbers() {
  const Field q;
  std::vector<MulEntry> mul{{0, 0, 0, q.one()}, {0, 1, 1, q.one()}, {1, 0, 1, q.one()}, {1, 1, 0, q.integer(-1)}};
  std::vector<SparseVec> bar{SparseVec::unit(0, q), -SparseVec::unit(1, q)};
  return make_algebra(q, 2, mul, Matrix::from_columns(bar, 2, q));
}

Algebra unital_q() {
  const Field q;
  MulEntry e{0, 0, 0, q.one()};
  return make_algebra(q, 1, std::span(&e, 1), Matrix::identity(1, q));
}

}  // namespace

TEST_CASE("Kantor algebra dimensions, Jacobi and Killing rank by dense computation") {
  struct Case {
    const char* name;
    Algebra a;
    std::size_t dim;
  };
  // sl2, sl3, sp6 (quaternions and Sym3) and F4
  std::vector<Case> cases = {{"Q", unital_q(), 3},
                             {"C", complex_numbers(), 8},
                             {"H", oracle::quaternions(), 21},
                             {"Sym3", oracle::jordan(3), 21}};
  const Field q;
  for (const auto& c : cases) {
    INFO(c.name);
    KantorAlgebra k = kantor_build(c.a, DerivationChoice::inner, q.integer(2));
    REQUIRE(k.lie.dim() == c.dim);
    oracle::Table t = lie_table(k.lie);
    CHECK(dense_jacobi(t));
    CHECK(killing_rank(t) == c.dim);
    CHECK(kantor_verify(k).passed());
  }
  KantorAlgebra f4 = kantor_build(oracle::octonions(), DerivationChoice::inner, q.one());
  CHECK(f4.lie.dim() == 52);
  CHECK(f4.skew.dim() == 7);
  CHECK(f4.k0.dim() == 22);
  // inner and full derivations agree for the octonions
  const Subspace inner = derivation_choice(oracle::octonions(), DerivationChoice::inner);
  const Subspace full = derivation_choice(oracle::octonions(), DerivationChoice::full);
  CHECK(inner.dim() == full.dim());
  CHECK(inner.contains(full));
}

TEST_CASE("epsilon bracket table for alpha in {1, 2, -3}") {
  const Field q;
  for (long alpha : {1L, 2L, -3L}) {
    INFO(alpha);
    KantorAlgebra k = kantor_build(oracle::quaternions(), DerivationChoice::inner, q.integer(alpha));
    CHECK(epsilon_table_check(k).passed());
    CHECK(kantor_verify(k).passed());
  }
  KantorAlgebra o = kantor_build(oracle::octonions(), DerivationChoice::inner, q.integer(-3));
  CHECK(epsilon_table_check(o).passed());
  CHECK_THROWS(kantor_build(oracle::octonions(), DerivationChoice::inner, q.zero()));
}

TEST_CASE("V and T operators") {
  Algebra h = oracle::quaternions();
  const Field q;
  // T_1 = V_{1,1} is 2 id on a unital algebra with 1bar = 1: (1 1)z + (z 1)1 - (z 1)1
  CHECK(T_operator(h, h.basis(0)) == Matrix::identity(4, q));
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t z = 0; z < 4; ++z) {
      const SparseVec ex = h.basis(x), ez = h.basis(z), one = h.basis(0);
      SparseVec expect = h.multiply(h.multiply(ex, one), ez) + h.multiply(h.multiply(ez, one), ex) -
                         h.multiply(h.multiply(ez, h.bar(ex)), one);
      CHECK(T_operator(h, ex).apply(ez) == expect);
    }
  CHECK_THROWS(T_operator(para(h), h.basis(1)));
}

TEST_CASE("lemma on lrt: parts (a), (b), (c)") {
  for (const Algebra& a : {unital_q(), complex_numbers(), oracle::quaternions(), oracle::jordan(3)}) {
    CHECK(lemma41(a, derivation_choice(a, DerivationChoice::inner)).passed());
    CHECK(lemma41(a, derivation_choice(a, DerivationChoice::full)).passed());
  }
  Algebra o = oracle::octonions();
  Report r = lemma41(o, derivation_choice(o, DerivationChoice::inner));
  CHECK(r.passed());
  // dims: lrt = 28 = 14 + 2 * 7 (T_S has dim 2 dim S)
  CHECK(lrt_space(o).dim() == 28);
  CHECK(ts_space(o).dim() == 14);
  CHECK(inlrt_space(o).dim() == 28);
  // the quaternions: theta-closed span 9, span of delta(x, y) alone is 6
  Algebra h = oracle::quaternions();
  CHECK(inlrt_space(h).dim() == 9);
  std::vector<SparseVec> raw;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) raw.push_back(delta_structurable(h, h.basis(x), h.basis(y)).flatten());
  CHECK(Subspace::span(raw, 48, Field()).dim() == 6);
}

TEST_CASE("psi on K_(00): checks pass for Q, Sym3, O") {
  const Field q;
  for (const Algebra& a : {unital_q(), oracle::jordan(3), oracle::octonions()}) {
    KantorAlgebra k = kantor_build(a, DerivationChoice::inner, q.integer(2));
    CHECK(psi_check(k).passed());
  }
  KantorAlgebra k = kantor_build(oracle::quaternions(), DerivationChoice::inner, q.integer(3));
  CHECK_THROWS(psi(k, k.in_k1(k.algebra.basis(0), false)));
}

TEST_CASE("psi: the printed leading minus disagrees with the bracket") {
  const Field q;
  Algebra o = oracle::octonions();
  KantorAlgebra k = kantor_build(o, DerivationChoice::inner, q.integer(2));
  REQUIRE(k.skew.dim() == 7);
  for (const auto& s : k.skew.basis()) {
    const SparseVec p = k.in_k2(s, false).scaled(k.alpha) + k.in_k2(s, true).scaled(k.alpha.inverse());
    const Matrix L = o.left(s), R = o.right(s);
    const Triple unsigned_form(-(L + R), L, R);
    const Triple printed = -unsigned_form;
    const Triple got = psi(k, p);
    CHECK(got == unsigned_form);
    CHECK(!(got == printed));
    // directly: [p, eps1(x)] = eps1(s x)
    for (std::size_t x = 0; x < 8; ++x)
      CHECK(k.lie.bracket(p, k.epsilon(1, o.basis(x))) == k.epsilon(1, o.multiply(s, o.basis(x))));
  }
}

TEST_CASE("psi is an isomorphism onto AF(A, (1, -1, 2 alpha), l(A, d))") {
  const Field q;
  for (const Algebra& a : {unital_q(), complex_numbers(), oracle::quaternions(), oracle::jordan(3)})
    for (long alpha : {1L, 2L, -3L}) {
      CHECK(psi_iso_check(a, derivation_choice(a, DerivationChoice::inner), q.integer(alpha)).passed());
    }
  Algebra o = oracle::octonions();
  CHECK(psi_iso_check(o, derivation_choice(o, DerivationChoice::inner), q.integer(2)).passed());
}

TEST_CASE("Allison-Faulkner algebras") {
  const Field q;
  Algebra o = oracle::octonions();
  AFAlgebra af = af_build(o, {q.one(), q.one(), q.one()});
  CHECK(af.lie.dim() == 52);
  CHECK(af.v.dim() == 28);
  CHECK(verify_jacobi(af.lie, JacobiMode::automatic(af.lie.dim())).passed());
  CHECK(verify_grading(af.lie).passed());

  Algebra h = oracle::quaternions();
  AFAlgebra ah = af_build(h, {q.one(), q.integer(-1), q.integer(2)});
  CHECK(ah.lie.dim() == 21);
  oracle::Table t = lie_table(ah.lie);
  CHECK(dense_jacobi(t));
  CHECK(killing_rank(t) == 21);

  // containment and shape errors
  try {
    af_build(h, {q.one(), q.one(), q.one()}, Subspace(48, q));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::containment);
  }
  try {
    af_build(h, {q.one(), q.one(), q.one()}, Subspace::full(48, q));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::containment);
  }
  CHECK_THROWS(af_build(h, {q.one(), q.zero(), q.one()}));
  CHECK_THROWS(af_build(h, {q.one(), q.one(), q.one()}, Subspace(9, q)));
}

TEST_CASE("kantor_build containment errors") {
  const Field q;
  Algebra o = oracle::octonions();
  try {
    kantor_build(o, Subspace(64, q), q.one());
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::containment);
  }
  try {
    kantor_build(o, Subspace::full(64, q), q.one());
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::containment);
  }
  CHECK_THROWS(kantor_build(para(o), DerivationChoice::inner, q.one()));
}

TEST_CASE("S4 on the Kantor algebra over Q(i)") {
  const Field qi = Field::quadratic(-1);
  Algebra h = extend_scalars(oracle::quaternions(), qi);
  KantorS4 s = kantor_s4(h, DerivationChoice::inner);
  CHECK(s.lie.dim() == 21);
  CHECK(kantor_s4_check(s).passed());
  CHECK(kantor_s4_af_check(s).passed());
  CHECK_THROWS_AS(kantor_s4(oracle::quaternions()), Error);
}

TEST_CASE("iota2 = +1/2 eps2 breaks the iota table, -1/2 satisfies it") {
  const Field qi = Field::quadratic(-1);
  Algebra h = extend_scalars(oracle::quaternions(), qi);
  KantorAlgebra k = kantor_build(h, DerivationChoice::inner, qi.integer(2));
  const Scalar i = qi.radical();
  auto table_holds = [&](const Scalar& c2) {
    const std::array<Scalar, 3> c = {i, i, c2};
    for (int b = 0; b < 3; ++b)
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
          SparseVec lhs = k.lie.bracket(k.epsilon(b, h.basis(x)).scaled(c[b]),
                                        k.epsilon(b + 1, h.basis(y)).scaled(c[(b + 1) % 3]));
          SparseVec rhs = k.epsilon(b + 2, h.bar(h.basis_product(x, y))).scaled(c[(b + 2) % 3]);
          if (lhs != rhs) return false;
        }
    return true;
  };
  CHECK(table_holds(qi.rational(-1, 2)));
  CHECK(!table_holds(qi.rational(1, 2)));
}

TEST_CASE("S4 Kantor for the octonions over Q(i)") {
  const Field qi = Field::quadratic(-1);
  Algebra o = extend_scalars(oracle::octonions(), qi);
  KantorS4 s = kantor_s4(o, DerivationChoice::inner);
  CHECK(s.lie.dim() == 52);
  CHECK(kantor_s4_check(s).passed());
  CHECK(kantor_s4_af_check(s).passed());
}
