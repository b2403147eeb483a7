#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "s4lie/algebra.hpp"
#include "s4lie/catalog.hpp"
#include "s4lie/errors.hpp"
#include "s4lie/io.hpp"

using namespace s4lie;

namespace {

SparseVec random_vec(std::mt19937_64& rng, std::size_t n, const Field& f) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.integer(d(rng)));
  return SparseVec::from_dense(v);
}

bool leibniz(const Algebra& a, const Matrix& d) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      SparseVec lhs = d.apply(a.basis_product(i, j));
      SparseVec rhs = a.multiply(d.apply_unit(i), a.basis(j)) + a.multiply(a.basis(i), d.apply_unit(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("make_algebra: one-dimensional unital Q") {
  const Field q;
  MulEntry e{0, 0, 0, q.one()};
  Algebra a = make_algebra(q, 1, std::span(&e, 1), Matrix::identity(1, q));
  CHECK(a.dim() == 1);
  CHECK(unit_element(a) == SparseVec::unit(0, q));
  auto ops = mult_operator(a, a.basis(0));
  CHECK(ops.left.is_identity());
  CHECK(ops.right.is_identity());
}

TEST_CASE("make_algebra rejects a non-involution") {
  const Field q;
  Algebra h = oracle::quaternions();
  Matrix b = h.involution();
  b.set(0, 0, q.integer(2));  // B^2 != id
  auto mul = h.mul_entries();
  try {
    make_algebra(q, 4, mul, b);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_involution);
  }
  // identity is not an anti-automorphism of the quaternions
  try {
    make_algebra(q, 4, mul, Matrix::identity(4, q));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_involution);
  }
  Matrix asym(4, 4, q);
  asym.set(0, 1, q.one());
  try {
    make_algebra(q, 4, mul, h.involution(), asym);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_form);
  }
}

TEST_CASE("catalog quaternions survive JSON and satisfy i j = k") {
  Algebra h = catalog_entry("quaternion").datum.algebra;
  Algebra back = algebra_from_json(json::parse(algebra_to_json(h).dump()));
  CHECK(back == h);
  validate(back);
  // i j = k up to the basis labelling: i j is a unit vector orthogonal to 1, i, j.
  SparseVec ij = back.multiply(back.basis(1), back.basis(2));
  REQUIRE(ij.nnz() == 1);
  CHECK(ij.entries()[0].index == 3);
  CHECK(back.quadratic(ij) == back.quadratic(back.basis(3)));
}

TEST_CASE("mult_operator: unit, para-quaternion unit, zero, linearity") {
  const Field q;
  Algebra h = oracle::quaternions();
  auto one = mult_operator(h, h.basis(0));
  CHECK(one.left.is_identity());
  CHECK(one.right.is_identity());
  Algebra p = para(h);
  CHECK(mult_operator(p, p.basis(0)).left == h.involution());
  auto z = mult_operator(h, SparseVec());
  CHECK(z.left.is_zero());
  CHECK(z.right.is_zero());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    SparseVec x = random_vec(rng, 4, q), y = random_vec(rng, 4, q), w = random_vec(rng, 4, q);
    Scalar c = q.rational(t - 7, 3);
    auto sum = mult_operator(h, x + y.scaled(c));
    CHECK(sum.left == h.left(x) + h.left(y).scaled(c));
    CHECK(sum.right == h.right(x) + h.right(y).scaled(c));
    CHECK(h.left(x).apply(w) == h.multiply(x, w));
    CHECK(h.right(x).apply(w) == h.multiply(w, x));
  }
}

TEST_CASE("symmetric composition: para-octonions and Okubo pass, unital octonions fail associativity") {
  CHECK(check_symmetric_composition(para(oracle::octonions())).passed());
  CHECK(check_symmetric_composition(okubo()).passed());
  Report r = check_symmetric_composition(oracle::octonions());
  const Check* assoc = r.find("form-associativity");
  REQUIRE(assoc != nullptr);
  CHECK(!assoc->pass);
  CHECK(!assoc->witness.is_null());
}

TEST_CASE("symmetric composition needs a form") {
  Algebra j = oracle::jordan(2);
  CHECK_THROWS_AS(check_symmetric_composition(j), Error);
}

TEST_CASE("inner derivation on Sym2 equals [L_x, L_y]") {
  Algebra j = oracle::jordan(2);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y) {
      Matrix d = inner_derivation(j, j.basis(x), j.basis(y));
      CHECK(d == commutator(j.left_basis(x), j.left_basis(y)));
      CHECK(leibniz(j, d));
    }
}

TEST_CASE("inner derivation: x = y gives zero, octonion D_{i,j} is a derivation") {
  Algebra o = oracle::octonions();
  std::mt19937_64 rng(5);
  SparseVec x = random_vec(rng, 8, Field());
  CHECK(inner_derivation(o, x, x).is_zero());
  Matrix d = inner_derivation(o, o.basis(1), o.basis(2));
  CHECK(!d.is_zero());
  CHECK(leibniz(o, d));
  CHECK(is_derivation(o, d));
  CHECK_THROWS(inner_derivation(para(o), o.basis(1), o.basis(2)));
}

TEST_CASE("derivation algebra dimensions match a dense solve") {
  struct Case {
    Algebra a;
    std::size_t expected;
  };
  std::vector<Case> cases = {{oracle::jordan(3), 3}, {oracle::jordan(1), 0}, {oracle::octonions(), 14},
                             {oracle::quaternions(), 3}};
  for (const auto& c : cases) {
    const oracle::Table t = oracle::table_of(c.a);
    CHECK(oracle::derivation_dim(t) == c.expected);
    Subspace der = derivation_algebra(c.a, false);
    CHECK(der.dim() == c.expected);
    // closed under commutator
    const std::size_t n = c.a.dim();
    for (const auto& u : der.basis())
      for (const auto& v : der.basis()) {
        Matrix m = commutator(Matrix::unflatten(u, n, n, c.a.field()), Matrix::unflatten(v, n, n, c.a.field()));
        CHECK(der.contains(m.flatten()));
      }
  }
  // inner derivations of the octonions are all of der
  CHECK(inner_derivation_algebra(oracle::octonions()).dim() == 14);
}

TEST_CASE("ideal closure: zero, simple, direct sum; monotone and idempotent") {
  Algebra p = para(oracle::octonions());
  std::vector<SparseVec> none;
  CHECK(ideal_closure(p, none).dim() == 0);
  std::vector<SparseVec> g{p.basis(3)};
  CHECK(ideal_closure(p, g).dim() == 8);
  Algebra s = direct_sum(oracle::jordan(2), oracle::jordan(3));
  std::vector<SparseVec> first{s.basis(1)};
  Subspace i1 = ideal_closure(s, first);
  CHECK(i1.dim() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(i1.contains(s.basis(k)));
  Subspace again = ideal_closure(s, i1.basis());
  CHECK(again == i1);
  std::vector<SparseVec> more{s.basis(1), s.basis(4)};
  CHECK(ideal_closure(s, more).contains(i1));
}

TEST_CASE("skew and hermitian parts of the quaternions") {
  Algebra h = oracle::quaternions();
  CHECK(skew_elements(h).dim() == 3);
  CHECK(hermitian_elements(h).dim() == 1);
  CHECK(product_span(h).dim() == 4);
}

TEST_CASE("extend_scalars keeps structure constants") {
  Algebra h = oracle::quaternions();
  Algebra e = extend_scalars(h, Field::quadratic(-1));
  CHECK(e.field() == Field::quadratic(-1));
  CHECK(e.dim() == 4);
  CHECK(e.multiply(e.basis(1), e.basis(2)) == SparseVec::unit(3, e.field()));
  CHECK_THROWS(extend_scalars(e, Field::quadratic(-3)));
}
