#include <doctest.h>

#include "oracles.hpp"
#include "s4lie/catalog.hpp"
#include "s4lie/errors.hpp"

using namespace s4lie;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.push_back(Field().integer(x));
  return out;
}

// q(x) = x^T Q x / 2 for the polar matrix Q.
bool composition_law(const Algebra& a) {
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = 0; y < a.dim(); ++y) {
      SparseVec u = a.basis(x) + a.basis(y).scaled(a.field().integer(2));
      SparseVec v = a.basis(y) - a.basis((x + 1) % a.dim());
      if (a.quadratic(a.multiply(u, v)) != a.quadratic(u) * a.quadratic(v)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("hurwitz: params () gives Q with q(x) = x^2") {
  Algebra q = hurwitz(Field(), {});
  CHECK(q.dim() == 1);
  CHECK(q.quadratic(q.basis(0).scaled(Field().integer(3))) == Field().integer(9));
}

TEST_CASE("hurwitz quaternions match Hamilton's table") {
  auto p = ints({-1, -1});
  Algebra h = hurwitz(Field(), p);
  Algebra ref = oracle::quaternions();
  // Cayley-Dickson with basis 1, i, j, ij is Hamilton's table
  CHECK(h.with_form(std::nullopt).with_name("") == ref.with_form(std::nullopt));
  for (std::size_t i = 0; i < 4; ++i) CHECK(h.quadratic(h.basis(i)) == Field().one());
  CHECK(composition_law(h));
  CHECK_THROWS_AS(hurwitz(Field(), ints({-1, 0})), Error);
}

TEST_CASE("hurwitz octonions: dim der = 14 by dense solve, composition law") {
  Algebra o = hurwitz(Field(), ints({-1, -1, -1}));
  CHECK(oracle::derivation_dim(oracle::table_of(o)) == 14);
  CHECK(derivation_algebra(o, false).dim() == 14);
  CHECK(composition_law(o));
  CHECK(check_hurwitz(o).passed());
  CHECK(check_hurwitz(hurwitz_by_dim(8)).passed());
  CHECK(composition_law(hurwitz(Field(), ints({1, -1, 1}))));
}

TEST_CASE("para: Q, quaternion unit, octonion flexibility x*(y*x) = q(x) y") {
  Algebra pq = para(hurwitz_by_dim(1));
  CHECK(pq.basis_product(0, 0) == pq.basis(0));
  Algebra h = hurwitz_by_dim(4);
  Algebra ph = para(h);
  for (std::size_t x = 0; x < 4; ++x) CHECK(ph.multiply(ph.basis(0), ph.basis(x)) == h.bar(h.basis(x)));
  Algebra po = para(hurwitz_by_dim(8));
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y) {
      SparseVec lhs = po.multiply(po.basis(x), po.multiply(po.basis(y), po.basis(x)));
      CHECK(lhs == po.basis(y).scaled(po.quadratic(po.basis(x))));
    }
  CHECK(check_symmetric_composition(po).passed());
  // both bars recover the Hurwitz product
  Algebra o = hurwitz_by_dim(8);
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y)
      CHECK(po.multiply(o.bar(o.basis(x)), o.bar(o.basis(y))) == o.basis_product(x, y));
  CHECK_THROWS(para(oracle::jordan(2)));
}

TEST_CASE("okubo: composition, dims by dense solve, no unit") {
  Algebra k = okubo();
  CHECK(k.field() == Field::quadratic(-3));
  CHECK(k.dim() == 8);
  CHECK(check_symmetric_composition(k).passed());
  CHECK(oracle::derivation_dim_any(k) == 8);
  CHECK(derivation_algebra(k, false).dim() == 8);
  CHECK(oracle::stri_dim_any(k) == 28);
  CHECK(stri_solve(k).size() == 28);
  CHECK(!unit_element(k).has_value());
}

TEST_CASE("para-octonion stri by dense solve over Q") {
  CHECK(oracle::stri_dim_any(para(hurwitz_by_dim(8))) == 28);
}

TEST_CASE("tensor STAs") {
  Datum a = tensor_sta(para(hurwitz_by_dim(1)), para(hurwitz_by_dim(1)));
  CHECK(a.algebra.dim() == 1);
  CHECK(a.delta.at(0, 0).is_zero());
  Datum f4 = tensor_sta(para(hurwitz_by_dim(8)), para(hurwitz_by_dim(1)));
  CHECK(construct_g_sta(f4.algebra, f4.delta).lie.dim() == 52);
  CHECK_THROWS(tensor_sta(oracle::jordan(2), para(hurwitz_by_dim(1))));
}

TEST_CASE("jordan_sym matches the matrix oracle and the g dimensions") {
  const std::size_t expected[] = {0, 3, 10, 21};
  for (std::size_t n = 1; n <= 3; ++n) {
    Datum j = jordan_sym(n);
    CHECK(j.algebra.with_name("") == oracle::jordan(n));
    CHECK(check_lrta(j.algebra, j.delta).passed());
    CHECK(construct_g_lrta(j.algebra, j.delta).lie.dim() == expected[n]);
  }
  CHECK(inner_derivation_algebra(oracle::jordan(2)).dim() == 1);
  CHECK(inner_derivation_algebra(oracle::jordan(3)).dim() == 3);
}

TEST_CASE("Tits construction: +1/2 kappa holds, the printed -1/2 fails Jacobi") {
  const Field q;
  for (std::size_t n : {2, 3}) {
    CHECK(jordan_tits_check(n, q.rational(1, 2)).passed());
    CHECK(!jordan_tits_check(n, q.rational(-1, 2)).passed());
  }
}

TEST_CASE("Lie algebras as LRTAs") {
  Datum sl2 = lie_as_lrta(lie_sl2());
  CHECK(construct_g_lrta(sl2.algebra, sl2.delta).lie.dim() == 12);
  CHECK(lie_lrta_isomorphism_check(lie_sl2()).passed());
  CHECK(lie_lrta_isomorphism_check(lie_so3()).passed());

  Datum ab = lie_as_lrta(lie_abelian(1));
  CHECK(ab.delta.pair_count() == 0);
  Construction g = construct_g_lrta(ab.algebra, ab.delta);
  CHECK(g.lie.dim() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(g.lie.bracket_basis(i, j).empty());

  Datum so3 = lie_as_lrta(lie_so3());
  Construction h = construct_g_lrta(so3.algebra, so3.delta);
  CHECK(h.lie.dim() == 12);
  CHECK(rank(killing_form(h.lie)) == 12);

  const Field q;
  std::vector<MulEntry> bad{{0, 1, 1, q.one()}};
  CHECK_THROWS(require_lie(Algebra(q, 2, bad)));
}

TEST_CASE("Lie triple systems") {
  Datum lts = lts_from_graded(lie_sl2(), 1);
  CHECK(lts.algebra.dim() == 2);
  CHECK(lts.algebra.zero_product());
  CHECK(lts_isomorphism_check(lie_sl2(), 1).passed());
  Construction g = construct_g_lrta(lts.algebra, lts.delta);
  CHECK(g.lie.dim() == 9);
  CHECK(is_simple_with_action(g.lie, g.action).verdict == SimpleVerdict::simple);
  // even part spanned by e only is not a grading of sl2
  CHECK_THROWS(lts_from_graded(lie_sl2(), 2));
}

TEST_CASE("twists") {
  Datum s = lie_as_sta(lie_so3());
  const Field q;
  Datum same = twist_by_automorphism(s, Matrix::identity(3, q));
  CHECK(same.algebra.with_name("") == s.algebra.with_name(""));
  CHECK(same.delta == s.delta);

  Datum t = twist_by_automorphism(s, so3_rotation());
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    CHECK(t.algebra.basis_product(i, j) == -t.algebra.basis(k));
    CHECK(t.algebra.basis_product(j, i).empty());
    CHECK(t.algebra.basis_product(i, i) == t.algebra.basis(i));
  }
  CHECK(check_sta(t.algebra, t.delta).passed());
  CHECK(twist_isomorphism_check(s, t, so3_rotation()).passed());

  Datum po = tensor_sta(para(hurwitz_by_dim(8)), para(hurwitz_by_dim(1)));
  Datum tw = twist_by_automorphism(po, octonion_rotation());
  CHECK(check_sta(tw.algebra, tw.delta).passed());
  CHECK(twist_isomorphism_check(po, tw, octonion_rotation()).passed());

  // not of order 3
  Matrix swap(3, 3, q);
  swap.set(0, 1, q.one());
  swap.set(1, 0, q.one());
  swap.set(2, 2, q.one());
  try {
    twist_by_automorphism(s, swap);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

TEST_CASE("every catalog entry up to dim 32 passes its checker") {
  for (const auto& name : catalog_names()) {
    CatalogEntry e = catalog_entry(name);
    if (e.datum.algebra.dim() > 32) continue;  // the 64-dim entries run in the acceptance suite
    INFO(name);
    CHECK(check_entry(e).passed());
  }
  try {
    catalog_entry("no-such-thing");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_name);
  }
}

TEST_CASE("catalog self-check dimensions") {
  CHECK(derivation_algebra(catalog_entry("octonion").datum.algebra, false).dim() == 14);
  CHECK(stri_solve(catalog_entry("para-octonion").datum.algebra).size() == 28);
  CHECK(derivation_algebra(catalog_entry("okubo").datum.algebra, false).dim() == 8);
  CHECK(stri_solve(catalog_entry("okubo").datum.algebra).size() == 28);
}
