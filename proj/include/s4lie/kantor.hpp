#pragma once

#include <array>

#include "s4lie/liebuild.hpp"

namespace s4lie {

// V_{x,y}(z) = (x ybar) z + (z ybar) x - (z xbar) y
Matrix V_operator(const Algebra& a, const SparseVec& x, const SparseVec& y);
// T_x = V_{x,1}; needs a unit.
Matrix T_operator(const Algebra& a, const SparseVec& x);

enum class DerivationChoice { inner, full };
// Flattened n x n operators: span of D_{x,y}, or der(A, bar).
Subspace derivation_choice(const Algebra& a, DerivationChoice c);

// (L_{s1} - R_{s2}, L_{s2} - R_{s0}, L_{s0} - R_{s1})
Triple ts_triple(const Algebra& a, const SparseVec& s0, const SparseVec& s1, const SparseVec& s2);
// T_S in the flattened triple space.
Subspace ts_space(const Algebra& a);
// d^<3> + T_S.
Subspace l_space(const Algebra& a, const Subspace& d);
// Sum over i of the spans of theta^i(delta(x,y)), delta structurable.
Subspace inlrt_space(const Algebra& a);

struct KantorAlgebra {
  Algebra algebra;
  Subspace d;     // flattened operators
  Subspace skew;  // S inside A
  Subspace k0;    // T_A + d, flattened operators
  Scalar alpha;
  SparseVec one;
  LieAlgebra lie;  // blocks K-2, K-1, K0, K1, K2
  Matrix chi, tau1, tau2;

  std::size_t offset(int degree) const { return lie.block_offset(static_cast<std::size_t>(degree + 2)); }
  // Embeddings of the pieces into K.
  SparseVec in_k1(const SparseVec& x, bool tilde) const;
  SparseVec in_k2(const SparseVec& s, bool tilde) const;  // s in A, must be skew
  SparseVec in_k0(const Matrix& f) const;                 // f in T_A + d
  Matrix k0_operator(std::size_t u) const;
  // Operator of a vector supported on K0.
  Matrix operator_of(const SparseVec& v) const;

  Matrix sigma(const Scalar& beta) const;
  GroupAction action() const { return {"V4", {{"tau1", tau1}, {"tau2", tau2}}}; }
  // eps_0, eps_1, eps_2 of an element of A.
  SparseVec epsilon(int i, const SparseVec& x) const;
  // Joint eigenspace of tau1, tau2 with signs (s1, s2).
  Subspace block(int s1, int s2) const;
};

KantorAlgebra kantor_build(const Algebra& a, const Subspace& d, const Scalar& alpha);
KantorAlgebra kantor_build(const Algebra& a, DerivationChoice c, const Scalar& alpha);

// Grading, Jacobi, chi/sigma/tau automorphisms and relations, block shapes, eps table.
Report kantor_verify(const KantorAlgebra& k);
Report epsilon_table_check(const KantorAlgebra& k);

Report lemma41(const Algebra& a, const Subspace& d);

// p must lie in K_(00); [p, eps_i(x)] = eps_i(delta_i(p) x).
Triple psi(const KantorAlgebra& k, const SparseVec& p);
Report psi_check(const KantorAlgebra& k);

struct AFAlgebra {
  Algebra algebra;
  std::array<Scalar, 3> gamma;
  Subspace v;      // flattened triples (T1, T2, T3)
  LieAlgebra lie;  // blocks v, A12, A23, A31
  std::size_t index(int block, std::size_t a) const { return v.dim() + static_cast<std::size_t>(block) * algebra.dim() + a; }
};

AFAlgebra af_build(const Algebra& a, const std::array<Scalar, 3>& gamma, const Subspace& v);
AFAlgebra af_build(const Algebra& a, const std::array<Scalar, 3>& gamma, DerivationChoice c = DerivationChoice::inner);

// K(A, d) with alpha against AF(A, (1, -1, 2 alpha), l(A, d)).
Report psi_iso_check(const Algebra& a, const Subspace& d, const Scalar& alpha);

struct KantorS4 {
  KantorAlgebra kantor;
  Matrix basis;  // columns: new basis in K coordinates
  LieAlgebra lie;  // blocks t, iota0, iota1, iota2
  GroupAction action;
};
// alpha = 2, iota0 = i eps0, iota1 = i eps1, iota2 = -eps2 / 2.
KantorS4 kantor_s4(const Algebra& a, const Subspace& d);
KantorS4 kantor_s4(const Algebra& a, DerivationChoice c = DerivationChoice::inner);
// [iota_i x, iota_{i+1} y] = iota_{i+2}(conj(xy)) and verify_group_action.
Report kantor_s4_check(const KantorS4& s);
// Against AF(A, (-1, -1, -1), l(A, d)): p -> (d1, d2, d0), iota_i(x) -> -x[12], -x[23], -x[31].
Report kantor_s4_af_check(const KantorS4& s);

}  // namespace s4lie
