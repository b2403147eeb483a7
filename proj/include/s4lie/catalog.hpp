#pragma once

#include <span>
#include <string>
#include <vector>

#include "s4lie/liebuild.hpp"

namespace s4lie {

// Algebra plus delta map; lrta selects which construction it feeds.
struct Datum {
  Algebra algebra;
  DeltaMap delta;
  bool lrta = false;
};

// Cayley-Dickson doubling from the ground field, (a + bu)(c + du) = (ac + mu dbar b) + (da + b cbar)u.
// Standard involution and norm q(a + bu) = q(a) - mu q(b) attached; the
// composition law is verified before returning.
Algebra hurwitz(const Field& f, std::span<const Scalar> params, std::string name = {});
Algebra hurwitz_by_dim(std::size_t dim, const Field& f = {});
// x * y = xbar ybar on the same space and norm; no involution.
Algebra para(const Algebra& c);
// Trace-zero 3x3 matrices over Q(sqrt -3), x*y = mu xy + (1-mu) yx - tr(xy)/3.
// Basis E12, E13, E21, E23, E31, E32, E11-E22, E22-E33.
Algebra okubo();

// Lie algebras as algebras whose product is the bracket.
Algebra lie_sl2(const Field& f = {});        // basis h, e, f
Algebra lie_so3(const Field& f = {});        // [e_i, e_{i+1}] = e_{i+2}
Algebra lie_abelian(std::size_t n, const Field& f = {});
// Throws an axiom error when the product is not skew or Jacobi fails.
void require_lie(const Algebra& l);

Datum tensor_sta(const Algebra& s, const Algebra& t);
// Symmetric n x n matrices, x.y = (xy + yx)/2, bar = id, delta_i = -[L_x, L_y].
// Basis E_11..E_nn, then E_ij + E_ji for i < j.
Datum jordan_sym(std::size_t n, const Field& f = {});
Datum lie_as_lrta(const Algebra& l);
// Same algebra read as an STA: product [x,y], delta = ad_{[x,y]} three times.
Datum lie_as_sta(const Algebra& l);
// l has its even part spanned by the first even_dim basis vectors.
Datum lts_from_graded(const Algebra& l, std::size_t even_dim);
Datum structurable(const Algebra& a);
Datum direct_sum_datum(const Datum& a, const Datum& b);

// phi(e_i) = e_{i+1} on lie_so3.
Matrix so3_rotation(const Field& f = {});
// i -> j -> k on the quaternion part of octonions built with params (-1,-1,-1).
Matrix octonion_rotation(const Field& f = {});

Datum twist_by_automorphism(const Datum& d, const Matrix& phi);
// Phi(iota*_i x) = iota_i(phi^i x), Phi(d0,d1,d2) = (d0, phi d1 phi^2, phi^2 d2 phi). STA data only.
Report twist_isomorphism_check(const Datum& original, const Datum& twisted, const Matrix& phi);

// inder(J) + s (x) J with [s(x)x, t(x)y] = [s,t](x)x.y + c kappa(s,t)[L_x,L_y], basis matching g.
LieAlgebra jordan_tits_target(const Construction& g, const Scalar& c);
// Identity map g(J) -> inder(J) + s (x) J for the given kappa coefficient.
Report jordan_tits_check(std::size_t n, const Scalar& c);
// g(L, [,], -id) -> L^4 with iota_i(x) -> s_i x (x) e_i, s = (1, -1, 1).
Report lie_lrta_isomorphism_check(const Algebra& l);
// g(A) -> l^3 for lts_from_graded.
Report lts_isomorphism_check(const Algebra& l, std::size_t even_dim);

enum class EntryKind { hurwitz, composition, sta, lrta };
const char* entry_kind_name(EntryKind k);

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::composition;
  Datum datum;  // delta empty for hurwitz and composition entries
};

// "octonion", "para-octonion", "okubo", "sym3", "lie:sl2", "lie-sta:so3", "lts:sl2",
// "structurable:quaternion", "tensor:X,Y", "twist:so3", "twist:para-octonion", "sum:X+Y".
CatalogEntry catalog_entry(const std::string& name);
std::vector<std::string> catalog_names();
// The checker matching the entry kind.
Report check_entry(const CatalogEntry& e, const CheckOptions& opt = {});
// Composition law, involution and unit.
Report check_hurwitz(const Algebra& c);

// g for tensor_sta(para(C_ds), para(C_dt)), ds, dt in {1, 2, 4, 8}.
Construction magic_square(std::size_t ds, std::size_t dt, const BuildOptions& opt = {});

}  // namespace s4lie
