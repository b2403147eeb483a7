#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "s4lie/linalg.hpp"
#include "s4lie/report.hpp"

namespace s4lie {

// e_i e_j += c e_k
struct MulEntry {
  Index i, j, k;
  Scalar c;
};

// Finite-dimensional algebra given by structure constants, with optional
// involution B (x -> Bx) and optional polar form matrix Q (q(x,y) = x^T Q y).
class Algebra {
 public:
  Algebra() = default;
  // No validation beyond index ranges; see make_algebra.
  Algebra(const Field& f, std::size_t n, std::span<const MulEntry> mul, std::optional<Matrix> involution = {},
          std::optional<Matrix> form = {}, std::string name = {});
  // table[i*n + j] = e_i e_j.
  static Algebra from_table(const Field& f, std::size_t n, std::vector<SparseVec> table,
                            std::optional<Matrix> involution = {}, std::optional<Matrix> form = {},
                            std::string name = {});

  const Field& field() const { return d_->field; }
  std::size_t dim() const { return d_ ? d_->n : 0; }
  const std::string& name() const { return d_->name; }

  const SparseVec& basis_product(std::size_t i, std::size_t j) const { return d_->table[i * d_->n + j]; }
  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  // Left multiplication l_x: z -> x z; right r_x: z -> z x.
  Matrix left(const SparseVec& x) const;
  Matrix right(const SparseVec& x) const;
  const Matrix& left_basis(std::size_t i) const { return d_->left[i]; }
  const Matrix& right_basis(std::size_t i) const { return d_->right[i]; }
  bool zero_product() const;

  bool has_involution() const { return d_->involution.has_value(); }
  const Matrix& involution() const;
  SparseVec bar(const SparseVec& x) const { return involution().apply(x); }
  // d -> B d B
  Matrix bar_operator(const Matrix& d) const;

  bool has_form() const { return d_->form.has_value(); }
  const Matrix& form() const;
  Scalar polar(const SparseVec& x, const SparseVec& y) const;
  Scalar quadratic(const SparseVec& x) const;

  std::vector<MulEntry> mul_entries() const;

  Algebra with_involution(std::optional<Matrix> b) const;
  Algebra with_form(std::optional<Matrix> q) const;
  Algebra with_name(std::string name) const;

  SparseVec basis(std::size_t i) const { return SparseVec::unit(static_cast<Index>(i), field()); }

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  struct Data {
    Field field;
    std::size_t n = 0;
    std::vector<SparseVec> table;
    std::vector<Matrix> left, right;
    std::optional<Matrix> involution, form;
    std::string name;
  };
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static std::shared_ptr<const Data> build(Data d);
  std::shared_ptr<const Data> d_;
};

// Returns a description of the first violation, or nothing.
std::optional<std::string> involution_violation(const Algebra& a);
std::optional<std::string> form_violation(const Algebra& a);

// Validates eagerly: B^2 = id, involution law, Q symmetric.
Algebra make_algebra(const Field& f, std::size_t n, std::span<const MulEntry> mul,
                     std::optional<Matrix> involution = {}, std::optional<Matrix> form = {}, std::string name = {});
void validate(const Algebra& a);

struct OperatorPair {
  Matrix left;
  Matrix right;
};
OperatorPair mult_operator(const Algebra& a, const SparseVec& x);

SparseVec commutator(const Algebra& a, const SparseVec& x, const SparseVec& y);
SparseVec associator(const Algebra& a, const SparseVec& x, const SparseVec& y, const SparseVec& z);

Report check_symmetric_composition(const Algebra& s);

// D_{x,y}(z) = 1/3[[x,y]+[xb,yb],z] + (z,y,x) - (z,xb,yb)
Matrix inner_derivation(const Algebra& a, const SparseVec& x, const SparseVec& y);
bool is_derivation(const Algebra& a, const Matrix& d);
// Flattened (row-major n^2) derivation matrices.
Subspace derivation_algebra(const Algebra& a, bool respect_involution);
Subspace inner_derivation_algebra(const Algebra& a);

Subspace ideal_closure(const Algebra& a, std::span<const SparseVec> generators,
                       std::span<const Matrix> extra_operators = {});

Subspace skew_elements(const Algebra& a);
Subspace hermitian_elements(const Algebra& a);
Subspace product_span(const Algebra& a);
std::optional<SparseVec> unit_element(const Algebra& a);

// x * y = bar(x . y); keeps involution and form.
Algebra star_algebra(const Algebra& a);
// Same structure constants read over a larger field; a must be rational.
Algebra extend_scalars(const Algebra& a, const Field& f);
Algebra direct_sum(const Algebra& a, const Algebra& b);
// (a (x) x)(b (x) y) = ab (x) xy, basis index a * dim(t) + x.
Algebra tensor_product(const Algebra& s, const Algebra& t, std::string name = {});
// Structure constants of the product (x, y) -> p(x) q(y) composed with an optional map afterwards.
Algebra twisted_product(const Algebra& a, const Matrix& p, const Matrix& q, std::string name = {});

}  // namespace s4lie
