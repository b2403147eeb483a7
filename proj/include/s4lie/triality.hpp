#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "s4lie/algebra.hpp"

namespace s4lie {

inline int mod3(int i) { return ((i % 3) + 3) % 3; }

// (d0, d1, d2) of operators on A.
struct Triple {
  std::array<Matrix, 3> d;

  Triple() = default;
  Triple(Matrix d0, Matrix d1, Matrix d2) : d{std::move(d0), std::move(d1), std::move(d2)} {}
  static Triple zero(std::size_t n, const Field& f);
  static Triple diagonal(const Matrix& m) { return Triple(m, m, m); }

  const Matrix& operator[](int i) const { return d[mod3(i)]; }
  Matrix& operator[](int i) { return d[mod3(i)]; }
  std::size_t dim() const { return d[0].rows(); }

  Triple operator+(const Triple& o) const;
  Triple operator-(const Triple& o) const;
  Triple operator-() const;
  Triple scaled(const Scalar& c) const;
  bool is_zero() const;

  // Component i occupies [i n^2, (i+1) n^2), row-major.
  SparseVec flatten() const;
  static Triple unflatten(const SparseVec& v, std::size_t n, const Field& f);

  friend bool operator==(const Triple&, const Triple&) = default;
};

Triple bracket(const Triple& a, const Triple& b);
// (d0,d1,d2) -> (d2,d0,d1)
Triple theta(const Triple& t);
Triple theta_power(const Triple& t, int k);
// (d0,d1,d2) -> (bar d0, bar d2, bar d1), bar d = B d B
Triple xi(const Algebra& a, const Triple& t);

bool in_stri(const Algebra& a, const Triple& t);
bool in_lrt(const Algebra& a, const Triple& t);
// Solution spaces in the flattened 3n^2 coordinates.
Subspace stri_space(const Algebra& a);
Subspace lrt_space(const Algebra& a);
std::vector<Triple> stri_solve(const Algebra& a);
// Also checks that the direct lrt solve agrees with stri of the star algebra.
std::vector<Triple> lrt_solve(const Algebra& a);

// Skew bilinear map A x A -> triples, stored on basis pairs a < b.
class DeltaMap {
 public:
  DeltaMap() = default;
  static DeltaMap unchecked(const Field& f, std::size_t n, std::vector<Triple> values);
  static DeltaMap from_function(const Field& f, std::size_t n,
                                const std::function<Triple(std::size_t, std::size_t)>& fn);
  // Every value must lie in stri(A,*) (lrt(A,.,bar) when lrta); throws an axiom error otherwise.
  static DeltaMap verified(const Algebra& a, DeltaMap m, bool lrta);

  std::size_t dim() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  std::size_t pair_count() const noexcept { return values_.size(); }
  static std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n) {
    return a * n - a * (a + 1) / 2 + (b - a - 1);
  }

  // Stored value for a < b.
  const Triple& stored(std::size_t a, std::size_t b) const { return values_[pair_index(a, b, n_)]; }
  bool vanishes(std::size_t a, std::size_t b) const;
  Triple at(std::size_t a, std::size_t b) const;
  // delta_i(e_a, e_b)
  Matrix component(int i, std::size_t a, std::size_t b) const;
  // delta_i(e_a, e_b)(z)
  SparseVec apply(int i, std::size_t a, std::size_t b, const SparseVec& z) const;
  Triple eval(const SparseVec& x, const SparseVec& y) const;
  Matrix eval_component(int i, const SparseVec& x, const SparseVec& y) const;

  // First pair whose value falls outside stri (lrt), if any.
  std::optional<std::pair<std::size_t, std::size_t>> membership_violation(const Algebra& a, bool lrta) const;

  DeltaMap with_component_scaled(int i, const Scalar& c) const;
  const std::vector<Triple>& values() const noexcept { return values_; }

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;

 private:
  std::size_t n_ = 0;
  Field field_;
  std::vector<Triple> values_;
};

// Structurable delta: (R_{xb y - yb x} + L_y L_xb - L_x L_yb, L_yb L_x - L_xb L_y, R_yb R_x - R_xb R_y)
Triple delta_structurable(const Algebra& a, const SparseVec& x, const SparseVec& y);
DeltaMap delta_structurable_map(const Algebra& a);

// t_{x,y} = (sigma_{x,y}, q(x,y)/2 id - r_x l_y, q(x,y)/2 id - l_x r_y)
Triple composition_triple(const Algebra& s, const SparseVec& x, const SparseVec& y);
// delta(a(x)x, b(x)y) = q'(x,y) t_{a,b} (x) id + q(a,b) id (x) t'_{x,y}
DeltaMap delta_tensor(const Algebra& s, const Algebra& t);

struct CheckOptions {
  std::size_t exhaustive_limit_first = 16;  // condition (i)
  std::size_t exhaustive_limit_rest = 64;   // conditions (ii)-(vi)
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  bool force_exhaustive = false;
  bool force_sampled = false;
};

Report check_sta(const Algebra& a, const DeltaMap& delta, const CheckOptions& opt = {});
Report check_lrta(const Algebra& a, const DeltaMap& delta, const CheckOptions& opt = {});

SparseVec degree5_value(const Algebra& a, const SparseVec& x, const SparseVec& y, const SparseVec& z,
                        const SparseVec& u, const SparseVec& v);
Report check_degree5(const Algebra& a, std::size_t samples, std::uint64_t seed);

// delta_0 on basis pairs from delta_1, delta_2 via the triality relation
// delta_0(x,y)(u*v) = delta_1(x,y)(u)*v + u*delta_2(x,y)(v). Uses the star
// product when lrta is set. Result keeps delta_1, delta_2 and fills delta_0.
DeltaMap derive_delta0(const Algebra& a, const DeltaMap& delta, bool lrta);

}  // namespace s4lie
