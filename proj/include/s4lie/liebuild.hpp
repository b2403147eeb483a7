#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "s4lie/triality.hpp"

namespace s4lie {

// klein: grade is a 2-bit mask (bit 0 set when tau1 = -1, bit 1 when tau2 = -1),
// combined by xor. integer: grades -2..2 added, zero outside.
enum class GradingKind { klein, integer };

struct Block {
  std::string label;
  std::size_t dim = 0;
  int grade = 0;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  // table[i*n + j] = [e_i, e_j]; must be antisymmetric with empty diagonal.
  LieAlgebra(const Field& f, std::vector<Block> blocks, GradingKind kind, std::vector<SparseVec> table);
  // Entries with i < j only; the rest follows by antisymmetry.
  static LieAlgebra from_entries(const Field& f, std::vector<Block> blocks, GradingKind kind,
                                 std::span<const MulEntry> entries);

  const Field& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  GradingKind grading() const { return kind_; }
  std::size_t block_offset(std::size_t b) const { return offsets_[b]; }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }
  // Index of the block with this label; throws unknown_name.
  std::size_t block_index(const std::string& label) const;

  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  Matrix ad(const SparseVec& x) const;
  const Matrix& ad_basis(std::size_t i) const { return ad_[i]; }
  SparseVec basis(std::size_t i) const { return SparseVec::unit(static_cast<Index>(i), field_); }

  std::vector<MulEntry> entries() const;
  // Same blocks and grading, new table.
  LieAlgebra with_table(std::vector<SparseVec> table) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  Field field_;
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
  GradingKind kind_ = GradingKind::klein;
  std::vector<std::size_t> offsets_, block_of_;
  std::vector<SparseVec> table_;
  std::vector<Matrix> ad_;
};

struct GroupAction {
  std::string group;  // "A4", "S4", or "V4" (tau1, tau2 only)
  std::vector<std::pair<std::string, Matrix>> generators;

  const Matrix* find(const std::string& name) const;
  const Matrix& get(const std::string& name) const;
};

// V4 action whose tau1, tau2 are the sign characters of a klein grading.
GroupAction klein_action(const LieAlgebra& l);

// Output of construct_g_sta / construct_g_lrta.
struct Construction {
  LieAlgebra lie;
  GroupAction action;
  Algebra algebra;
  DeltaMap delta;
  bool lrta = false;
  Subspace t;  // in the flattened 3n^2 triple space; lie basis starts with t.basis()
  std::size_t t_dim() const { return t.dim(); }
  std::size_t iota(int i, std::size_t a) const { return t.dim() + static_cast<std::size_t>(mod3(i)) * algebra.dim() + a; }
};

struct BuildOptions {
  bool force = false;   // skip the axiom check
  bool verify = false;  // run Jacobi, grading and action checks after building
  CheckOptions check;
};

Construction construct_g_sta(const Algebra& a, const DeltaMap& delta, const BuildOptions& opt = {});
Construction construct_g_lrta(const Algebra& a, const DeltaMap& delta, const BuildOptions& opt = {});

struct JacobiMode {
  bool full = true;
  std::size_t samples = 20000;
  std::uint64_t seed = 0;
  static JacobiMode sampled(std::size_t count, std::uint64_t seed) { return {false, count, seed}; }
  // Full up to dim 80, sampled above.
  static JacobiMode automatic(std::size_t dim, std::uint64_t seed = 0) {
    return dim <= 80 ? JacobiMode{} : sampled(20000, seed);
  }
};

Report verify_jacobi(const LieAlgebra& l, const JacobiMode& mode);
Report verify_grading(const LieAlgebra& l);
Report verify_group_action(const LieAlgebra& l, const GroupAction& action);
// g[e_i, e_j] = [g e_i, g e_j] on all basis pairs; condition "automorphism <name>".
Check check_automorphism(const LieAlgebra& l, const Matrix& g, const std::string& name);
// Jacobi (automatic mode), grading and action.
Report verify_all(const LieAlgebra& l, const GroupAction& action, std::uint64_t seed = 0);

struct Extracted {
  Algebra algebra;  // product x*y (A4) or x.y with involution (S4)
  DeltaMap delta;
  bool lrta = false;
};
Extracted extract_coordinate_algebra(const LieAlgebra& l, const GroupAction& action);

// Killing form matrix kappa(e_i, e_j).
Matrix killing_form(const LieAlgebra& l);

enum class SimpleVerdict { simple, invariant_ideal, inconclusive };
struct SimplicityResult {
  SimpleVerdict verdict = SimpleVerdict::inconclusive;
  Subspace ideal;                 // witness for invariant_ideal
  std::size_t centroid_dim = 0;   // fixed centroid, when computed
  bool killing_nondegenerate = false;
  std::string detail;
};
SimplicityResult is_simple_with_action(const LieAlgebra& l, const GroupAction& action, std::uint64_t seed = 0);
const char* verdict_name(SimpleVerdict v);

// u12(a) = -iota0(a), u23(a) = -iota1(a), u31(a) = -iota2(a), u_ji(a) = u_ij(-abar);
// checks [u_ij(a), u_jk(b)] = u_ik(ab) and the S4 formulas on the images.
Report steinberg_relations_check(const Construction& g);

// psi has dst.dim() rows and src.dim() columns (images of the src basis).
// Checks bijectivity, [psi a, psi b] = psi [a, b] on basis pairs and, when both
// actions are given, psi g = g' psi for every generator of src_action.
Report check_lie_isomorphism(const LieAlgebra& src, const LieAlgebra& dst, const Matrix& psi,
                             const GroupAction* src_action = nullptr, const GroupAction* dst_action = nullptr);

// Action of phi(d) on block i+1 equals the action of d on block i.
Report rho_compatibility_check(const Construction& g);

}  // namespace s4lie
