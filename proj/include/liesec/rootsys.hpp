#pragma once

// Root-system core: Cartan data for the simply-laced and classical families,
// exact inverse Cartan, positive roots with coroots, reflections, Weyl
// dimension formula, grading elements, and Levi sub-root-systems.
//
// Conventions. Cartan matrix C_ij = <alpha_i, alpha_j^vee>, so the simple
// root expands as alpha_i = sum_j C_ij omega_j and the simple reflection acts
// on fundamental coordinates by s_i(lambda)_j = lambda_j - lambda_i * C_ij.
// Node numbering: A_n path 1..n; B_n/C_n path with the short/long root last;
// D_n fork at n-2 (nodes n-1 and n both attached to n-2); E6 edges
// 1-3, 3-4, 4-5, 5-6, 2-4; E7 additionally 6-7.

#include <string>
#include <vector>

#include "liesec/linalg.hpp"
#include "liesec/rational.hpp"

namespace liesec {

enum class Family { A, B, C, D, E };

// A weight in fundamental coordinates (coordinates may be negative).
struct Weight {
  std::vector<long long> fc;

  int rank() const { return static_cast<int>(fc.size()); }
  bool operator==(const Weight& o) const = default;
};

// Marked nodes of a parabolic (1-based node indices, sorted).
struct ParabolicMarking {
  std::vector<int> nodes;
};

struct PositiveRoot {
  std::vector<long long> simple;  // coordinates in the simple-root basis
  std::vector<long long> covec;   // alpha^vee in the simple-coroot basis: <lambda, alpha^vee> = covec . lambda
  std::vector<long long> fund;    // the root in fundamental coordinates
};

class RootSystem {
 public:
  // Standard families. Supported: A (rank 1..9), B/C/D (rank <= 8, D >= 3... D >= 2 unused),
  // E (rank 6 or 7).
  static RootSystem build(Family f, int rank);
  static RootSystem build(const std::string& label);  // "A6", "D7", "E6", ...

  // Generic constructor from a Cartan matrix and symmetrizer d (d_i C_ij symmetric).
  static RootSystem from_cartan(std::string label, IMatrix cartan,
                                std::vector<Rational> symmetrizer);

  // Sub-root-system on the given 1-based node subset (parent indices kept as labels).
  RootSystem sub_system(const std::vector<int>& nodes) const;

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  const IMatrix& cartan() const { return cartan_; }
  const QMatrix& cartan_inverse() const { return cartan_inv_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_; }
  // Gram matrix of the invariant form on fundamental weights, scaled by form_scale_
  // to integer entries: (omega_i, omega_j) * form_scale = form_int(i,j).
  const IMatrix& form_int() const { return form_int_; }
  long long form_scale() const { return form_scale_; }
  // 1-based parent node labels (identity for standard systems).
  const std::vector<int>& node_labels() const { return node_labels_; }

  bool is_dominant(const Weight& w) const;
  Weight simple_reflection(int i, const Weight& w) const;  // i is 0-based here
  // <lambda, alpha^vee> for the a-th positive root.
  long long pairing(const Weight& w, const PositiveRoot& a) const;

  Weight rho() const { return Weight{std::vector<long long>(rank_, 1)}; }
  Int weyl_dim(const Weight& highest) const;

  // Value of the grading element Z_{i0} on a weight: sum_j lambda_j (C^{-1})_{j,i0}.
  // i0 is a 1-based node label of *this* system.
  Rational grading_element_eval(int i0_label, const Weight& w) const;

  // Dominant representative of the Weyl orbit.
  Weight dominantize(const Weight& w) const;
  // -w0(lambda): highest weight of the dual representation.
  Weight dual_weight(const Weight& w) const;

  // Height functional: ht(w) = r . w with C r = 1 scaled to integers; strictly
  // increases under reflection at a negative coordinate. Used for peel ordering.
  long long height_num(const Weight& w) const;

  // lambda - mu expressed in the simple-root basis; throws DomainError if not integral.
  std::vector<long long> root_coords(const Weight& lambda, const Weight& mu) const;

  // Scaled invariant form on fundamental-coordinate vectors: (v, u) * form_scale.
  long long form_apply(const std::vector<long long>& v, const std::vector<long long>& u) const;

  // Index (0-based) of node with the given 1-based parent label; -1 if absent.
  int index_of_label(int label) const;

 private:
  std::string label_;
  int rank_ = 0;
  IMatrix cartan_;
  QMatrix cartan_inv_;
  std::vector<Rational> sym_;  // d_i
  IMatrix form_int_;
  long long form_scale_ = 1;
  std::vector<PositiveRoot> positive_;
  std::vector<long long> height_r_;  // scaled integer height functional
  long long height_scale_ = 1;
  std::vector<int> node_labels_;

  void finish_build();
};

// Parse "A6" / "D7" / "E6" style labels.
Family family_from_char(char c);

}  // namespace liesec
