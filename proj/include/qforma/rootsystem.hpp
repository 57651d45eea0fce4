#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qforma/linalg.hpp"
#include "qforma/rational.hpp"

namespace qforma {

// One irreducible factor of a Cartan type, e.g. {'B', 2}.
struct SimpleFactor {
  char letter = 'A';
  int rank = 1;

  friend bool operator==(const SimpleFactor& a, const SimpleFactor& b) {
    return a.letter == b.letter && a.rank == b.rank;
  }
};

// A (possibly composite) Cartan type such as "A3" or "B2xG2".
// Allowed factors: A(>=1), B(>=2), C(>=2), D(>=3), E6, E7, E8, F4, G2.
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<SimpleFactor> factors);

  // Parses "A3", "G2", "B2xG2", ... Throws std::invalid_argument on bad input.
  static CartanType parse(const std::string& text);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int rank() const;
  bool is_simple() const { return factors_.size() == 1; }
  std::string to_string() const;

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<SimpleFactor> factors_;
};

// Weights are written in fundamental-weight coordinates. Module weights are
// always integral, so plain integer vectors suffice.
using Weight = std::vector<long long>;

// A reduced root system with a fixed base, in the standard numbering.
//
// Roots are stored as integer coefficient vectors over the simple roots and
// addressed by signed indices: +k is the k-th positive root (1-based, ordered
// by height then ascending lexicographic coefficients), -k its negative.
class RootSystem {
 public:
  explicit RootSystem(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  // Cartan matrix entry <alpha_i, alpha_j^vee>, 0-based indices.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  // Half the squared length of alpha_i (short roots have squared length 2).
  int d(int i) const { return dsym_[i]; }

  // --- roots -------------------------------------------------------------

  // Coefficients of a root over the simple roots (signed index).
  std::vector<int> root_coeffs(int signed_index) const;
  // Sum of the coefficients (negative for negative roots).
  int height(int signed_index) const;
  // Signed index of a coefficient vector, or nullopt if it is not a root.
  std::optional<int> index_of(const std::vector<int>& coeffs) const;
  // Signed index of alpha + beta, or nullopt if the sum is not a root.
  std::optional<int> sum_root(int a, int b) const;
  // Squared length (alpha, alpha).
  BigRational norm2(int signed_index) const;
  // Bilinear form value (alpha, beta) for two roots.
  BigRational root_bilinear(int a, int b) const;
  // Integer pairing <alpha, beta^vee> = 2 (alpha,beta) / (beta,beta).
  int pairing(int a, int b) const;
  // Integer pairing <alpha, alpha_j^vee> with a simple root, 0-based j.
  int pairing_with_simple(int a, int j) const;
  // Greatest p >= 0 such that alpha - p*beta is a root (alpha != +-beta).
  int chain_down(int a, int b) const;

  // --- weights -------------------------------------------------------------

  // Fundamental coordinates of the root with the given signed index.
  Weight root_as_weight(int signed_index) const;
  // Coefficients over the simple roots: solves C^T c = m.
  std::vector<BigRational> to_root_basis(const Weight& m) const;
  // Fundamental coordinates of a root-basis integer vector.
  Weight from_root_basis(const std::vector<int>& coeffs) const;
  // Simple reflection s_i applied to a weight, 0-based i.
  Weight reflect(int i, const Weight& m) const;
  // The antidominant Weyl-orbit representative (equals w_0 * m for
  // dominant m).
  Weight antidominant(const Weight& m) const;
  // Whether the irreducible module with highest weight m is self-dual.
  bool is_self_dual(const Weight& m) const;
  // Sum of the root-basis coefficients of a weight.
  BigRational coefficient_sum(const Weight& m) const;
  // Whether a weight lies in the root lattice.
  bool in_root_lattice(const Weight& m) const;
  // Coset of the weight modulo the root lattice, as the vector of fractional
  // parts of its root-basis coefficients.
  std::vector<BigRational> root_lattice_coset(const Weight& m) const;
  // Order of the weight lattice modulo the root lattice (|det C|).
  BigInt fundamental_group_order() const;
  // Weyl dimension of the irreducible module with dominant highest weight m.
  BigInt weyl_dimension(const Weight& m) const;
  // Invariant bilinear form on weights (normalized so short roots have
  // squared length 2 in each simple factor).
  BigRational weight_bilinear(const Weight& a, const Weight& b) const;
  // Half-sum of positive roots: all fundamental coordinates equal 1.
  Weight rho() const { return Weight(static_cast<size_t>(rank_), 1); }
  bool is_dominant(const Weight& m) const;

 private:
  void build_cartan();
  void generate_roots();

  CartanType type_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> dsym_;
  std::vector<std::vector<int>> positive_;
  std::vector<int> pos_height_;
  std::map<std::vector<int>, int> index_;  // coeffs -> 1-based positive index
  Mat<BigRational> cartan_inv_t_;          // (C^T)^{-1}
};

}  // namespace qforma
