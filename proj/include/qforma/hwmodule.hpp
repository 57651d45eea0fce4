#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qforma/chevalley.hpp"
#include "qforma/linalg.hpp"
#include "qforma/rootsystem.hpp"

namespace qforma {

// Default bound on module dimensions; the CLI overrides it from the
// QFORMA_DIM_CAP environment variable.
inline constexpr long long kDefaultDimCap = 200;

// The finite-dimensional irreducible module with a given dominant integral
// highest weight, realized as the quotient of a Verma module by the radical
// of the contravariant form.
//
// Basis vectors are lowering-monomial images F_{i_1} ... F_{i_k} v of the
// highest vector, grouped by weight (weights ordered by level, then by
// ascending fundamental coordinates; vectors within a weight in the
// deterministic candidate order). All generator matrices are rational.
class HighestWeightModule {
 public:
  HighestWeightModule(const ChevalleySystem& cs, Weight lambda,
                      long long dim_cap = kDefaultDimCap);

  const ChevalleySystem& algebra() const { return *cs_; }
  const RootSystem& roots() const { return cs_->roots(); }
  const Weight& highest_weight() const { return lambda_; }
  long long dim() const { return dim_; }

  int num_weights() const { return static_cast<int>(weights_.size()); }
  const Weight& weight(int w) const { return weights_[static_cast<size_t>(w)]; }
  // Index of a weight, or -1 if it does not occur.
  int weight_index(const Weight& mu) const;
  long long multiplicity(int w) const {
    return static_cast<long long>(words_[static_cast<size_t>(w)].size());
  }
  // Offset of the first basis vector of weight w in the global basis order.
  long long basis_offset(int w) const { return offsets_[static_cast<size_t>(w)]; }
  // Weight index of a global basis position.
  int weight_of_basis(long long p) const {
    return basis_weight_[static_cast<size_t>(p)];
  }
  // The lowering word of a global basis position.
  const std::vector<int>& word_of_basis(long long p) const;

  // Generator matrices, 0-based simple index: [E_i, F_j] = delta_ij H_i.
  const Mat<BigRational>& e_matrix(int i) const { return e_[static_cast<size_t>(i)]; }
  const Mat<BigRational>& f_matrix(int i) const { return f_[static_cast<size_t>(i)]; }
  const Mat<BigRational>& h_matrix(int i) const { return h_[static_cast<size_t>(i)]; }

  // Matrix of the root vector x_a (signed root index, bracket convention of
  // ChevalleySystem); rational for every root.
  const Mat<BigRational>& root_matrix(int a) const;
  // Matrix of an arbitrary Lie algebra element.
  Mat<CyclotomicElem> act(const LieElt& e) const;

  // Contravariant form on the module: block-diagonal by weight, symmetric,
  // with B(v, v) = 1 on the highest vector and B(F_i u, w) = B(u, E_i w).
  const Mat<BigRational>& contravariant_gram() const;

  // Invariant bilinear pairing: Omega(X u, v) = -Omega(u, X v) for all X in
  // the algebra, normalized by Omega(v_high, b_low) = 1. Only defined for
  // self-dual highest weights (throws hypothesis_error otherwise).
  const Mat<BigRational>& invariant_pairing() const;
  // Symmetry sign of the invariant pairing: +1 symmetric, -1 antisymmetric.
  int pairing_symmetry() const;

  // Index pair (top, low) of the highest and lowest basis vectors.
  long long highest_position() const { return 0; }
  long long lowest_position() const;

  // Rational Weyl-group representative for the reflection in a root:
  // exp(e) exp(-f) exp(e) with e = x_a, f = -x_{-a} acting on the module.
  Mat<BigRational> weyl_representative(int a) const;

 private:
  void build();
  BigRational shapovalov(const std::vector<int>& u, const std::vector<int>& w) const;
  std::vector<BigRational> express_over_basis(int w_index,
                                              const std::vector<int>& word) const;
  Mat<BigRational> exp_nilpotent(const Mat<BigRational>& n) const;

  const ChevalleySystem* cs_;
  Weight lambda_;
  long long cap_;
  long long dim_ = 0;

  std::vector<Weight> weights_;                        // by level, then lex
  std::map<Weight, int> weight_index_;
  std::vector<std::vector<std::vector<int>>> words_;   // per weight: basis words
  std::vector<long long> offsets_;
  std::vector<int> basis_weight_;

  std::vector<Mat<BigRational>> e_, f_, h_;
  std::vector<Mat<BigRational>> gram_inv_;             // per weight block
  mutable std::map<int, Mat<BigRational>> root_mat_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, BigRational>
      shap_memo_;
  mutable Mat<BigRational> gram_full_{0, 0};
  mutable Mat<BigRational> omega_{0, 0};
  mutable int fs_sign_ = 0;
};

// Weyl dimension guarded by the cap: throws cap_exceeded if it is larger.
BigInt checked_dimension(const RootSystem& rs, const Weight& lambda,
                         long long cap);

}  // namespace qforma
