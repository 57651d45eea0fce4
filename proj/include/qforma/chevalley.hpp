#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qforma/cyclotomic.hpp"
#include "qforma/rootsystem.hpp"

namespace qforma {

// An element of the complex semisimple Lie algebra attached to a root system,
// written over the basis {h_1..h_r} (simple coroots) and {x_a} (root vectors,
// signed root indices), with cyclotomic coefficients.
struct LieElt {
  std::vector<CyclotomicElem> h;       // length = rank
  std::map<int, CyclotomicElem> x;     // signed root index -> coefficient

  bool is_zero() const;
  void prune();                        // drop stored zero coefficients
};

LieElt operator+(const LieElt& a, const LieElt& b);
LieElt operator-(const LieElt& a, const LieElt& b);
LieElt operator*(const CyclotomicElem& c, const LieElt& a);
bool operator==(const LieElt& a, const LieElt& b);

struct StructureReport {
  bool jacobi = false;
  bool n_pattern = false;
  long long pairs_checked = 0;
};

// Which rational form of the compact real form to use.
struct QFormSpec {
  enum Kind { STANDARD, TWISTED } kind = STANDARD;
  // 0-based simple-root index tau for TWISTED: root vectors are scaled by
  // sqrt(3)^(coefficient of alpha_tau).
  int twist_index = 0;
};

struct QFormReport {
  bool bracket_closed = false;
  bool spans_over_r = false;
};

// A Cartan-preserving linear involution theta with theta(x_a) = c_a x_{th(a)}.
struct InvolutionSpec {
  std::map<int, int> root_image;             // signed index -> signed index
  std::map<int, CyclotomicElem> scalar;      // signed index -> c_a
};

struct NormalizedInvolution {
  std::vector<CyclotomicElem> rescale;       // t_i per simple root
  std::map<int, CyclotomicElem> new_scalar;  // scalars after rescaling
};

class ChevalleySystem {
 public:
  explicit ChevalleySystem(RootSystem rs);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  int dim() const { return rs_.rank() + 2 * rs_.num_positive(); }

  // Structure constant N(a, b) with [x_a, x_b] = N(a, b) x_{a+b}, in the
  // convention where [x_a, x_{-a}] = -h_a* and N(a, b) = N(-a, -b).
  // Requires alpha + beta to be a root.
  BigInt structure_constant(int a, int b) const;

  // Integer coefficients of the coroot h_a* over the simple coroots h_i.
  std::vector<BigInt> coroot_coeffs(int a) const;

  LieElt zero() const;
  LieElt basis_h(int i) const;          // h_i, 0-based simple index
  LieElt basis_x(int a) const;          // x_a, signed root index
  LieElt coroot(int a) const;           // h_a*
  LieElt bracket(const LieElt& u, const LieElt& v) const;

  // Flattens an element to rational coordinates: each cyclotomic coefficient
  // contributes its 8 coordinates over the degree-24 cyclotomic basis.
  // Requires every coefficient order to divide 24.
  std::vector<BigRational> flatten(const LieElt& e) const;

  // Checks the Jacobi identity on basis triples (exhaustively if `exhaustive`,
  // otherwise `samples` pseudorandom triples drawn from `seed`) and the sign
  // and magnitude pattern of the structure constants:
  //   N(a,b) = N(-a,-b) and |N(a,b)| = p + 1
  // where p is the largest integer with alpha - p*beta still a root.
  StructureReport verify_structure_constants(bool exhaustive,
                                             unsigned long long seed = 0,
                                             int samples = 500) const;

  // Rational basis of the compact real form (standard) or of its
  // sqrt(3)-rescaled variant (twisted): {i h_i} together with
  // {s_a (x_a + x_-a), s_a i (x_a - x_-a)} over the positive roots.
  std::vector<LieElt> qform_basis(const QFormSpec& spec) const;

  // Scale factor s_a applied to the root-vector pair of positive root a.
  CyclotomicElem qform_scale(const QFormSpec& spec, int a) const;

  // Verifies that the rational span of qform_basis is closed under the
  // bracket and has rational rank equal to dim().
  QFormReport verify_qform(const QFormSpec& spec) const;

  // The rank-one compact subalgebra attached to a root: {i h_a*, x_a + x_-a,
  // i (x_a - x_-a)}, satisfying the cyclic relations [b1,b2] = 2 b3,
  // [b2,b3] = 2 b1, [b3,b1] = 2 b2.
  std::array<LieElt, 3> su2_subalgebra(int a) const;

  // Applies an involution spec to a Lie algebra element:
  // x_a -> c_a x_{th(a)}, h -> induced map on the Cartan subalgebra
  // (h_a* -> h_{th(a)}*).
  LieElt apply_involution(const InvolutionSpec& spec, const LieElt& e) const;

  // Checks the involution invariants: th is an involution on roots,
  // c_{-a} = 1/c_a = c_{th(a)}, and compatibility with the bracket.
  // Throws std::invalid_argument on violation.
  void validate_involution(const InvolutionSpec& spec) const;

  // Extends images/scalars given on the simple roots to a full spec using
  // multiplicativity over the bracket.
  InvolutionSpec extend_involution(
      const std::vector<int>& simple_images,
      const std::vector<CyclotomicElem>& simple_scalars) const;

  // Rescales the root vectors (x_a' = t_a x_a with t_a a 24th root of unity,
  // multiplicative over root addition) so that the involution scalars become
  // fourth roots of unity. Requires each scalar on a simple root to have a
  // square root among the 24th roots of unity; throws hypothesis_error
  // otherwise, std::logic_error if the postcondition fails to verify.
  NormalizedInvolution normalize_for_involution(const InvolutionSpec& spec) const;

 private:
  // Structure constant in the variant convention where [x_a, x_{-a}] = +h_a*;
  // rational intermediates, integer results.
  BigRational carter_constant(int a, int b) const;
  // The first positive root e (in root order) with gamma - e a positive root,
  // paired with gamma - e.
  std::pair<int, int> extraspecial_pair(int gamma) const;

  RootSystem rs_;
  mutable std::map<std::pair<int, int>, BigRational> carter_memo_;
};

}  // namespace qforma
