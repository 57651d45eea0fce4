#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qforma/hwmodule.hpp"
#include "qforma/numbertheory.hpp"

namespace qforma {

// ---------------------------------------------------------------------------
// Weight-level reality facts.
// ---------------------------------------------------------------------------

enum class FsIndicator { PLUS_ONE, MINUS_ONE, NOT_SELF_DUAL };

// Hypothesis bundle for the rationality questions about the irreducible
// module with highest weight lambda: self-duality, the sum of the
// coordinates of lambda over the simple roots, and membership in the root
// lattice. For self-dual lambda the indicator is +1 (orthogonal / real
// type) when the coordinate sum is an integer and -1 (symplectic /
// quaternionic type) when it is a half-integer.
struct WeightReport {
  Weight lambda;
  bool self_dual = false;
  BigRational coefficient_sum;
  bool sum_is_integer = false;
  bool in_root_lattice = false;
  FsIndicator fs_indicator = FsIndicator::NOT_SELF_DUAL;
};

WeightReport weight_report(const RootSystem& rs, const Weight& lambda);

// ---------------------------------------------------------------------------
// Rational (or subfield) lattices inside a built module.
// ---------------------------------------------------------------------------

// A finitely generated Q-span of module vectors. Basis vectors are kept
// weight-homogeneous; weight_of records the weight index of each one.
struct RationalLattice {
  std::vector<std::vector<CyclotomicElem>> basis;
  std::vector<int> weight_of;
};

// The Q-span of one highest-weight vector, the default seed lattice.
RationalLattice highest_line(const HighestWeightModule& m);

// Closes a seed lattice U inside the highest weight space under the
// lowering generators of the declared rational form (standard: F_i;
// twisted: sqrt(3)^[i = tau] F_i). The result is graded by weight and
// meets the highest weight space exactly in U.
RationalLattice qform_generate(const HighestWeightModule& m, const QFormSpec& qf,
                               const RationalLattice& u);
RationalLattice qform_generate(const HighestWeightModule& m, const QFormSpec& qf);

struct ModuleQFormReport {
  bool invariant = false;    // generator images stay in the Q-span
  bool spans = false;        // full rank over the coefficient field
  bool independent = false;  // Q-rank equals the module dimension
  bool all() const { return invariant && spans && independent; }
};

// The three closure/rank checks that certify a lattice as a rational form
// of the module for the declared rational form of the algebra.
ModuleQFormReport verify_qform_of_module(const HighestWeightModule& m,
                                         const QFormSpec& qf,
                                         const RationalLattice& lattice);

// Split-side generator matrices of the declared form acting on the module:
// standard {E_i, F_i, H_i}; twisted {sqrt(3)^[i=tau] E_i, sqrt(3)^[i=tau] F_i, H_i}.
std::vector<Mat<CyclotomicElem>> split_generators(const HighestWeightModule& m,
                                                  const QFormSpec& qf);

// Compact-side generator matrices expressed on the (scaled) lattice basis,
// with entries in Q(i): {i H_j} together with
// {3^[j=tau] E_j - F_j, i (3^[j=tau] E_j + F_j)} (tau-scaling absent for
// the standard form).
std::vector<Mat<CyclotomicElem>> compact_generators_on_lattice(
    const HighestWeightModule& m, const QFormSpec& qf);

// ---------------------------------------------------------------------------
// Real structures (conjugate-linear involutions).
// ---------------------------------------------------------------------------

// A conjugate-linear map v -> matrix * conj(v) on a built module that
// commutes with the compact rational form's action. After normalization
// the square is sign * identity: +1 in the real (orthogonal) case, -1 in
// the quaternionic (symplectic) case.
struct RealStructure {
  Mat<CyclotomicElem> matrix;  // entries in Q(i)
  int sign = 0;
  BigRational raw_square;  // scalar square of the unnormalized structure
};

// Builds the conjugate-linear structure from the invariant bilinear pairing
// composed with the inverse contravariant Gram matrix, then rescales by a
// Gaussian-rational unit so the square is +1 or -1 exactly.
RealStructure real_structure_selfdual(const HighestWeightModule& m);

// ---------------------------------------------------------------------------
// The twisted-form obstruction scalar.
// ---------------------------------------------------------------------------

// Data of the would-be conjugate-linear involution sigma' for the twisted
// rational form: every equivariant candidate is k * sigma, the lattice
// grading forces k = sqrt(3)^exponent * unit / q, and the square
// k * conj(k) has odd 3-adic valuation when the exponent is odd, so it is
// never 1 and no involution exists.
struct TwistedObstruction {
  int tau = -1;                        // 0-based simple index used for the twist
  long long exponent = 0;              // coefficient of alpha_tau in 2*lambda
  CyclotomicElem k;                    // sigma' = k * sigma
  CyclotomicElem k_prime;              // k / sqrt(3), in Q(i) when exponent is odd
  CyclotomicElem sigma_prime_squared;  // k * conj(k), a positive rational
  bool involution_attainable = false;  // is some unit rescaling an involution?
};

// Requires a self-dual module with a +1 real structure and an odd
// coefficient of alpha_tau in 2*lambda (throws hypothesis_error otherwise).
TwistedObstruction sigma_prime_twisted(const HighestWeightModule& m,
                                       const RealStructure& sigma, int tau);

// ---------------------------------------------------------------------------
// Commutants of rational matrix representations.
// ---------------------------------------------------------------------------

enum class CommutantKind { RATIONALS, QUADRATIC_FIELD, QUATERNION };

struct CommutantClass {
  bool irreducible = false;
  // Basis of a proper invariant subspace when the input is reducible.
  std::vector<std::vector<BigRational>> reducibility_witness;

  long long q_dimension = 0;
  CommutantKind kind = CommutantKind::RATIONALS;
  std::vector<Mat<BigRational>> basis;

  // QUADRATIC_FIELD: discriminant of the minimal polynomial of a
  // non-central basis element; negative means imaginary quadratic.
  std::optional<BigRational> discriminant;

  // QUATERNION: squarefree parameters (a, b) with generators u^2 = a,
  // v^2 = b, uv = -vu, and the even-size set of ramified places.
  std::optional<std::pair<BigInt, BigInt>> quaternion_params;
  std::optional<std::vector<Place>> ramification;
};

// Solves [X, g] = 0 exactly for all generators and classifies the solution
// algebra. A deterministic seeded search for proper invariant subspaces
// runs first; a reducible input is reported with a witness, not classified.
CommutantClass commutant(const std::vector<Mat<BigRational>>& generators,
                         unsigned long long seed = 0);

enum class RVerdict { IRREDUCIBLE_OVER_R, REDUCIBLE_OVER_R };

// RATIONALS and imaginary quadratic commutants stay irreducible over R;
// real quadratic splits; a quaternion commutant stays irreducible exactly
// when the infinite place ramifies.
RVerdict r_irreducibility_verdict(const CommutantClass& c);

// Restriction of scalars from Q(i) to Q: each entry a + b i becomes the
// 2x2 block [[a, -b], [b, a]]. Throws hypothesis_error if an entry is not
// in Q(i).
Mat<BigRational> realify_gaussian(const Mat<CyclotomicElem>& m);

// ---------------------------------------------------------------------------
// End-to-end verdicts.
// ---------------------------------------------------------------------------

enum class QFormVerdict { HAS_Q_FORM, NO_Q_FORM };

struct QFormDecision {
  QFormVerdict verdict = QFormVerdict::NO_Q_FORM;
  std::optional<RationalLattice> witness;
  std::optional<ModuleQFormReport> witness_report;
  std::optional<RealStructure> sigma;
  std::optional<TwistedObstruction> obstruction;
};

// Does the real form of the irreducible module with highest weight lambda
// admit a rational form with respect to the declared rational form of the
// algebra? Requires lambda dominant and self-dual with +1 indicator (a
// real form must exist); throws hypothesis_error otherwise and
// cap_exceeded when the dimension bound is hit.
QFormDecision has_q_form_verdict(const RootSystem& rs, const Weight& lambda,
                                 const QFormSpec& qf,
                                 long long dim_cap = kDefaultDimCap);

}  // namespace qforma
