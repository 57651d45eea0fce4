#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qforma/rationality.hpp"
#include "qforma/rootsystem.hpp"

namespace qforma {

// Verdict of the obstruction-weight search for one compact type: OBSTRUCTED
// means some dominant weight is self-dual, has an integer coefficient sum
// over the simple roots, and lies outside the root lattice (so the twisted
// rational form of that module has no rational form); CLEAN means no such
// weight exists.
enum class ObstructionVerdict { OBSTRUCTED, CLEAN };

std::string to_string(ObstructionVerdict v);

struct ObstructionWitness {
  CartanType type;
  ObstructionVerdict verdict = ObstructionVerdict::CLEAN;
  // First weight in lexicographic box order satisfying all three conditions;
  // present exactly when verdict == OBSTRUCTED.
  std::optional<Weight> witness;
  // Report fields echoed for the witness (meaningful only when present).
  BigRational coefficient_sum = 0;
  bool self_dual = false;
  bool in_root_lattice = false;
};

// Searches dominant weights with fundamental coordinates in {0, 1, 2},
// ascending lexicographic order, for the first weight that is self-dual,
// has an integer coefficient sum, and is not in the root lattice.  A fast
// integer prefilter (duality involution + denominator-cleared sums and
// root-lattice cosets) trims candidates; every hit is re-verified through
// weight_report before being returned.
ObstructionWitness find_obstruction_weight(const RootSystem& rs);

// Checks that the {0,1,2} search box reaches every class of the weight
// lattice modulo the root lattice.  classes_hit counts distinct cosets met
// by box weights; group_order is |weight lattice / root lattice|.
struct BoxCoverage {
  BigInt classes_hit = 0;
  BigInt group_order = 0;
  bool covers_all() const { return classes_hit == group_order; }
};
BoxCoverage box_coset_coverage(const RootSystem& rs);

// Table over all simple types of rank <= max_rank (A1.., B2.., C2.., D3..)
// plus the five exceptional types, in that fixed order.  max_rank is capped
// at 8.  jobs > 1 computes rows in parallel; output order is deterministic
// regardless of schedule.
std::vector<ObstructionWitness> classification_table(int max_rank,
                                                     int jobs = 1);

// One row of the su(n)/so(n) relabeling of the classification.
struct RelabelRow {
  std::string label;  // e.g. "su(6)", "so(11)"
  int n = 0;
  CartanType type;  // underlying Cartan type (so(4) = A1xA1, so(6) = D3)
  ObstructionVerdict verdict = ObstructionVerdict::CLEAN;
  std::optional<Weight> witness;
  // Closed-form predicate quoted by the classification: su(n) obstructed
  // iff n even and n >= 4; so(n) obstructed iff n is not 3 or 5 mod 8.
  bool closed_form_obstructed = false;
  bool matches_closed_form = false;
};

// su(n) rows for 2 <= n <= max_n (underlying type A_{n-1}).
std::vector<RelabelRow> su_table(int max_n = 17);
// so(n) rows for 3 <= n <= max_n (A1, A1xA1, B and D series; so(6) = D3).
std::vector<RelabelRow> so_table(int max_n = 17);

// Verification record for the two-factor direct-sum example: each
// odd-orthogonal factor is clean on its own (the candidate spin weight has
// a half-integer coefficient sum), but the pair weight on the direct sum
// adds the two half-integers to an integer and satisfies all three
// obstruction conditions.
struct DirectSumExample {
  CartanType pair_type;           // B2xB5
  ObstructionWitness factor_first;   // B2, expected CLEAN
  ObstructionWitness factor_second;  // B5, expected CLEAN
  Weight pair_weight;             // (omega_2 | omega_5) on the direct sum
  WeightReport pair_report;       // all three hypotheses on the sum algebra
  WeightReport first_alone;       // spin weight on B2 alone: fs -1
  bool all_pass = false;
};
DirectSumExample direct_sum_example();

}  // namespace qforma
