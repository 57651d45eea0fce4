#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qforma/chevalley.hpp"
#include "qforma/classify.hpp"
#include "qforma/hwmodule.hpp"
#include "qforma/numbertheory.hpp"
#include "qforma/rationality.hpp"
#include "qforma/rootsystem.hpp"

namespace qforma {

// Machine-readable output uses insertion-ordered JSON so identical inputs
// produce byte-identical documents.
using Json = nlohmann::ordered_json;

// Canonical reduced fraction "p/q" with positive denominator.
std::string rational_string(const BigRational& v);

// {"order": n, "coeffs": ["p/q", ...]} with coefficient index i meaning
// zeta_n^i; elements are always re-expressed in the degree-24 field first.
Json cyclotomic_json(const CyclotomicElem& e);

// A finite place serializes as its prime (number); infinity as "inf".
Json place_json(const Place& p);

Json weight_json(const Weight& w);
Json matrix_json(const Mat<CyclotomicElem>& m);

// Canonical record: type, rank, Cartan matrix, ordered positive roots.
Json root_system_json(const RootSystem& rs);
// One positive root per line: index, height, tab-separated coefficients.
std::string root_system_tsv(const RootSystem& rs);

Json structure_report_json(const CartanType& type, const StructureReport& r);
// Rows (alpha, beta, N) over all bracketing pairs whose sum is a root,
// signed canonical root indices, ascending.
std::string structure_constants_tsv(const ChevalleySystem& cs);

// Summary printed by the module builder: dimensions and the weight system.
Json module_summary_json(const HighestWeightModule& m);
// Full export: weight-graded basis plus generator matrices.
Json module_matrices_json(const HighestWeightModule& m);

Json weight_report_json(const WeightReport& wr);

std::string qform_spec_string(const QFormSpec& qf);

// Verdict document with certificate payload: witness lattice basis for
// HAS_Q_FORM, obstruction scalar for NO_Q_FORM.
Json qform_decision_json(const CartanType& type, const Weight& lambda,
                         const QFormSpec& qf, const QFormDecision& d);

Json obstruction_row_json(const ObstructionWitness& row);
Json relabel_row_json(const RelabelRow& row);
Json classification_json(int max_rank,
                         const std::vector<ObstructionWitness>& table,
                         const std::vector<RelabelRow>& su,
                         const std::vector<RelabelRow>& so);
// Columns: type, rank, verdict, witness, coefficient_sum, in_root_lattice,
// self_dual. Relabel rows carry their label in the type column.
std::string classification_tsv(const std::vector<ObstructionWitness>& table,
                               const std::vector<RelabelRow>& su,
                               const std::vector<RelabelRow>& so);

Json direct_sum_example_json(const DirectSumExample& ex);

Json ramification_json(const BigRational& a, const BigRational& b,
                       const std::vector<Place>& places);

}  // namespace qforma
