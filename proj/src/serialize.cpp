#include "qforma/serialize.hpp"

#include <sstream>

namespace qforma {

std::string rational_string(const BigRational& v) {
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

Json cyclotomic_json(const CyclotomicElem& e) {
  const CyclotomicElem lifted = e.embedded(CyclotomicElem::default_order);
  Json coeffs = Json::array();
  for (const BigRational& c : lifted.coeffs()) {
    coeffs.push_back(rational_string(c));
  }
  return Json{{"order", lifted.order()}, {"coeffs", std::move(coeffs)}};
}

Json place_json(const Place& p) {
  if (p.infinite) return Json("inf");
  return Json(p.prime.convert_to<long long>());
}

Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (long long c : w) a.push_back(c);
  return a;
}

Json matrix_json(const Mat<CyclotomicElem>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(cyclotomic_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Rational generator matrices are lifted into the exact-field record so one
// serialization covers every matrix the engine emits.
Json rational_matrix_json(const Mat<BigRational>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(cyclotomic_json(CyclotomicElem(m(r, c))));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json root_system_json(const RootSystem& rs) {
  Json cartan = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(std::move(row));
  }
  Json roots = Json::array();
  for (int a = 1; a <= rs.num_positive(); ++a) {
    Json coeffs = Json::array();
    for (int c : rs.root_coeffs(a)) coeffs.push_back(c);
    roots.push_back(Json{{"index", a},
                         {"height", rs.height(a)},
                         {"coeffs", std::move(coeffs)}});
  }
  return Json{{"type", rs.type().to_string()},
              {"rank", rs.rank()},
              {"num_positive", rs.num_positive()},
              {"fundamental_group_order",
               rs.fundamental_group_order().convert_to<long long>()},
              {"cartan", std::move(cartan)},
              {"positive_roots", std::move(roots)}};
}

std::string root_system_tsv(const RootSystem& rs) {
  std::ostringstream out;
  out << "index\theight\tcoeffs\n";
  for (int a = 1; a <= rs.num_positive(); ++a) {
    out << a << '\t' << rs.height(a) << '\t';
    const std::vector<int> coeffs = rs.root_coeffs(a);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) out << ',';
      out << coeffs[i];
    }
    out << '\n';
  }
  return out.str();
}

Json structure_report_json(const CartanType& type, const StructureReport& r) {
  return Json{{"type", type.to_string()},
              {"jacobi", r.jacobi ? "ok" : "fail"},
              {"n_pattern", r.n_pattern ? "ok" : "fail"},
              {"pairs_checked", r.pairs_checked}};
}

std::string structure_constants_tsv(const ChevalleySystem& cs) {
  const RootSystem& rs = cs.roots();
  const int n = rs.num_positive();
  std::vector<int> order;
  for (int a = -n; a <= n; ++a) {
    if (a != 0) order.push_back(a);
  }
  std::ostringstream out;
  out << "alpha\tbeta\tN\n";
  for (int a : order) {
    for (int b : order) {
      if (a + b == 0 || a == b) continue;
      if (!rs.sum_root(a, b)) continue;
      out << a << '\t' << b << '\t' << cs.structure_constant(a, b).str()
          << '\n';
    }
  }
  return out.str();
}

Json module_summary_json(const HighestWeightModule& m) {
  Json weights = Json::array();
  for (int w = 0; w < m.num_weights(); ++w) {
    weights.push_back(Json{{"weight", weight_json(m.weight(w))},
                           {"multiplicity", m.multiplicity(w)}});
  }
  return Json{{"type", m.roots().type().to_string()},
              {"highest_weight", weight_json(m.highest_weight())},
              {"dim", m.dim()},
              {"num_weights", m.num_weights()},
              {"weights", std::move(weights)}};
}

Json module_matrices_json(const HighestWeightModule& m) {
  Json doc = module_summary_json(m);
  Json basis_weights = Json::array();
  for (long long p = 0; p < m.dim(); ++p) {
    basis_weights.push_back(m.weight_of_basis(p));
  }
  doc["basis_weight_index"] = std::move(basis_weights);
  Json e = Json::array();
  Json f = Json::array();
  Json h = Json::array();
  for (int i = 0; i < m.roots().rank(); ++i) {
    e.push_back(rational_matrix_json(m.e_matrix(i)));
    f.push_back(rational_matrix_json(m.f_matrix(i)));
    h.push_back(rational_matrix_json(m.h_matrix(i)));
  }
  doc["generators"] = Json{{"e", std::move(e)},
                           {"f", std::move(f)},
                           {"h", std::move(h)}};
  return doc;
}

Json weight_report_json(const WeightReport& wr) {
  const char* fs = wr.fs_indicator == FsIndicator::PLUS_ONE    ? "+1"
                   : wr.fs_indicator == FsIndicator::MINUS_ONE ? "-1"
                                                               : "none";
  return Json{{"weight", weight_json(wr.lambda)},
              {"self_dual", wr.self_dual},
              {"coefficient_sum", rational_string(wr.coefficient_sum)},
              {"sum_is_integer", wr.sum_is_integer},
              {"in_root_lattice", wr.in_root_lattice},
              {"fs_indicator", fs}};
}

std::string qform_spec_string(const QFormSpec& qf) {
  if (qf.kind == QFormSpec::STANDARD) return "standard";
  return "twisted:" + std::to_string(qf.twist_index);
}

namespace {

Json lattice_json(const RationalLattice& l) {
  Json basis = Json::array();
  for (const auto& vec : l.basis) {
    Json row = Json::array();
    for (const CyclotomicElem& e : vec) row.push_back(cyclotomic_json(e));
    basis.push_back(std::move(row));
  }
  Json weight_of = Json::array();
  for (int w : l.weight_of) weight_of.push_back(w);
  return Json{{"rank", l.basis.size()},
              {"weight_of", std::move(weight_of)},
              {"basis", std::move(basis)}};
}

}  // namespace

Json qform_decision_json(const CartanType& type, const Weight& lambda,
                         const QFormSpec& qf, const QFormDecision& d) {
  Json doc{{"type", type.to_string()},
           {"weight", weight_json(lambda)},
           {"form", qform_spec_string(qf)},
           {"verdict", d.verdict == QFormVerdict::HAS_Q_FORM ? "HAS_Q_FORM"
                                                             : "NO_Q_FORM"}};
  if (d.sigma) {
    doc["real_structure_sign"] = d.sigma->sign;
  }
  if (d.verdict == QFormVerdict::HAS_Q_FORM) {
    doc["witness"] = lattice_json(*d.witness);
    doc["report"] = Json{{"invariant", d.witness_report->invariant},
                         {"spans", d.witness_report->spans},
                         {"independent", d.witness_report->independent}};
  } else {
    const TwistedObstruction& ob = *d.obstruction;
    doc["certificate"] =
        Json{{"twist_index", ob.tau},
             {"exponent", ob.exponent},
             {"k_prime", cyclotomic_json(ob.k_prime)},
             {"sigma_prime_squared",
              rational_string(ob.sigma_prime_squared.rational_value())},
             {"involution_attainable", ob.involution_attainable}};
  }
  return doc;
}

namespace {

Json witness_or_null(const std::optional<Weight>& w) {
  if (!w) return Json(nullptr);
  return weight_json(*w);
}

std::string witness_string(const std::optional<Weight>& w) {
  if (!w) return "-";
  std::ostringstream out;
  for (std::size_t i = 0; i < w->size(); ++i) {
    if (i) out << ',';
    out << (*w)[i];
  }
  return out.str();
}

}  // namespace

Json obstruction_row_json(const ObstructionWitness& row) {
  Json doc{{"type", row.type.to_string()},
           {"rank", row.type.rank()},
           {"verdict", to_string(row.verdict)},
           {"witness", witness_or_null(row.witness)}};
  if (row.witness) {
    doc["coefficient_sum"] = rational_string(row.coefficient_sum);
    doc["in_root_lattice"] = row.in_root_lattice;
    doc["self_dual"] = row.self_dual;
  } else {
    doc["coefficient_sum"] = Json(nullptr);
    doc["in_root_lattice"] = Json(nullptr);
    doc["self_dual"] = Json(nullptr);
  }
  return doc;
}

Json relabel_row_json(const RelabelRow& row) {
  return Json{{"label", row.label},
              {"n", row.n},
              {"type", row.type.to_string()},
              {"verdict", to_string(row.verdict)},
              {"witness", witness_or_null(row.witness)},
              {"closed_form_obstructed", row.closed_form_obstructed},
              {"matches_closed_form", row.matches_closed_form}};
}

Json classification_json(int max_rank,
                         const std::vector<ObstructionWitness>& table,
                         const std::vector<RelabelRow>& su,
                         const std::vector<RelabelRow>& so) {
  Json t = Json::array();
  for (const auto& row : table) t.push_back(obstruction_row_json(row));
  Json js = Json::array();
  for (const auto& row : su) js.push_back(relabel_row_json(row));
  Json jo = Json::array();
  for (const auto& row : so) jo.push_back(relabel_row_json(row));
  return Json{{"max_rank", max_rank},
              {"table", std::move(t)},
              {"su", std::move(js)},
              {"so", std::move(jo)}};
}

std::string classification_tsv(const std::vector<ObstructionWitness>& table,
                               const std::vector<RelabelRow>& su,
                               const std::vector<RelabelRow>& so) {
  std::ostringstream out;
  out << "type\trank\tverdict\twitness\tcoefficient_sum\tin_root_lattice\t"
         "self_dual\n";
  for (const auto& row : table) {
    out << row.type.to_string() << '\t' << row.type.rank() << '\t'
        << to_string(row.verdict) << '\t' << witness_string(row.witness)
        << '\t'
        << (row.witness ? rational_string(row.coefficient_sum) : "-") << '\t'
        << (row.witness ? (row.in_root_lattice ? "true" : "false") : "-")
        << '\t' << (row.witness ? (row.self_dual ? "true" : "false") : "-")
        << '\n';
  }
  for (const auto* rows : {&su, &so}) {
    for (const auto& row : *rows) {
      out << row.label << '\t' << row.type.rank() << '\t'
          << to_string(row.verdict) << '\t' << witness_string(row.witness)
          << "\t-\t-\t-\n";
    }
  }
  return out.str();
}

Json direct_sum_example_json(const DirectSumExample& ex) {
  return Json{
      {"pair_type", ex.pair_type.to_string()},
      {"factor_first", obstruction_row_json(ex.factor_first)},
      {"factor_second", obstruction_row_json(ex.factor_second)},
      {"pair_weight", weight_json(ex.pair_weight)},
      {"pair_report", weight_report_json(ex.pair_report)},
      {"first_alone", weight_report_json(ex.first_alone)},
      {"all_pass", ex.all_pass}};
}

Json ramification_json(const BigRational& a, const BigRational& b,
                       const std::vector<Place>& places) {
  Json ram = Json::array();
  for (const Place& p : places) ram.push_back(place_json(p));
  return Json{{"a", rational_string(a)},
              {"b", rational_string(b)},
              {"ramified", std::move(ram)},
              {"count", places.size()},
              {"split_everywhere", places.empty()}};
}

}  // namespace qforma
