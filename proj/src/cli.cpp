#include "qforma/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qforma/errors.hpp"
#include "qforma/serialize.hpp"

namespace qforma {
namespace {

Weight parse_weight(const std::string& text, int rank) {
  Weight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("weight coordinate '" + item +
                                  "' is not an integer");
    }
    if (used != item.size()) {
      throw std::invalid_argument("weight coordinate '" + item +
                                  "' is not an integer");
    }
    w.push_back(v);
  }
  if (static_cast<int>(w.size()) != rank) {
    throw std::invalid_argument(
        "weight has " + std::to_string(w.size()) +
        " coordinates but the rank is " + std::to_string(rank) +
        " (expected comma-separated fundamental coordinates, standard "
        "numbering)");
  }
  return w;
}

QFormSpec parse_form(const std::string& text, int rank) {
  QFormSpec qf;
  if (text == "standard") {
    qf.kind = QFormSpec::STANDARD;
    return qf;
  }
  const std::string prefix = "twisted:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string idx = text.substr(prefix.size());
    std::size_t used = 0;
    int tau = -1;
    try {
      tau = std::stoi(idx, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != idx.size() || idx.empty()) {
      throw std::invalid_argument("twist index '" + idx +
                                  "' is not an integer");
    }
    if (tau < 0 || tau >= rank) {
      throw std::invalid_argument(
          "twist index " + std::to_string(tau) +
          " out of range 0.." + std::to_string(rank - 1) +
          " (0-based simple root index)");
    }
    qf.kind = QFormSpec::TWISTED;
    qf.twist_index = tau;
    return qf;
  }
  throw std::invalid_argument("form must be 'standard' or 'twisted:K' "
                              "(K a 0-based simple root index)");
}

BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return BigRational(BigInt(text));
    }
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("'" + text + "' is not a rational number");
  }
}

RootSystem make_root_system(const std::string& letter, int rank) {
  if (letter.size() != 1) {
    throw std::invalid_argument("type must be a single letter A..G");
  }
  return RootSystem(CartanType::parse(letter + std::to_string(rank)));
}

void emit_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string pretty_weight(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

void pretty_decision(std::ostream& out, const CartanType& type,
                     const Weight& lambda, const QFormSpec& qf,
                     const QFormDecision& d) {
  out << type.to_string() << " weight (" << pretty_weight(lambda)
      << ") form " << qform_spec_string(qf) << ": ";
  if (d.verdict == QFormVerdict::HAS_Q_FORM) {
    out << "HAS_Q_FORM\n";
    out << "  witness lattice rank " << d.witness->basis.size()
        << ", checks: invariant=" << (d.witness_report->invariant ? "yes" : "no")
        << " spans=" << (d.witness_report->spans ? "yes" : "no")
        << " independent=" << (d.witness_report->independent ? "yes" : "no")
        << "\n";
  } else {
    const TwistedObstruction& ob = *d.obstruction;
    out << "NO_Q_FORM\n";
    out << "  every equivariant conjugate-linear candidate is k*sigma with\n"
        << "  k = sqrt(3)^" << ob.exponent << " * unit / q,  k' = k/sqrt(3) = "
        << ob.k_prime.to_string() << "\n"
        << "  (sigma')^2 = "
        << rational_string(ob.sigma_prime_squared.rational_value())
        << ", exponent " << ob.exponent
        << " is odd, and the square has odd 3-adic valuation for every\n"
        << "  unit rescaling ("
        << rational_string(ob.sigma_prime_squared.rational_value())
        << " is not a sum of two rational squares), so no involution "
           "exists.\n";
  }
}

struct RunConfig {
  std::string format = "json";
  std::string type_letter;
  int rank = 0;
  std::string weight_text;
  std::string form_text = "standard";
  long long dim_cap = kDefaultDimCap;
  std::string emit_path;
  bool exhaustive = false;
  unsigned long long seed = 0;
  int samples = 500;
  int max_rank = 8;
  int jobs = 1;
  int su_max = 17;
  int so_max = 17;
  std::string quat_a = "-1";
  std::string quat_b = "-1";
};

void require_format(const RunConfig& cfg,
                    const std::vector<std::string>& allowed) {
  for (const auto& f : allowed) {
    if (cfg.format == f) return;
  }
  std::string msg = "format '" + cfg.format + "' not available here; use ";
  for (std::size_t i = 0; i < allowed.size(); ++i) {
    if (i) msg += "|";
    msg += allowed[i];
  }
  throw std::invalid_argument(msg);
}

int cmd_rootsys_show(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "tsv", "pretty"});
  const RootSystem rs = make_root_system(cfg.type_letter, cfg.rank);
  if (cfg.format == "json") {
    emit_json(out, root_system_json(rs));
  } else if (cfg.format == "tsv") {
    out << root_system_tsv(rs);
  } else {
    out << rs.type().to_string() << ": rank " << rs.rank() << ", "
        << rs.num_positive() << " positive roots, fundamental group order "
        << rs.fundamental_group_order().str() << "\n";
    out << "Cartan matrix:\n";
    for (int i = 0; i < rs.rank(); ++i) {
      out << " ";
      for (int j = 0; j < rs.rank(); ++j) out << ' ' << rs.cartan(i, j);
      out << '\n';
    }
    out << "positive roots (index: coefficients over simple roots):\n";
    for (int a = 1; a <= rs.num_positive(); ++a) {
      out << "  " << a << ":";
      for (int c : rs.root_coeffs(a)) out << ' ' << c;
      out << '\n';
    }
  }
  return 0;
}

int cmd_chevalley_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "tsv", "pretty"});
  const RootSystem rs = make_root_system(cfg.type_letter, cfg.rank);
  const ChevalleySystem cs(rs);
  if (cfg.format == "tsv") {
    out << structure_constants_tsv(cs);
    return 0;
  }
  const StructureReport rep =
      cs.verify_structure_constants(cfg.exhaustive, cfg.seed, cfg.samples);
  if (cfg.format == "json") {
    emit_json(out, structure_report_json(rs.type(), rep));
  } else {
    out << rs.type().to_string() << ": jacobi " << (rep.jacobi ? "ok" : "FAIL")
        << ", constant pattern " << (rep.n_pattern ? "ok" : "FAIL") << ", "
        << rep.pairs_checked << " pairs checked\n";
  }
  return rep.jacobi && rep.n_pattern ? 0 : 1;
}

int cmd_rep_build(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "tsv", "pretty"});
  const RootSystem rs = make_root_system(cfg.type_letter, cfg.rank);
  const Weight lambda = parse_weight(cfg.weight_text, rs.rank());
  const ChevalleySystem cs(rs);
  const HighestWeightModule m(cs, lambda, cfg.dim_cap);
  if (!cfg.emit_path.empty()) {
    std::ofstream file(cfg.emit_path);
    if (!file) {
      throw std::invalid_argument("cannot open '" + cfg.emit_path +
                                  "' for writing");
    }
    file << module_matrices_json(m).dump(2) << '\n';
  }
  if (cfg.format == "json") {
    emit_json(out, module_summary_json(m));
  } else if (cfg.format == "tsv") {
    out << "weight\tmultiplicity\n";
    for (int w = 0; w < m.num_weights(); ++w) {
      out << pretty_weight(m.weight(w)) << '\t' << m.multiplicity(w) << '\n';
    }
  } else {
    out << rs.type().to_string() << " highest weight ("
        << pretty_weight(lambda) << "): dimension " << m.dim() << ", "
        << m.num_weights() << " weights\n";
    for (int w = 0; w < m.num_weights(); ++w) {
      out << "  (" << pretty_weight(m.weight(w)) << ") x "
          << m.multiplicity(w) << '\n';
    }
  }
  return 0;
}

int cmd_rationality_check(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "pretty"});
  const RootSystem rs = make_root_system(cfg.type_letter, cfg.rank);
  const Weight lambda = parse_weight(cfg.weight_text, rs.rank());
  const QFormSpec qf = parse_form(cfg.form_text, rs.rank());
  const QFormDecision d = has_q_form_verdict(rs, lambda, qf, cfg.dim_cap);
  if (cfg.format == "json") {
    emit_json(out, qform_decision_json(rs.type(), lambda, qf, d));
  } else {
    pretty_decision(out, rs.type(), lambda, qf, d);
  }
  return 0;
}

int cmd_classify_table(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "tsv", "pretty"});
  const auto table = classification_table(cfg.max_rank, cfg.jobs);
  const auto su = su_table(cfg.su_max);
  const auto so = so_table(cfg.so_max);
  if (cfg.format == "json") {
    emit_json(out, classification_json(cfg.max_rank, table, su, so));
  } else if (cfg.format == "tsv") {
    out << classification_tsv(table, su, so);
  } else {
    out << "simple types up to rank " << cfg.max_rank
        << " (plus exceptional types):\n";
    for (const auto& row : table) {
      out << "  " << row.type.to_string() << ": " << to_string(row.verdict);
      if (row.witness) {
        out << "  witness (" << pretty_weight(*row.witness)
            << "), coefficient sum " << rational_string(row.coefficient_sum);
      }
      out << '\n';
    }
    out << "unitary relabeling (su) and orthogonal relabeling (so):\n";
    for (const auto* rows : {&su, &so}) {
      for (const auto& row : *rows) {
        out << "  " << row.label << " = " << row.type.to_string() << ": "
            << to_string(row.verdict)
            << (row.matches_closed_form ? "" : "  [differs from closed form]")
            << '\n';
      }
    }
  }
  return 0;
}

int cmd_quat_ramify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "pretty"});
  const BigRational a = parse_rational(cfg.quat_a);
  const BigRational b = parse_rational(cfg.quat_b);
  if (a == 0 || b == 0) {
    throw hypothesis_error("quaternion parameters must be nonzero");
  }
  const std::vector<Place> places = quaternion_ramification(a, b);
  if (cfg.format == "json") {
    emit_json(out, ramification_json(a, b, places));
  } else {
    out << "quaternion algebra (" << rational_string(a) << ", "
        << rational_string(b) << "): ";
    if (places.empty()) {
      out << "split at every place (matrix algebra)\n";
    } else {
      out << "ramified at {";
      for (std::size_t i = 0; i < places.size(); ++i) {
        if (i) out << ", ";
        out << (places[i].infinite ? std::string("inf")
                                   : places[i].prime.str());
      }
      out << "}\n";
    }
  }
  return 0;
}

int cmd_demo_badgq(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "pretty"});
  const RootSystem rs(CartanType::parse("A3"));
  const Weight lambda = {0, 1, 0};
  QFormSpec standard;
  QFormSpec twisted;
  twisted.kind = QFormSpec::TWISTED;
  twisted.twist_index = 2;
  const QFormDecision ds = has_q_form_verdict(rs, lambda, standard, cfg.dim_cap);
  const QFormDecision dt = has_q_form_verdict(rs, lambda, twisted, cfg.dim_cap);
  if (cfg.format == "json") {
    emit_json(out,
              Json{{"standard",
                    qform_decision_json(rs.type(), lambda, standard, ds)},
                   {"twisted",
                    qform_decision_json(rs.type(), lambda, twisted, dt)}});
  } else {
    out << "Same complex module, two rational forms of the compact "
           "algebra:\n\n";
    pretty_decision(out, rs.type(), lambda, standard, ds);
    out << '\n';
    pretty_decision(out, rs.type(), lambda, twisted, dt);
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{
      "qforma: exact decision procedures for rational forms of "
      "compact Lie algebra modules"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format: json, tsv, pretty")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed,
                 "seed for sampled subroutines (fixed default keeps runs "
                 "reproducible)")
      ->capture_default_str();

  auto add_type_rank = [&cfg](CLI::App* cmd) {
    cmd->add_option("--type", cfg.type_letter, "series letter A..G")
        ->required();
    cmd->add_option("--rank", cfg.rank, "rank of the simple type")->required();
  };
  auto add_weight = [&cfg](CLI::App* cmd) {
    cmd->add_option("--weight", cfg.weight_text,
                    "comma-separated fundamental coordinates (standard "
                    "numbering)")
        ->required();
  };
  auto add_cap = [&cfg](CLI::App* cmd) {
    cmd->add_option("--dim-cap", cfg.dim_cap,
                    "refuse modules above this dimension")
        ->envname("QFORMA_DIM_CAP")
        ->capture_default_str();
  };

  CLI::App* rootsys = app.add_subcommand("rootsys", "root system queries");
  rootsys->require_subcommand(1);
  CLI::App* rootsys_show =
      rootsys->add_subcommand("show", "print a root system");
  add_type_rank(rootsys_show);

  CLI::App* chevalley =
      app.add_subcommand("chevalley", "integral structure constants");
  chevalley->require_subcommand(1);
  CLI::App* chevalley_verify = chevalley->add_subcommand(
      "verify",
      "check the bracket tables (tsv format prints the constants instead)");
  add_type_rank(chevalley_verify);
  chevalley_verify->add_flag("--exhaustive", cfg.exhaustive,
                             "check every basis triple");
  chevalley_verify
      ->add_option("--samples", cfg.samples,
                   "sampled triples when not exhaustive")
      ->capture_default_str();

  CLI::App* rep = app.add_subcommand("rep", "highest weight modules");
  rep->require_subcommand(1);
  CLI::App* rep_build =
      rep->add_subcommand("build", "build an irreducible module");
  add_type_rank(rep_build);
  add_weight(rep_build);
  add_cap(rep_build);
  rep_build->add_option("--emit", cfg.emit_path,
                        "write generator matrices to this JSON file");

  CLI::App* rationality =
      app.add_subcommand("rationality", "rational form decisions");
  rationality->require_subcommand(1);
  CLI::App* rationality_check = rationality->add_subcommand(
      "check", "decide whether the real module has a rational form");
  add_type_rank(rationality_check);
  add_weight(rationality_check);
  add_cap(rationality_check);
  rationality_check
      ->add_option("--form", cfg.form_text,
                   "rational form of the algebra: standard or twisted:K "
                   "(0-based simple root index)")
      ->capture_default_str();

  CLI::App* classify = app.add_subcommand("classify", "type classification");
  classify->require_subcommand(1);
  CLI::App* classify_table = classify->add_subcommand(
      "table", "obstruction table over simple types plus su/so relabeling");
  classify_table->add_option("--max-rank", cfg.max_rank, "classical rank bound")
      ->capture_default_str();
  classify_table->add_option("--jobs", cfg.jobs, "parallel workers")
      ->capture_default_str();
  classify_table->add_option("--su-max", cfg.su_max, "largest su(n)")
      ->capture_default_str();
  classify_table->add_option("--so-max", cfg.so_max, "largest so(n)")
      ->capture_default_str();

  CLI::App* quat = app.add_subcommand("quat", "quaternion algebras");
  quat->require_subcommand(1);
  CLI::App* quat_ramify = quat->add_subcommand(
      "ramify", "ramified places of the quaternion algebra (a, b)");
  quat_ramify->add_option("--a", cfg.quat_a, "first parameter (rational)")
      ->required();
  quat_ramify->add_option("--b", cfg.quat_b, "second parameter (rational)")
      ->required();

  CLI::App* demo = app.add_subcommand("demo", "worked end-to-end examples");
  CLI::App* demo_badgq = demo->add_subcommand(
      "badgq",
      "the 6-dimensional module of the rank-3 unitary type: standard form "
      "has a rational form, the twisted form does not");
  demo->require_subcommand(1);

  // Let --format/--seed appear after the subcommand as well as before it.
  for (CLI::App* group : app.get_subcommands(nullptr)) {
    group->fallthrough();
    for (CLI::App* leaf : group->get_subcommands(nullptr)) {
      leaf->fallthrough();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (rootsys_show->parsed()) return cmd_rootsys_show(cfg, out);
    if (chevalley_verify->parsed()) return cmd_chevalley_verify(cfg, out);
    if (rep_build->parsed()) return cmd_rep_build(cfg, out);
    if (rationality_check->parsed()) return cmd_rationality_check(cfg, out);
    if (classify_table->parsed()) return cmd_classify_table(cfg, out);
    if (quat_ramify->parsed()) return cmd_quat_ramify(cfg, out);
    if (demo_badgq->parsed()) return cmd_demo_badgq(cfg, out);
    err << "error: no command selected\n";
    return 1;
  } catch (const cap_exceeded& e) {
    err << "refused: " << e.what() << '\n';
    return 2;
  } catch (const hypothesis_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qforma
