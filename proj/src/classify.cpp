#include "qforma/classify.hpp"

#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qforma/errors.hpp"

namespace qforma {
namespace {

// Duality involution on fundamental coordinates: the dual of the module
// with highest weight omega_i has highest weight omega_{iota(i)}, read off
// from the antidominant Weyl translate of omega_i.
std::vector<int> duality_involution(const RootSystem& rs) {
  const int r = rs.rank();
  std::vector<int> iota(static_cast<size_t>(r), -1);
  for (int i = 0; i < r; ++i) {
    Weight w(static_cast<size_t>(r), 0);
    w[static_cast<size_t>(i)] = 1;
    const Weight a = rs.antidominant(w);
    int hit = -1;
    for (int j = 0; j < r; ++j) {
      const long long c = a[static_cast<size_t>(j)];
      if (c == -1 && hit == -1) {
        hit = j;
      } else if (c != 0) {
        throw std::logic_error(
            "duality involution: antidominant image of a fundamental weight "
            "is not minus a fundamental weight");
      }
    }
    if (hit == -1) {
      throw std::logic_error("duality involution: no nonzero coordinate");
    }
    iota[static_cast<size_t>(i)] = hit;
  }
  return iota;
}

// Denominator-cleared data for the fast prefilter.  All root-basis
// coefficients of weights have denominators dividing |det C|, so clearing
// by q = |weight/root lattice| turns the integrality and coset tests into
// exact long-long arithmetic.
struct ClearedData {
  long long q = 1;                       // fundamental group order
  std::vector<long long> sum;            // q * coefficient_sum(omega_i)
  std::vector<std::vector<long long>> coset;  // q * coset coords of omega_i
};

long long cleared_value(const BigRational& v, long long q,
                        const char* what) {
  const BigRational scaled = v * BigRational(q);
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw std::logic_error(std::string("denominator clearing failed for ") +
                           what);
  }
  return boost::multiprecision::numerator(scaled).convert_to<long long>();
}

ClearedData cleared_data(const RootSystem& rs) {
  ClearedData cd;
  const int r = rs.rank();
  const BigInt order = rs.fundamental_group_order();
  if (order > BigInt(1) << 40) {
    throw hypothesis_error("fundamental group too large for the box search");
  }
  cd.q = order.convert_to<long long>();
  cd.sum.resize(static_cast<size_t>(r));
  cd.coset.assign(static_cast<size_t>(r),
                  std::vector<long long>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) {
    Weight w(static_cast<size_t>(r), 0);
    w[static_cast<size_t>(i)] = 1;
    cd.sum[static_cast<size_t>(i)] =
        cleared_value(rs.coefficient_sum(w), cd.q, "coefficient sum");
    const std::vector<BigRational> frac = rs.root_lattice_coset(w);
    for (int j = 0; j < r; ++j) {
      cd.coset[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          cleared_value(frac[static_cast<size_t>(j)], cd.q, "coset");
    }
  }
  return cd;
}

// Advances the odometer over {0,1,2}^rank in ascending lexicographic order
// (rightmost coordinate fastest).  Returns false after the last vector.
bool advance_box(Weight& m) {
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
    if (m[static_cast<size_t>(i)] < 2) {
      ++m[static_cast<size_t>(i)];
      return true;
    }
    m[static_cast<size_t>(i)] = 0;
  }
  return false;
}

}  // namespace

std::string to_string(ObstructionVerdict v) {
  return v == ObstructionVerdict::OBSTRUCTED ? "OBSTRUCTED" : "CLEAN";
}

ObstructionWitness find_obstruction_weight(const RootSystem& rs) {
  const int r = rs.rank();
  const std::vector<int> iota = duality_involution(rs);
  const ClearedData cd = cleared_data(rs);

  ObstructionWitness out;
  out.type = rs.type();

  Weight m(static_cast<size_t>(r), 0);
  while (advance_box(m)) {
    bool symmetric = true;
    for (int i = 0; i < r; ++i) {
      if (m[static_cast<size_t>(i)] !=
          m[static_cast<size_t>(iota[static_cast<size_t>(i)])]) {
        symmetric = false;
        break;
      }
    }
    if (!symmetric) continue;

    long long acc = 0;
    for (int i = 0; i < r; ++i) {
      acc += m[static_cast<size_t>(i)] * cd.sum[static_cast<size_t>(i)];
    }
    if (acc % cd.q != 0) continue;

    bool in_lattice = true;
    for (int j = 0; j < r && in_lattice; ++j) {
      long long c = 0;
      for (int i = 0; i < r; ++i) {
        c += m[static_cast<size_t>(i)] *
             cd.coset[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
      if (c % cd.q != 0) in_lattice = false;
    }
    if (in_lattice) continue;

    // Independent re-verification of the candidate; the prefilter is not
    // trusted for the final answer.
    const WeightReport wr = weight_report(rs, m);
    if (!(wr.self_dual && wr.sum_is_integer && !wr.in_root_lattice)) {
      throw std::logic_error(
          "obstruction search: prefilter hit failed full re-verification");
    }
    out.verdict = ObstructionVerdict::OBSTRUCTED;
    out.witness = m;
    out.coefficient_sum = wr.coefficient_sum;
    out.self_dual = wr.self_dual;
    out.in_root_lattice = wr.in_root_lattice;
    return out;
  }

  out.verdict = ObstructionVerdict::CLEAN;
  return out;
}

BoxCoverage box_coset_coverage(const RootSystem& rs) {
  const int r = rs.rank();
  const ClearedData cd = cleared_data(rs);
  std::set<std::vector<long long>> seen;
  Weight m(static_cast<size_t>(r), 0);
  do {
    std::vector<long long> key(static_cast<size_t>(r), 0);
    for (int j = 0; j < r; ++j) {
      long long c = 0;
      for (int i = 0; i < r; ++i) {
        c += m[static_cast<size_t>(i)] *
             cd.coset[static_cast<size_t>(i)][static_cast<size_t>(j)];
      }
      c %= cd.q;
      if (c < 0) c += cd.q;
      key[static_cast<size_t>(j)] = c;
    }
    seen.insert(std::move(key));
  } while (advance_box(m));
  BoxCoverage cov;
  cov.classes_hit = BigInt(seen.size());
  cov.group_order = rs.fundamental_group_order();
  return cov;
}

std::vector<ObstructionWitness> classification_table(int max_rank, int jobs) {
  if (max_rank < 1 || max_rank > 8) {
    throw hypothesis_error("classification table rank bound must be in 1..8");
  }
  std::vector<CartanType> types;
  for (int r = 1; r <= max_rank; ++r) types.emplace_back(CartanType::parse("A" + std::to_string(r)));
  for (int r = 2; r <= max_rank; ++r) types.emplace_back(CartanType::parse("B" + std::to_string(r)));
  for (int r = 2; r <= max_rank; ++r) types.emplace_back(CartanType::parse("C" + std::to_string(r)));
  for (int r = 3; r <= max_rank; ++r) types.emplace_back(CartanType::parse("D" + std::to_string(r)));
  for (const char* t : {"E6", "E7", "E8", "F4", "G2"}) {
    types.emplace_back(CartanType::parse(t));
  }

  std::vector<ObstructionWitness> rows(types.size());
  const int n = static_cast<int>(types.size());
  const int workers = std::max(1, std::min(jobs, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) {
      rows[static_cast<size_t>(i)] =
          find_obstruction_weight(RootSystem(types[static_cast<size_t>(i)]));
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        for (int i = w; i < n; i += workers) {
          rows[static_cast<size_t>(i)] = find_obstruction_weight(
              RootSystem(types[static_cast<size_t>(i)]));
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::vector<RelabelRow> su_table(int max_n) {
  std::vector<RelabelRow> rows;
  for (int n = 2; n <= max_n; ++n) {
    RelabelRow row;
    row.label = "su(" + std::to_string(n) + ")";
    row.n = n;
    row.type = CartanType::parse("A" + std::to_string(n - 1));
    const ObstructionWitness w = find_obstruction_weight(RootSystem(row.type));
    row.verdict = w.verdict;
    row.witness = w.witness;
    row.closed_form_obstructed = (n % 2 == 0 && n >= 4);
    row.matches_closed_form =
        (row.verdict == ObstructionVerdict::OBSTRUCTED) ==
        row.closed_form_obstructed;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RelabelRow> so_table(int max_n) {
  std::vector<RelabelRow> rows;
  for (int n = 3; n <= max_n; ++n) {
    RelabelRow row;
    row.label = "so(" + std::to_string(n) + ")";
    row.n = n;
    if (n == 3) {
      row.type = CartanType::parse("A1");
    } else if (n == 4) {
      row.type = CartanType::parse("A1xA1");
    } else if (n % 2 == 1) {
      row.type = CartanType::parse("B" + std::to_string((n - 1) / 2));
    } else {
      row.type = CartanType::parse("D" + std::to_string(n / 2));
    }
    const ObstructionWitness w = find_obstruction_weight(RootSystem(row.type));
    row.verdict = w.verdict;
    row.witness = w.witness;
    row.closed_form_obstructed = (n % 8 != 3 && n % 8 != 5);
    row.matches_closed_form =
        (row.verdict == ObstructionVerdict::OBSTRUCTED) ==
        row.closed_form_obstructed;
    rows.push_back(std::move(row));
  }
  return rows;
}

DirectSumExample direct_sum_example() {
  DirectSumExample ex;
  const RootSystem b2(CartanType::parse("B2"));
  const RootSystem b5(CartanType::parse("B5"));
  const RootSystem pair(CartanType::parse("B2xB5"));
  ex.pair_type = pair.type();
  ex.factor_first = find_obstruction_weight(b2);
  ex.factor_second = find_obstruction_weight(b5);

  // Spin weight on each factor; concatenated on the direct sum.
  const Weight spin2 = {0, 1};
  const Weight spin5 = {0, 0, 0, 0, 1};
  ex.pair_weight = {0, 1, 0, 0, 0, 0, 1};
  ex.pair_report = weight_report(pair, ex.pair_weight);
  ex.first_alone = weight_report(b2, spin2);
  (void)spin5;

  ex.all_pass = ex.factor_first.verdict == ObstructionVerdict::CLEAN &&
                ex.factor_second.verdict == ObstructionVerdict::CLEAN &&
                ex.pair_report.self_dual && ex.pair_report.sum_is_integer &&
                !ex.pair_report.in_root_lattice &&
                ex.first_alone.fs_indicator == FsIndicator::MINUS_ONE;
  return ex;
}

}  // namespace qforma
