#include "qforma/chevalley.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qforma/errors.hpp"
#include "qforma/linalg.hpp"

namespace qforma {

// --- LieElt -------------------------------------------------------------

bool LieElt::is_zero() const {
  for (const CyclotomicElem& c : h) {
    if (!c.is_zero()) return false;
  }
  for (const auto& [idx, c] : x) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void LieElt::prune() {
  for (auto it = x.begin(); it != x.end();) {
    if (it->second.is_zero()) {
      it = x.erase(it);
    } else {
      ++it;
    }
  }
}

LieElt operator+(const LieElt& a, const LieElt& b) {
  LieElt out = a;
  for (size_t i = 0; i < out.h.size(); ++i) out.h[i] += b.h[i];
  for (const auto& [idx, c] : b.x) {
    auto it = out.x.find(idx);
    if (it == out.x.end()) {
      out.x.emplace(idx, c);
    } else {
      it->second += c;
    }
  }
  out.prune();
  return out;
}

LieElt operator-(const LieElt& a, const LieElt& b) {
  return a + CyclotomicElem(BigRational(-1)) * b;
}

LieElt operator*(const CyclotomicElem& c, const LieElt& a) {
  LieElt out = a;
  for (CyclotomicElem& v : out.h) v *= c;
  for (auto& [idx, v] : out.x) v *= c;
  out.prune();
  return out;
}

bool operator==(const LieElt& a, const LieElt& b) {
  return (a - b).is_zero();
}

// --- ChevalleySystem ------------------------------------------------------

ChevalleySystem::ChevalleySystem(RootSystem rs) : rs_(std::move(rs)) {}

std::pair<int, int> ChevalleySystem::extraspecial_pair(int gamma) const {
  for (int e = 1; e < gamma; ++e) {
    std::optional<int> rest = rs_.sum_root(gamma, -e);
    if (rest && *rest > 0) return {e, *rest};
  }
  throw std::logic_error("no extraspecial pair for a non-simple root");
}

BigRational ChevalleySystem::carter_constant(int a, int b) const {
  auto key = std::make_pair(a, b);
  auto cached = carter_memo_.find(key);
  if (cached != carter_memo_.end()) return cached->second;

  std::optional<int> sum = rs_.sum_root(a, b);
  if (!sum) throw std::invalid_argument("structure constant of a non-root sum");

  BigRational value;
  if (a < 0 && b < 0) {
    value = -carter_constant(-a, -b);
  } else if (a < 0 && b > 0) {
    value = -carter_constant(b, a);
  } else if (a > 0 && b < 0) {
    const int xi = a;
    const int nu = -b;
    std::optional<int> delta = rs_.sum_root(xi, -nu);
    if (delta && *delta > 0) {
      // xi - nu is the positive root delta: reduce to the pair (nu, delta).
      value = -rs_.norm2(*delta) * carter_constant(nu, *delta) / rs_.norm2(xi);
    } else {
      std::optional<int> deltap = rs_.sum_root(nu, -xi);
      if (!deltap || *deltap < 0) {
        throw std::logic_error("mixed-sign reduction fell outside the root set");
      }
      value = -rs_.norm2(*deltap) * carter_constant(xi, *deltap) / rs_.norm2(nu);
    }
  } else {
    // Both positive.
    if (a == b) throw std::invalid_argument("doubled root is never a root");
    if (a > b) {
      value = -carter_constant(b, a);
    } else {
      const int gamma = *sum;
      auto [eps, eta] = extraspecial_pair(gamma);
      if (a == eps) {
        value = BigRational(rs_.chain_down(eta, eps) + 1);
      } else {
        // Jacobi identity on (x_eps, x_eta, x_{-a}); the pair (a, b) is
        // special but not extraspecial, so a differs from eps and eta.
        BigRational t(0);
        std::optional<int> eta_min_a = rs_.sum_root(eta, -a);
        if (eta_min_a) {
          t += carter_constant(eta, -a) * carter_constant(*eta_min_a, eps);
        }
        std::optional<int> eps_min_a = rs_.sum_root(eps, -a);
        if (eps_min_a) {
          t += carter_constant(-a, eps) * carter_constant(*eps_min_a, eta);
        }
        value = rs_.norm2(gamma) * t /
                (rs_.norm2(b) * carter_constant(eps, eta));
      }
    }
  }
  carter_memo_.emplace(key, value);
  return value;
}

BigInt ChevalleySystem::structure_constant(int a, int b) const {
  BigRational n = carter_constant(a, b);
  std::optional<int> sum = rs_.sum_root(a, b);
  int sign = 1;
  if (a < 0) sign = -sign;
  if (b < 0) sign = -sign;
  if (*sum < 0) sign = -sign;
  n *= sign;
  if (!is_integer(n)) throw std::logic_error("non-integral structure constant");
  return num(n);
}

std::vector<BigInt> ChevalleySystem::coroot_coeffs(int a) const {
  std::vector<int> c = rs_.root_coeffs(a);
  BigRational da = rs_.norm2(a) / 2;
  std::vector<BigInt> out(static_cast<size_t>(rs_.rank()));
  for (int i = 0; i < rs_.rank(); ++i) {
    BigRational v = BigRational(c[static_cast<size_t>(i)]) * BigRational(rs_.d(i)) / da;
    if (!is_integer(v)) throw std::logic_error("non-integral coroot coefficient");
    out[static_cast<size_t>(i)] = num(v);
  }
  return out;
}

LieElt ChevalleySystem::zero() const {
  LieElt e;
  e.h.assign(static_cast<size_t>(rs_.rank()), CyclotomicElem());
  return e;
}

LieElt ChevalleySystem::basis_h(int i) const {
  LieElt e = zero();
  e.h[static_cast<size_t>(i)] = CyclotomicElem(1);
  return e;
}

LieElt ChevalleySystem::basis_x(int a) const {
  LieElt e = zero();
  e.x.emplace(a, CyclotomicElem(1));
  return e;
}

LieElt ChevalleySystem::coroot(int a) const {
  LieElt e = zero();
  std::vector<BigInt> c = coroot_coeffs(a);
  for (int i = 0; i < rs_.rank(); ++i) {
    e.h[static_cast<size_t>(i)] = CyclotomicElem(BigRational(c[static_cast<size_t>(i)]));
  }
  return e;
}

LieElt ChevalleySystem::bracket(const LieElt& u, const LieElt& v) const {
  LieElt out = zero();
  // [h-part of u, x-part of v] and [x-part of u, h-part of v].
  for (const auto& [b, cb] : v.x) {
    CyclotomicElem eig;
    for (int i = 0; i < rs_.rank(); ++i) {
      if (u.h[static_cast<size_t>(i)].is_zero()) continue;
      eig += BigRational(rs_.pairing_with_simple(b, i)) * u.h[static_cast<size_t>(i)];
    }
    if (!eig.is_zero()) out.x[b] += eig * cb;
  }
  for (const auto& [a, ca] : u.x) {
    CyclotomicElem eig;
    for (int i = 0; i < rs_.rank(); ++i) {
      if (v.h[static_cast<size_t>(i)].is_zero()) continue;
      eig += BigRational(rs_.pairing_with_simple(a, i)) * v.h[static_cast<size_t>(i)];
    }
    if (!eig.is_zero()) out.x[a] -= eig * ca;
  }
  // [x, x] terms.
  for (const auto& [a, ca] : u.x) {
    for (const auto& [b, cb] : v.x) {
      CyclotomicElem prod = ca * cb;
      if (prod.is_zero()) continue;
      if (a == -b) {
        // [x_a, x_{-a}] = -h_a*.
        std::vector<BigInt> c = coroot_coeffs(a);
        for (int i = 0; i < rs_.rank(); ++i) {
          if (c[static_cast<size_t>(i)] == 0) continue;
          out.h[static_cast<size_t>(i)] -= BigRational(c[static_cast<size_t>(i)]) * prod;
        }
        continue;
      }
      std::optional<int> sum = rs_.sum_root(a, b);
      if (!sum) continue;
      out.x[*sum] += BigRational(structure_constant(a, b)) * prod;
    }
  }
  out.prune();
  return out;
}

std::vector<BigRational> ChevalleySystem::flatten(const LieElt& e) const {
  const unsigned kOrder = 24;
  const size_t per = euler_phi(kOrder);
  std::vector<BigRational> out;
  out.reserve(static_cast<size_t>(dim()) * per);
  auto emit = [&](const CyclotomicElem& c) {
    if (kOrder % c.order() != 0) {
      throw std::invalid_argument("coefficient order does not divide 24");
    }
    CyclotomicElem lifted = c.embedded(kOrder);
    const std::vector<BigRational>& cc = lifted.coeffs();
    out.insert(out.end(), cc.begin(), cc.end());
  };
  for (int i = 0; i < rs_.rank(); ++i) emit(e.h[static_cast<size_t>(i)]);
  for (int k = 1; k <= rs_.num_positive(); ++k) {
    auto it = e.x.find(k);
    emit(it == e.x.end() ? CyclotomicElem() : it->second);
  }
  for (int k = 1; k <= rs_.num_positive(); ++k) {
    auto it = e.x.find(-k);
    emit(it == e.x.end() ? CyclotomicElem() : it->second);
  }
  return out;
}

StructureReport ChevalleySystem::verify_structure_constants(
    bool exhaustive, unsigned long long seed, int samples) const {
  StructureReport report;
  report.jacobi = true;
  report.n_pattern = true;
  report.pairs_checked = 0;

  const int npos = rs_.num_positive();
  // Signed-pair pattern: N(a,b) = N(-a,-b) and |N(a,b)| = p+1 where p is the
  // largest integer with alpha - p beta a root. Always exhaustive (cheap
  // relative to the Jacobi sweep).
  for (int a = -npos; a <= npos; ++a) {
    if (a == 0) continue;
    for (int b = -npos; b <= npos; ++b) {
      if (b == 0 || b == a || b == -a) continue;
      if (!rs_.sum_root(a, b)) continue;
      BigInt n = structure_constant(a, b);
      BigInt n_opp = structure_constant(-a, -b);
      BigInt n_swap = structure_constant(b, a);
      int p = rs_.chain_down(a, b);
      BigInt mag = n < 0 ? -n : n;
      if (n != n_opp || mag != BigInt(p + 1) || n_swap != -n) {
        report.n_pattern = false;
      }
      ++report.pairs_checked;
    }
  }

  // Jacobi identity over basis triples.
  std::vector<LieElt> basis;
  for (int i = 0; i < rs_.rank(); ++i) basis.push_back(basis_h(i));
  for (int k = 1; k <= npos; ++k) {
    basis.push_back(basis_x(k));
    basis.push_back(basis_x(-k));
  }
  auto jacobi_ok = [&](const LieElt& xx, const LieElt& yy, const LieElt& zz) {
    LieElt s = bracket(bracket(xx, yy), zz) + bracket(bracket(yy, zz), xx) +
               bracket(bracket(zz, xx), yy);
    return s.is_zero();
  };
  const int n = static_cast<int>(basis.size());
  if (exhaustive) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (!jacobi_ok(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)],
                         basis[static_cast<size_t>(k)])) {
            report.jacobi = false;
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < samples; ++t) {
      int i = pick(rng), j = pick(rng), k = pick(rng);
      if (!jacobi_ok(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)],
                     basis[static_cast<size_t>(k)])) {
        report.jacobi = false;
      }
    }
  }
  return report;
}

CyclotomicElem ChevalleySystem::qform_scale(const QFormSpec& spec, int a) const {
  if (spec.kind == QFormSpec::STANDARD) return CyclotomicElem(1);
  if (spec.twist_index < 0 || spec.twist_index >= rs_.rank()) {
    throw std::invalid_argument("twist index out of range");
  }
  std::vector<int> c = rs_.root_coeffs(a);
  long long e = c[static_cast<size_t>(spec.twist_index)];
  return CyclotomicElem::sqrt3().pow(e);
}

std::vector<LieElt> ChevalleySystem::qform_basis(const QFormSpec& spec) const {
  std::vector<LieElt> out;
  const CyclotomicElem im = CyclotomicElem::imag_unit();
  for (int i = 0; i < rs_.rank(); ++i) out.push_back(im * basis_h(i));
  for (int k = 1; k <= rs_.num_positive(); ++k) {
    CyclotomicElem s = qform_scale(spec, k);
    LieElt u = basis_x(k) + basis_x(-k);
    LieElt v = im * (basis_x(k) - basis_x(-k));
    out.push_back(s * u);
    out.push_back(s * v);
  }
  return out;
}

QFormReport ChevalleySystem::verify_qform(const QFormSpec& spec) const {
  QFormReport report;
  std::vector<LieElt> basis = qform_basis(spec);
  SpanBuilder<BigRational> span(flatten(zero()).size());
  for (const LieElt& e : basis) span.add(flatten(e));
  report.spans_over_r = (span.rank() == static_cast<std::size_t>(dim()));
  report.bracket_closed = true;
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      LieElt br = bracket(basis[i], basis[j]);
      if (!span.contains(flatten(br))) {
        report.bracket_closed = false;
      }
    }
  }
  return report;
}

std::array<LieElt, 3> ChevalleySystem::su2_subalgebra(int a) const {
  const CyclotomicElem im = CyclotomicElem::imag_unit();
  LieElt b1 = im * coroot(a);
  LieElt b2 = basis_x(a) + basis_x(-a);
  LieElt b3 = im * (basis_x(a) - basis_x(-a));
  const CyclotomicElem two(2);
  if (!(bracket(b1, b2) == two * b3) || !(bracket(b2, b3) == two * b1) ||
      !(bracket(b3, b1) == two * b2)) {
    throw std::logic_error("rank-one compact relations failed to verify");
  }
  return {b1, b2, b3};
}

LieElt ChevalleySystem::apply_involution(const InvolutionSpec& spec,
                                         const LieElt& e) const {
  LieElt out = zero();
  for (const auto& [a, c] : e.x) {
    auto img = spec.root_image.find(a);
    auto sc = spec.scalar.find(a);
    if (img == spec.root_image.end() || sc == spec.scalar.end()) {
      throw std::invalid_argument("involution spec missing a root");
    }
    out.x[img->second] += sc->second * c;
  }
  // The Cartan part maps by h_a* -> h_{th(a)}*: express the h-part over the
  // simple coroots and push each one through.
  for (int i = 0; i < rs_.rank(); ++i) {
    const CyclotomicElem& ci = e.h[static_cast<size_t>(i)];
    if (ci.is_zero()) continue;
    int simple_index = 0;
    {
      std::vector<int> coeffs(static_cast<size_t>(rs_.rank()), 0);
      coeffs[static_cast<size_t>(i)] = 1;
      simple_index = *rs_.index_of(coeffs);
    }
    auto img = spec.root_image.find(simple_index);
    if (img == spec.root_image.end()) {
      throw std::invalid_argument("involution spec missing a simple root");
    }
    std::vector<BigInt> cc = coroot_coeffs(img->second);
    for (int j = 0; j < rs_.rank(); ++j) {
      if (cc[static_cast<size_t>(j)] == 0) continue;
      out.h[static_cast<size_t>(j)] += BigRational(cc[static_cast<size_t>(j)]) * ci;
    }
  }
  out.prune();
  return out;
}

void ChevalleySystem::validate_involution(const InvolutionSpec& spec) const {
  const int npos = rs_.num_positive();
  auto image = [&](int a) {
    auto it = spec.root_image.find(a);
    if (it == spec.root_image.end()) {
      throw std::invalid_argument("involution spec missing a root image");
    }
    return it->second;
  };
  auto scal = [&](int a) {
    auto it = spec.scalar.find(a);
    if (it == spec.scalar.end()) {
      throw std::invalid_argument("involution spec missing a scalar");
    }
    return it->second;
  };
  for (int a = -npos; a <= npos; ++a) {
    if (a == 0) continue;
    int ta = image(a);
    if (image(ta) != a) {
      throw std::invalid_argument("root image is not an involution");
    }
    if (image(-a) != -ta) {
      throw std::invalid_argument("root image does not commute with negation");
    }
    CyclotomicElem ca = scal(a);
    if (!(scal(-a) * ca == CyclotomicElem(1))) {
      throw std::invalid_argument("involution scalars violate c_{-a} = 1/c_a");
    }
    if (!(scal(ta) * ca == CyclotomicElem(1))) {
      throw std::invalid_argument("involution scalars violate c_{th(a)} = 1/c_a");
    }
    // Root lengths must be preserved for theta to extend to the algebra.
    if (!(rs_.norm2(a) == rs_.norm2(ta))) {
      throw std::invalid_argument("root image does not preserve lengths");
    }
  }
  // Bracket compatibility: theta([x_a, x_b]) = [theta x_a, theta x_b].
  for (int a = -npos; a <= npos; ++a) {
    if (a == 0) continue;
    for (int b = -npos; b <= npos; ++b) {
      if (b == 0 || b == a || b == -a) continue;
      std::optional<int> sum = rs_.sum_root(a, b);
      if (!sum) continue;
      int ta = image(a);
      int tb = image(b);
      std::optional<int> tsum = rs_.sum_root(ta, tb);
      if (!tsum || *tsum != image(*sum)) {
        throw std::invalid_argument("root image is not additive");
      }
      CyclotomicElem lhs = CyclotomicElem(BigRational(structure_constant(a, b))) *
                           scal(*sum);
      CyclotomicElem rhs = scal(a) * scal(b) *
                           CyclotomicElem(BigRational(structure_constant(ta, tb)));
      if (!(lhs == rhs)) {
        throw std::invalid_argument("involution scalars violate the bracket");
      }
    }
  }
}

InvolutionSpec ChevalleySystem::extend_involution(
    const std::vector<int>& simple_images,
    const std::vector<CyclotomicElem>& simple_scalars) const {
  if (static_cast<int>(simple_images.size()) != rs_.rank() ||
      static_cast<int>(simple_scalars.size()) != rs_.rank()) {
    throw std::invalid_argument("need one image and one scalar per simple root");
  }
  InvolutionSpec spec;
  // Seed with the simple roots, then extend by height:
  // th(a+b) = th(a)+th(b), c_{a+b} = c_a c_b N(th a, th b) / N(a, b).
  std::vector<int> simple_index(static_cast<size_t>(rs_.rank()));
  for (int i = 0; i < rs_.rank(); ++i) {
    std::vector<int> coeffs(static_cast<size_t>(rs_.rank()), 0);
    coeffs[static_cast<size_t>(i)] = 1;
    simple_index[static_cast<size_t>(i)] = *rs_.index_of(coeffs);
  }
  for (int i = 0; i < rs_.rank(); ++i) {
    int s = simple_index[static_cast<size_t>(i)];
    spec.root_image[s] = simple_images[static_cast<size_t>(i)];
    spec.scalar[s] = simple_scalars[static_cast<size_t>(i)];
  }
  for (int k = 1; k <= rs_.num_positive(); ++k) {
    if (spec.root_image.count(k)) continue;
    auto [eps, eta] = extraspecial_pair(k);
    if (!spec.root_image.count(eps) || !spec.root_image.count(eta)) {
      throw std::logic_error("extension order visited a root too early");
    }
    int ta = spec.root_image[eps];
    int tb = spec.root_image[eta];
    std::optional<int> tsum = rs_.sum_root(ta, tb);
    if (!tsum) {
      throw std::invalid_argument("simple images do not extend additively");
    }
    spec.root_image[k] = *tsum;
    spec.scalar[k] = spec.scalar[eps] * spec.scalar[eta] *
                     CyclotomicElem(BigRational(structure_constant(ta, tb))) *
                     CyclotomicElem(BigRational(structure_constant(eps, eta))).inverse();
  }
  for (int k = 1; k <= rs_.num_positive(); ++k) {
    spec.root_image[-k] = -spec.root_image[k];
    spec.scalar[-k] = spec.scalar[k].inverse();
  }
  return spec;
}

NormalizedInvolution ChevalleySystem::normalize_for_involution(
    const InvolutionSpec& spec) const {
  validate_involution(spec);
  NormalizedInvolution out;
  out.rescale.resize(static_cast<size_t>(rs_.rank()));
  // Solve t_i^2 = 1/c_{alpha_i} among the 24th roots of unity, choosing the
  // smaller admissible exponent for determinism.
  for (int i = 0; i < rs_.rank(); ++i) {
    std::vector<int> coeffs(static_cast<size_t>(rs_.rank()), 0);
    coeffs[static_cast<size_t>(i)] = 1;
    int s = *rs_.index_of(coeffs);
    CyclotomicElem c = spec.scalar.at(s);
    std::optional<unsigned> k = root_of_unity_exponent(c.embedded(24));
    if (!k) {
      throw hypothesis_error(
          "involution scalar on a simple root is not a 24th root of unity");
    }
    if (*k % 2 != 0) {
      throw hypothesis_error(
          "involution scalar on a simple root has no square root among the "
          "24th roots of unity");
    }
    unsigned m1 = ((24 - *k) / 2) % 24;
    unsigned m2 = (m1 + 12) % 24;
    out.rescale[static_cast<size_t>(i)] = CyclotomicElem::zeta24(std::min(m1, m2));
  }
  // t_a = prod_i t_i^{c_i(a)}; new scalar c'_a = t_a c_a / t_{th(a)}.
  auto t_of = [&](int a) {
    std::vector<int> c = rs_.root_coeffs(a);
    CyclotomicElem t(1);
    for (int i = 0; i < rs_.rank(); ++i) {
      t *= out.rescale[static_cast<size_t>(i)].pow(c[static_cast<size_t>(i)]);
    }
    return t;
  };
  const int npos = rs_.num_positive();
  for (int a = -npos; a <= npos; ++a) {
    if (a == 0) continue;
    int ta = spec.root_image.at(a);
    CyclotomicElem cprime =
        t_of(a) * spec.scalar.at(a) * t_of(ta).inverse();
    std::optional<unsigned> k = root_of_unity_exponent(cprime.embedded(24));
    if (!k || *k % 6 != 0) {
      throw std::logic_error(
          "normalized involution scalar is not a fourth root of unity");
    }
    out.new_scalar[a] = cprime;
  }
  return out;
}

}  // namespace qforma
