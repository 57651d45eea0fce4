#include "qforma/hwmodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qforma/errors.hpp"

namespace qforma {

BigInt checked_dimension(const RootSystem& rs, const Weight& lambda,
                         long long cap) {
  BigInt d = rs.weyl_dimension(lambda);
  if (d > BigInt(cap)) {
    std::ostringstream os;
    os << "module dimension " << d << " exceeds the configured cap " << cap;
    throw cap_exceeded(os.str());
  }
  return d;
}

HighestWeightModule::HighestWeightModule(const ChevalleySystem& cs,
                                         Weight lambda, long long dim_cap)
    : cs_(&cs), lambda_(std::move(lambda)), cap_(dim_cap) {
  build();
}

int HighestWeightModule::weight_index(const Weight& mu) const {
  auto it = weight_index_.find(mu);
  return it == weight_index_.end() ? -1 : it->second;
}

const std::vector<int>& HighestWeightModule::word_of_basis(long long p) const {
  int w = basis_weight_[static_cast<size_t>(p)];
  long long local = p - offsets_[static_cast<size_t>(w)];
  return words_[static_cast<size_t>(w)][static_cast<size_t>(local)];
}

// Contravariant-form recursion over lowering words, with memoization:
// B([], []) = 1 and B([i] + u, J) = sum over positions t of J carrying
// letter i of <lambda - sum_{s > t} alpha_{J_s}, alpha_i^vee> B(u, J \ t).
BigRational HighestWeightModule::shapovalov(const std::vector<int>& u,
                                            const std::vector<int>& w) const {
  if (u.size() != w.size()) return BigRational(0);
  if (u.empty()) return BigRational(1);
  auto key = std::make_pair(u, w);
  auto it = shap_memo_.find(key);
  if (it != shap_memo_.end()) return it->second;

  const RootSystem& rs = cs_->roots();
  const int r = rs.rank();
  const int i = u.front();
  std::vector<int> rest(u.begin() + 1, u.end());
  BigRational acc(0);
  // suffix[t] = <lambda - sum_{s > t} alpha_{w_s}, alpha_i^vee>, built from
  // the right; alpha_j contributes its i-th fundamental coordinate C[j][i].
  long long pair_i = lambda_[static_cast<size_t>(i)];
  std::vector<long long> suffix(w.size());
  for (size_t t = w.size(); t-- > 0;) {
    suffix[t] = pair_i;
    pair_i -= rs.cartan(w[t], i);
  }
  for (size_t t = 0; t < w.size(); ++t) {
    if (w[t] != i) continue;
    std::vector<int> reduced;
    reduced.reserve(w.size() - 1);
    for (size_t s = 0; s < w.size(); ++s) {
      if (s != t) reduced.push_back(w[s]);
    }
    acc += BigRational(suffix[t]) * shapovalov(rest, reduced);
  }
  (void)r;
  shap_memo_.emplace(std::move(key), acc);
  return acc;
}

std::vector<BigRational> HighestWeightModule::express_over_basis(
    int w_index, const std::vector<int>& word) const {
  const auto& basis_words = words_[static_cast<size_t>(w_index)];
  const size_t m = basis_words.size();
  std::vector<BigRational> rhs(m);
  for (size_t k = 0; k < m; ++k) rhs[k] = shapovalov(word, basis_words[k]);
  const Mat<BigRational>& ginv = gram_inv_[static_cast<size_t>(w_index)];
  std::vector<BigRational> out(m, BigRational(0));
  for (size_t p = 0; p < m; ++p) {
    for (size_t q = 0; q < m; ++q) out[p] += ginv(p, q) * rhs[q];
  }
  return out;
}

void HighestWeightModule::build() {
  const RootSystem& rs = cs_->roots();
  const int r = rs.rank();
  if (static_cast<int>(lambda_.size()) != r) {
    throw std::invalid_argument("highest weight has wrong length");
  }
  if (!rs.is_dominant(lambda_)) {
    throw std::invalid_argument("highest weight must be dominant");
  }
  BigInt expected = checked_dimension(rs, lambda_, cap_);

  weights_.push_back(lambda_);
  weight_index_[lambda_] = 0;
  words_.push_back({std::vector<int>{}});
  {
    Mat<BigRational> g(1, 1);
    g(0, 0) = BigRational(1);
    gram_inv_.push_back(g);
  }

  std::vector<int> current{0};
  while (!current.empty()) {
    // Candidate weights one level down, in ascending coordinate order.
    std::map<Weight, char> next_weights;
    for (int wi : current) {
      const Weight& mu = weights_[static_cast<size_t>(wi)];
      for (int i = 0; i < r; ++i) {
        Weight nu = mu;
        for (int k = 0; k < r; ++k) nu[static_cast<size_t>(k)] -= rs.cartan(i, k);
        next_weights.emplace(std::move(nu), 0);
      }
    }
    std::vector<int> next;
    for (const auto& [nu, unused] : next_weights) {
      // Candidates: [i] + w over parents nu + alpha_i present in the module.
      std::vector<std::vector<int>> cand;
      for (int i = 0; i < r; ++i) {
        Weight parent = nu;
        for (int k = 0; k < r; ++k) {
          parent[static_cast<size_t>(k)] += rs.cartan(i, k);
        }
        auto pit = weight_index_.find(parent);
        if (pit == weight_index_.end()) continue;
        for (const std::vector<int>& w : words_[static_cast<size_t>(pit->second)]) {
          std::vector<int> ext;
          ext.reserve(w.size() + 1);
          ext.push_back(i);
          ext.insert(ext.end(), w.begin(), w.end());
          cand.push_back(std::move(ext));
        }
      }
      if (cand.empty()) continue;
      const size_t n = cand.size();
      Mat<BigRational> gram(n, n);
      for (size_t p = 0; p < n; ++p) {
        for (size_t q = 0; q < n; ++q) gram(p, q) = shapovalov(cand[p], cand[q]);
      }
      SpanBuilder<BigRational> rows(n);
      std::vector<size_t> selected;
      for (size_t p = 0; p < n; ++p) {
        std::vector<BigRational> row(n);
        for (size_t q = 0; q < n; ++q) row[q] = gram(p, q);
        if (rows.add(std::move(row))) selected.push_back(p);
      }
      if (selected.empty()) continue;
      const size_t m = selected.size();
      Mat<BigRational> gsel(m, m);
      for (size_t p = 0; p < m; ++p) {
        for (size_t q = 0; q < m; ++q) gsel(p, q) = gram(selected[p], selected[q]);
      }
      int index = static_cast<int>(weights_.size());
      weights_.push_back(nu);
      weight_index_[nu] = index;
      std::vector<std::vector<int>> sel_words;
      sel_words.reserve(m);
      for (size_t p : selected) sel_words.push_back(cand[p]);
      words_.push_back(std::move(sel_words));
      gram_inv_.push_back(inverse(gsel));
      next.push_back(index);
    }
    current = std::move(next);
  }

  offsets_.resize(weights_.size());
  long long off = 0;
  for (size_t w = 0; w < weights_.size(); ++w) {
    offsets_[w] = off;
    off += static_cast<long long>(words_[w].size());
  }
  dim_ = off;
  if (BigInt(dim_) != expected) {
    throw std::logic_error("constructed dimension disagrees with the Weyl formula");
  }
  basis_weight_.resize(static_cast<size_t>(dim_));
  for (size_t w = 0; w < weights_.size(); ++w) {
    for (size_t k = 0; k < words_[w].size(); ++k) {
      basis_weight_[static_cast<size_t>(offsets_[w]) + k] = static_cast<int>(w);
    }
  }

  // Generator matrices.
  const size_t nd = static_cast<size_t>(dim_);
  e_.assign(static_cast<size_t>(r), Mat<BigRational>(nd, nd));
  f_.assign(static_cast<size_t>(r), Mat<BigRational>(nd, nd));
  h_.assign(static_cast<size_t>(r), Mat<BigRational>(nd, nd));
  for (long long p = 0; p < dim_; ++p) {
    const int wi = basis_weight_[static_cast<size_t>(p)];
    const Weight& mu = weights_[static_cast<size_t>(wi)];
    const std::vector<int>& word = word_of_basis(p);
    for (int i = 0; i < r; ++i) {
      h_[static_cast<size_t>(i)](static_cast<size_t>(p), static_cast<size_t>(p)) =
          BigRational(mu[static_cast<size_t>(i)]);
      // F_i column: the candidate word [i] + word at weight mu - alpha_i.
      {
        Weight nu = mu;
        for (int k = 0; k < r; ++k) nu[static_cast<size_t>(k)] -= rs.cartan(i, k);
        auto nit = weight_index_.find(nu);
        if (nit != weight_index_.end()) {
          std::vector<int> ext;
          ext.reserve(word.size() + 1);
          ext.push_back(i);
          ext.insert(ext.end(), word.begin(), word.end());
          std::vector<BigRational> coeffs = express_over_basis(nit->second, ext);
          long long base = offsets_[static_cast<size_t>(nit->second)];
          for (size_t k = 0; k < coeffs.size(); ++k) {
            f_[static_cast<size_t>(i)](static_cast<size_t>(base) + k,
                                       static_cast<size_t>(p)) = coeffs[k];
          }
        }
      }
      // E_i column: raise the word letter by letter.
      {
        Weight up = mu;
        for (int k = 0; k < r; ++k) up[static_cast<size_t>(k)] += rs.cartan(i, k);
        auto uit = weight_index_.find(up);
        if (uit == weight_index_.end()) continue;
        const size_t m = words_[static_cast<size_t>(uit->second)].size();
        std::vector<BigRational> total(m, BigRational(0));
        long long pair_i = lambda_[static_cast<size_t>(i)];
        std::vector<long long> suffix(word.size());
        for (size_t t = word.size(); t-- > 0;) {
          suffix[t] = pair_i;
          pair_i -= rs.cartan(word[t], i);
        }
        for (size_t t = 0; t < word.size(); ++t) {
          if (word[t] != i) continue;
          std::vector<int> reduced;
          reduced.reserve(word.size() - 1);
          for (size_t s = 0; s < word.size(); ++s) {
            if (s != t) reduced.push_back(word[s]);
          }
          std::vector<BigRational> coeffs =
              express_over_basis(uit->second, reduced);
          for (size_t k = 0; k < m; ++k) {
            total[k] += BigRational(suffix[t]) * coeffs[k];
          }
        }
        long long base = offsets_[static_cast<size_t>(uit->second)];
        for (size_t k = 0; k < m; ++k) {
          e_[static_cast<size_t>(i)](static_cast<size_t>(base) + k,
                                     static_cast<size_t>(p)) = total[k];
        }
      }
    }
  }
}

const Mat<BigRational>& HighestWeightModule::root_matrix(int a) const {
  auto it = root_mat_.find(a);
  if (it != root_mat_.end()) return it->second;
  const RootSystem& rs = cs_->roots();
  Mat<BigRational> result(static_cast<size_t>(dim_), static_cast<size_t>(dim_));
  if (std::abs(rs.height(a)) == 1) {
    // Simple root vectors: x_{alpha_i} acts as E_i, x_{-alpha_i} as -F_i.
    std::vector<int> c = rs.root_coeffs(std::abs(a));
    int i = 0;
    for (int k = 0; k < rs.rank(); ++k) {
      if (c[static_cast<size_t>(k)] == 1) i = k;
    }
    result = a > 0 ? e_[static_cast<size_t>(i)]
                   : BigRational(-1) * f_[static_cast<size_t>(i)];
  } else {
    // x_{gamma} = [x_{s*eps}, x_{s*eta}] / N(s*eps, s*eta) for gamma =
    // s*(eps+eta) with (eps, eta) the extraspecial pair of |gamma|.
    int mag = std::abs(a);
    int eps = 0;
    int eta = 0;
    for (int e = 1; e < mag; ++e) {
      std::optional<int> rest = rs.sum_root(mag, -e);
      if (rest && *rest > 0) {
        eps = e;
        eta = *rest;
        break;
      }
    }
    int s = a > 0 ? 1 : -1;
    const Mat<BigRational>& xe = root_matrix(s * eps);
    const Mat<BigRational>& xh = root_matrix(s * eta);
    BigInt n = cs_->structure_constant(s * eps, s * eta);
    result = BigRational(1, n) * (xe * xh - xh * xe);
  }
  auto [pos, inserted] = root_mat_.emplace(a, std::move(result));
  (void)inserted;
  return pos->second;
}

Mat<CyclotomicElem> HighestWeightModule::act(const LieElt& elt) const {
  const size_t nd = static_cast<size_t>(dim_);
  Mat<CyclotomicElem> out(nd, nd);
  auto accumulate = [&](const CyclotomicElem& c, const Mat<BigRational>& m) {
    if (c.is_zero()) return;
    for (size_t p = 0; p < nd; ++p) {
      for (size_t q = 0; q < nd; ++q) {
        if (m(p, q) == BigRational(0)) continue;
        out(p, q) += m(p, q) * c;
      }
    }
  };
  for (size_t i = 0; i < elt.h.size(); ++i) {
    accumulate(elt.h[i], h_[i]);
  }
  for (const auto& [a, c] : elt.x) {
    accumulate(c, root_matrix(a));
  }
  return out;
}

const Mat<BigRational>& HighestWeightModule::contravariant_gram() const {
  if (gram_full_.rows() != static_cast<size_t>(dim_)) {
    Mat<BigRational> g(static_cast<size_t>(dim_), static_cast<size_t>(dim_));
    for (size_t w = 0; w < weights_.size(); ++w) {
      const auto& ws = words_[w];
      long long base = offsets_[w];
      for (size_t p = 0; p < ws.size(); ++p) {
        for (size_t q = 0; q < ws.size(); ++q) {
          g(static_cast<size_t>(base) + p, static_cast<size_t>(base) + q) =
              shapovalov(ws[p], ws[q]);
        }
      }
    }
    gram_full_ = std::move(g);
  }
  return gram_full_;
}

long long HighestWeightModule::lowest_position() const {
  Weight low = cs_->roots().antidominant(lambda_);
  int w = weight_index(low);
  if (w < 0 || multiplicity(w) != 1) {
    throw std::logic_error("lowest weight space is not one-dimensional");
  }
  return offsets_[static_cast<size_t>(w)];
}

const Mat<BigRational>& HighestWeightModule::invariant_pairing() const {
  if (omega_.rows() == static_cast<size_t>(dim_)) return omega_;
  const RootSystem& rs = cs_->roots();
  if (!rs.is_self_dual(lambda_)) {
    throw hypothesis_error(
        "invariant pairing requires a self-dual highest weight");
  }
  const size_t nd = static_cast<size_t>(dim_);
  const long long low = lowest_position();
  Mat<BigRational> omega(nd, nd);
  for (size_t p = 0; p < nd; ++p) {
    const std::vector<int>& word = word_of_basis(static_cast<long long>(p));
    // Row p of Omega: (-1)^k e_low^T F_{i_k} ... F_{i_1} for word [i_1..i_k].
    std::vector<BigRational> row(nd, BigRational(0));
    row[static_cast<size_t>(low)] = BigRational(1);
    for (size_t t = word.size(); t-- > 0;) {
      const Mat<BigRational>& fm = f_[static_cast<size_t>(word[t])];
      std::vector<BigRational> nxt(nd, BigRational(0));
      for (size_t a = 0; a < nd; ++a) {
        if (row[a] == BigRational(0)) continue;
        for (size_t b = 0; b < nd; ++b) {
          if (fm(a, b) == BigRational(0)) continue;
          nxt[b] += row[a] * fm(a, b);
        }
      }
      row = std::move(nxt);
    }
    BigRational sign(word.size() % 2 == 0 ? 1 : -1);
    for (size_t q = 0; q < nd; ++q) omega(p, q) = sign * row[q];
  }
  // Replay the defining properties exactly.
  for (int i = 0; i < rs.rank(); ++i) {
    const Mat<BigRational>& em = e_[static_cast<size_t>(i)];
    const Mat<BigRational>& fm = f_[static_cast<size_t>(i)];
    const Mat<BigRational>& hm = h_[static_cast<size_t>(i)];
    if (!(em.transposed() * omega + omega * em).is_zero() ||
        !(fm.transposed() * omega + omega * fm).is_zero() ||
        !(hm.transposed() * omega + omega * hm).is_zero()) {
      throw std::logic_error("invariant pairing failed the invariance replay");
    }
  }
  Mat<BigRational> omega_t = omega.transposed();
  if (omega_t == omega) {
    fs_sign_ = 1;
  } else if (omega_t == BigRational(-1) * omega) {
    fs_sign_ = -1;
  } else {
    throw std::logic_error("invariant pairing is neither symmetric nor "
                           "antisymmetric");
  }
  omega_ = std::move(omega);
  return omega_;
}

int HighestWeightModule::pairing_symmetry() const {
  invariant_pairing();
  return fs_sign_;
}

Mat<BigRational> HighestWeightModule::exp_nilpotent(
    const Mat<BigRational>& n) const {
  const size_t nd = n.rows();
  Mat<BigRational> acc = Mat<BigRational>::identity(nd);
  Mat<BigRational> term = Mat<BigRational>::identity(nd);
  long long k = 1;
  while (true) {
    term = BigRational(BigInt(1), BigInt(k)) * (term * n);
    if (term.is_zero()) break;
    acc = acc + term;
    ++k;
  }
  return acc;
}

Mat<BigRational> HighestWeightModule::weyl_representative(int a) const {
  // exp(e) exp(-f) exp(e) for the triple e = x_a, f = -x_{-a}: the middle
  // factor is exp(x_{-a}).
  const Mat<BigRational>& xp = root_matrix(a);
  const Mat<BigRational>& xm = root_matrix(-a);
  return exp_nilpotent(xp) * exp_nilpotent(xm) * exp_nilpotent(xp);
}

}  // namespace qforma
