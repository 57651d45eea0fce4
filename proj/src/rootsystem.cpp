#include "qforma/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qforma {

namespace {

void validate_factor(const SimpleFactor& f) {
  auto fail = [&] {
    std::ostringstream os;
    os << "invalid Cartan type factor " << f.letter << f.rank;
    throw std::invalid_argument(os.str());
  };
  switch (f.letter) {
    case 'A':
      if (f.rank < 1) fail();
      break;
    case 'B':
      if (f.rank < 2) fail();
      break;
    case 'C':
      if (f.rank < 2) fail();
      break;
    case 'D':
      if (f.rank < 3) fail();
      break;
    case 'E':
      if (f.rank < 6 || f.rank > 8) fail();
      break;
    case 'F':
      if (f.rank != 4) fail();
      break;
    case 'G':
      if (f.rank != 2) fail();
      break;
    default:
      fail();
  }
}

}  // namespace

CartanType::CartanType(std::vector<SimpleFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) {
    throw std::invalid_argument("Cartan type must have at least one factor");
  }
  for (const SimpleFactor& f : factors_) validate_factor(f);
}

CartanType CartanType::parse(const std::string& text) {
  std::vector<SimpleFactor> factors;
  size_t pos = 0;
  while (pos < text.size()) {
    char letter = static_cast<char>(std::toupper(
        static_cast<unsigned char>(text[pos])));
    ++pos;
    size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw std::invalid_argument("Cartan type factor missing rank: " + text);
    }
    factors.push_back(
        SimpleFactor{letter, std::atoi(text.substr(start, pos - start).c_str())});
    if (pos < text.size()) {
      char sep = static_cast<char>(std::tolower(
          static_cast<unsigned char>(text[pos])));
      if (sep != 'x') {
        throw std::invalid_argument("bad Cartan type syntax: " + text);
      }
      ++pos;
      if (pos == text.size()) {
        throw std::invalid_argument("trailing separator in Cartan type: " + text);
      }
    }
  }
  if (factors.empty()) {
    throw std::invalid_argument("empty Cartan type");
  }
  return CartanType(std::move(factors));
}

int CartanType::rank() const {
  int r = 0;
  for (const SimpleFactor& f : factors_) r += f.rank;
  return r;
}

std::string CartanType::to_string() const {
  std::ostringstream os;
  for (size_t k = 0; k < factors_.size(); ++k) {
    if (k) os << 'x';
    os << factors_[k].letter << factors_[k].rank;
  }
  return os.str();
}

// --- RootSystem --------------------------------------------------------------

RootSystem::RootSystem(const CartanType& type)
    : type_(type), rank_(type.rank()), cartan_inv_t_(0, 0) {
  build_cartan();
  generate_roots();
  Mat<BigRational> ct(rank_, rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) ct(i, j) = BigRational(cartan_[j][i]);
  }
  cartan_inv_t_ = inverse(ct);
}

void RootSystem::build_cartan() {
  cartan_.assign(static_cast<size_t>(rank_),
                 std::vector<int>(static_cast<size_t>(rank_), 0));
  dsym_.assign(static_cast<size_t>(rank_), 1);
  int base = 0;
  for (const SimpleFactor& f : type_.factors()) {
    const int n = f.rank;
    auto C = [&](int i, int j) -> int& {
      return cartan_[static_cast<size_t>(base + i)][static_cast<size_t>(base + j)];
    };
    auto D = [&](int i) -> int& { return dsym_[static_cast<size_t>(base + i)]; };
    for (int i = 0; i < n; ++i) C(i, i) = 2;
    // Edges of the Dynkin diagram, standard numbering. `chain(i, j)` writes a
    // single simply-laced bond between nodes i and j.
    auto chain = [&](int i, int j) {
      C(i, j) = -1;
      C(j, i) = -1;
    };
    switch (f.letter) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
        break;
      case 'B':
        // Nodes 0..n-2 long (d=2), node n-1 short (d=1); double bond at end.
        for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
        C(n - 2, n - 1) = -2;
        C(n - 1, n - 2) = -1;
        for (int i = 0; i + 1 < n; ++i) D(i) = 2;
        D(n - 1) = 1;
        break;
      case 'C':
        // Nodes 0..n-2 short (d=1), node n-1 long (d=2).
        for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
        C(n - 2, n - 1) = -1;
        C(n - 1, n - 2) = -2;
        D(n - 1) = 2;
        break;
      case 'D':
        for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
        chain(n - 3, n - 1);
        break;
      case 'E':
        // Chain 1-3-4-5-6(-7(-8)) with node 2 attached to node 4 (1-based).
        chain(0, 2);
        chain(2, 3);
        chain(1, 3);
        for (int i = 4; i < n; ++i) chain(i - 1, i);
        break;
      case 'F':
        // Nodes 0,1 long (d=2), nodes 2,3 short (d=1); double bond 1=>2.
        chain(0, 1);
        chain(2, 3);
        C(1, 2) = -2;
        C(2, 1) = -1;
        D(0) = 2;
        D(1) = 2;
        break;
      case 'G':
        // Node 0 short (d=1), node 1 long (d=3).
        C(0, 1) = -1;
        C(1, 0) = -3;
        D(1) = 3;
        break;
      default:
        throw std::logic_error("unreachable Cartan letter");
    }
    base += n;
  }
}

void RootSystem::generate_roots() {
  // Closure by height: a positive root beta extends to beta + alpha_i exactly
  // when q > 0 in the alpha_i-string through beta, where
  // q = p - <beta, alpha_i^vee> and p counts how far the string descends
  // inside the positive roots found so far (all of lower height, hence
  // already complete when beta is processed).
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> current;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(static_cast<size_t>(rank_), 0);
    e[static_cast<size_t>(i)] = 1;
    current.push_back(e);
    seen.insert(e);
  }
  std::vector<std::vector<std::vector<int>>> by_height{current};
  while (!by_height.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const std::vector<int>& beta : by_height.back()) {
      for (int i = 0; i < rank_; ++i) {
        int pairing_val = 0;
        for (int j = 0; j < rank_; ++j) {
          pairing_val += beta[static_cast<size_t>(j)] * cartan_[static_cast<size_t>(j)][static_cast<size_t>(i)];
        }
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[static_cast<size_t>(i)] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        if (p - pairing_val > 0) {
          std::vector<int> up = beta;
          up[static_cast<size_t>(i)] += 1;
          if (!seen.count(up)) {
            seen.insert(up);
            next.push_back(up);
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    by_height.push_back(next);
  }
  positive_.clear();
  pos_height_.clear();
  index_.clear();
  for (size_t h = 0; h < by_height.size(); ++h) {
    std::vector<std::vector<int>> level = by_height[h];
    std::sort(level.begin(), level.end());
    for (const std::vector<int>& r : level) {
      positive_.push_back(r);
      pos_height_.push_back(static_cast<int>(h) + 1);
      index_[r] = static_cast<int>(positive_.size());
    }
  }
}

std::vector<int> RootSystem::root_coeffs(int signed_index) const {
  if (signed_index == 0 ||
      std::abs(signed_index) > static_cast<int>(positive_.size())) {
    throw std::out_of_range("root index out of range");
  }
  std::vector<int> c = positive_[static_cast<size_t>(std::abs(signed_index)) - 1];
  if (signed_index < 0) {
    for (int& v : c) v = -v;
  }
  return c;
}

int RootSystem::height(int signed_index) const {
  int h = pos_height_[static_cast<size_t>(std::abs(signed_index)) - 1];
  return signed_index > 0 ? h : -h;
}

std::optional<int> RootSystem::index_of(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) return std::nullopt;
  bool has_pos = false;
  bool has_neg = false;
  for (int v : coeffs) {
    if (v > 0) has_pos = true;
    if (v < 0) has_neg = true;
  }
  if (has_pos && has_neg) return std::nullopt;
  if (!has_pos && !has_neg) return std::nullopt;
  if (has_pos) {
    auto it = index_.find(coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::vector<int> neg = coeffs;
  for (int& v : neg) v = -v;
  auto it = index_.find(neg);
  if (it == index_.end()) return std::nullopt;
  return -it->second;
}

std::optional<int> RootSystem::sum_root(int a, int b) const {
  std::vector<int> ca = root_coeffs(a);
  std::vector<int> cb = root_coeffs(b);
  for (int j = 0; j < rank_; ++j) ca[static_cast<size_t>(j)] += cb[static_cast<size_t>(j)];
  return index_of(ca);
}

BigRational RootSystem::norm2(int signed_index) const {
  return root_bilinear(signed_index, signed_index);
}

BigRational RootSystem::root_bilinear(int a, int b) const {
  // (alpha, beta) = sum_{i,j} a_i b_j (alpha_i, alpha_j)
  //              = sum_{i,j} a_i b_j d_j C[i][j].
  std::vector<int> ca = root_coeffs(a);
  std::vector<int> cb = root_coeffs(b);
  long long acc = 0;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      acc += static_cast<long long>(ca[static_cast<size_t>(i)]) * cb[static_cast<size_t>(j)] *
             dsym_[static_cast<size_t>(j)] * cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return BigRational(acc);
}

int RootSystem::pairing(int a, int b) const {
  BigRational v = BigRational(2) * root_bilinear(a, b) / norm2(b);
  if (!is_integer(v)) throw std::logic_error("non-integral root pairing");
  return static_cast<int>(num(v).convert_to<long long>());
}

int RootSystem::pairing_with_simple(int a, int j) const {
  std::vector<int> ca = root_coeffs(a);
  int acc = 0;
  for (int i = 0; i < rank_; ++i) {
    acc += ca[static_cast<size_t>(i)] * cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return acc;
}

int RootSystem::chain_down(int a, int b) const {
  std::vector<int> ca = root_coeffs(a);
  std::vector<int> cb = root_coeffs(b);
  int p = 0;
  while (true) {
    for (int j = 0; j < rank_; ++j) ca[static_cast<size_t>(j)] -= cb[static_cast<size_t>(j)];
    if (!index_of(ca)) break;
    ++p;
  }
  return p;
}

Weight RootSystem::root_as_weight(int signed_index) const {
  std::vector<int> c = root_coeffs(signed_index);
  return from_root_basis(c);
}

std::vector<BigRational> RootSystem::to_root_basis(const Weight& m) const {
  if (static_cast<int>(m.size()) != rank_) {
    throw std::invalid_argument("weight has wrong length");
  }
  std::vector<BigRational> out(static_cast<size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    BigRational acc(0);
    for (int j = 0; j < rank_; ++j) {
      acc += cartan_inv_t_(i, j) * BigRational(m[static_cast<size_t>(j)]);
    }
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

Weight RootSystem::from_root_basis(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) {
    throw std::invalid_argument("root-basis vector has wrong length");
  }
  Weight m(static_cast<size_t>(rank_), 0);
  for (int k = 0; k < rank_; ++k) {
    long long acc = 0;
    for (int i = 0; i < rank_; ++i) {
      acc += static_cast<long long>(coeffs[static_cast<size_t>(i)]) *
             cartan_[static_cast<size_t>(i)][static_cast<size_t>(k)];
    }
    m[static_cast<size_t>(k)] = acc;
  }
  return m;
}

Weight RootSystem::reflect(int i, const Weight& m) const {
  Weight out = m;
  long long mi = m[static_cast<size_t>(i)];
  for (int k = 0; k < rank_; ++k) {
    out[static_cast<size_t>(k)] -= mi * cartan_[static_cast<size_t>(i)][static_cast<size_t>(k)];
  }
  return out;
}

Weight RootSystem::antidominant(const Weight& m) const {
  Weight cur = m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank_; ++i) {
      if (cur[static_cast<size_t>(i)] > 0) {
        cur = reflect(i, cur);
        changed = true;
      }
    }
  }
  return cur;
}

bool RootSystem::is_self_dual(const Weight& m) const {
  Weight anti = antidominant(m);
  for (int i = 0; i < rank_; ++i) {
    if (anti[static_cast<size_t>(i)] != -m[static_cast<size_t>(i)]) return false;
  }
  return true;
}

BigRational RootSystem::coefficient_sum(const Weight& m) const {
  std::vector<BigRational> c = to_root_basis(m);
  BigRational acc(0);
  for (const BigRational& v : c) acc += v;
  return acc;
}

bool RootSystem::in_root_lattice(const Weight& m) const {
  for (const BigRational& v : to_root_basis(m)) {
    if (!is_integer(v)) return false;
  }
  return true;
}

std::vector<BigRational> RootSystem::root_lattice_coset(const Weight& m) const {
  std::vector<BigRational> c = to_root_basis(m);
  for (BigRational& v : c) {
    BigInt q = num(v) / den(v);
    BigRational frac = v - BigRational(q);
    if (frac < 0) frac += 1;
    v = frac;
  }
  return c;
}

BigInt RootSystem::fundamental_group_order() const {
  // |det C| computed over the rationals.
  Mat<BigRational> c(rank_, rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) c(i, j) = BigRational(cartan_[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  // Fraction-free style determinant via row reduction with pivot tracking.
  BigRational det(1);
  for (int col = 0, row = 0; col < rank_ && row < rank_; ++col) {
    int pivot = -1;
    for (int r = row; r < rank_; ++r) {
      if (!(c(r, col) == BigRational(0))) { pivot = r; break; }
    }
    if (pivot < 0) return 0;
    if (pivot != row) {
      for (int j = 0; j < rank_; ++j) std::swap(c(pivot, j), c(row, j));
      det = -det;
    }
    det *= c(row, col);
    BigRational inv_p = BigRational(1) / c(row, col);
    for (int j = col; j < rank_; ++j) c(row, j) *= inv_p;
    for (int r = row + 1; r < rank_; ++r) {
      BigRational f = c(r, col);
      if (f == BigRational(0)) continue;
      for (int j = col; j < rank_; ++j) c(r, j) -= f * c(row, j);
    }
    ++row;
  }
  if (det < 0) det = -det;
  if (!is_integer(det)) throw std::logic_error("Cartan determinant not integral");
  return num(det);
}

BigInt RootSystem::weyl_dimension(const Weight& m) const {
  if (!is_dominant(m)) {
    throw std::invalid_argument("weyl_dimension requires a dominant weight");
  }
  // prod over positive roots of (lambda + rho, alpha) / (rho, alpha), using
  // (mu, alpha) = sum_j mu_j c_j(alpha) d_j for alpha = sum_j c_j alpha_j.
  BigRational prod(1);
  for (int k = 1; k <= num_positive(); ++k) {
    std::vector<int> c = root_coeffs(k);
    BigInt numer = 0;
    BigInt denom = 0;
    for (int j = 0; j < rank_; ++j) {
      BigInt w = BigInt(c[static_cast<size_t>(j)]) * dsym_[static_cast<size_t>(j)];
      numer += (BigInt(m[static_cast<size_t>(j)]) + 1) * w;
      denom += w;
    }
    prod *= BigRational(numer, denom);
  }
  if (!is_integer(prod)) throw std::logic_error("Weyl dimension not integral");
  return num(prod);
}

BigRational RootSystem::weight_bilinear(const Weight& a, const Weight& b) const {
  std::vector<BigRational> cb = to_root_basis(b);
  BigRational acc(0);
  for (int i = 0; i < rank_; ++i) {
    acc += BigRational(a[static_cast<size_t>(i)]) * BigRational(dsym_[static_cast<size_t>(i)]) * cb[static_cast<size_t>(i)];
  }
  return acc;
}

bool RootSystem::is_dominant(const Weight& m) const {
  if (static_cast<int>(m.size()) != rank_) return false;
  return std::all_of(m.begin(), m.end(), [](long long v) { return v >= 0; });
}

}  // namespace qforma
