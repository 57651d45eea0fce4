#include "qforma/cyclotomic.hpp"

#include "qforma/linalg.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qforma {
namespace {

using Poly = std::vector<BigRational>; // constant term first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Remainder of a modulo monic b.
Poly rem(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !b.empty()) {
        BigRational lead = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead * b[j];
        trim(a);
    }
    return a;
}

// Quotient of exact division a / b with b monic.
std::vector<BigInt> divide_exact(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    std::vector<BigInt> q(a.size() - b.size() + 1, BigInt(0));
    while (a.size() >= b.size()) {
        BigInt lead = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    if (!a.empty()) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

Poly to_rational_poly(const std::vector<BigInt>& p) {
    Poly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = BigRational(p[i]);
    return r;
}

// Extended Euclid in Q[x]: returns u with u*f == 1 (mod m), m irreducible monic.
Poly invert_mod(const Poly& f, const Poly& m) {
    Poly r0 = m, r1 = f, s0 = {}, s1 = {BigRational(1)};
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rr = r0;
        trim(rr);
        if (rr.size() >= r1.size()) {
            q.assign(rr.size() - r1.size() + 1, BigRational(0));
            while (rr.size() >= r1.size()) {
                BigRational c = rr.back() / r1.back();
                std::size_t shift = rr.size() - r1.size();
                q[shift] += c;
                for (std::size_t j = 0; j < r1.size(); ++j) rr[shift + j] -= c * r1[j];
                trim(rr);
                if (rr.empty()) break;
            }
        }
        Poly s2 = s0;
        { // s2 = s0 - q*s1
            Poly qs = mul(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size(), BigRational(0));
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            trim(s2);
        }
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant, since m is irreducible and f != 0 mod m)
    trim(r0);
    if (r0.size() != 1) throw std::domain_error("element not invertible");
    BigRational c = r0[0];
    for (auto& x : s0) x /= c;
    return rem(std::move(s0), m);
}

} // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<BigInt>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    if (n == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    // x^n - 1
    std::vector<BigInt> num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
    return memo.emplace(n, std::move(num)).first->second;
}

CyclotomicElem::CyclotomicElem() : CyclotomicElem(BigRational(0)) {}
CyclotomicElem::CyclotomicElem(int v) : CyclotomicElem(BigRational(v)) {}
CyclotomicElem::CyclotomicElem(const BigRational& v)
    : d_order(default_order), d_c(euler_phi(default_order), BigRational(0)) {
    d_c[0] = v;
}

CyclotomicElem::CyclotomicElem(unsigned order, std::vector<BigRational> coeffs)
    : d_order(order) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    reduce(std::move(coeffs));
}

void CyclotomicElem::reduce(std::vector<BigRational> poly) {
    const auto& phi = cyclotomic_polynomial(d_order);
    Poly r = rem(std::move(poly), to_rational_poly(phi));
    r.resize(euler_phi(d_order), BigRational(0));
    d_c = std::move(r);
}

CyclotomicElem CyclotomicElem::root_of_unity(unsigned order, long long k) {
    if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    long long m = k % static_cast<long long>(order);
    if (m < 0) m += order;
    std::vector<BigRational> poly(static_cast<std::size_t>(m) + 1, BigRational(0));
    poly.back() = 1;
    return CyclotomicElem(order, std::move(poly));
}

CyclotomicElem CyclotomicElem::embedded(unsigned m) const {
    if (m % d_order != 0) throw std::invalid_argument("embedding requires divisible order");
    if (m == d_order) return *this;
    unsigned step = m / d_order;
    std::vector<BigRational> poly((d_c.size() - 1) * step + 1, BigRational(0));
    for (std::size_t j = 0; j < d_c.size(); ++j) poly[j * step] = d_c[j];
    return CyclotomicElem(m, std::move(poly));
}

namespace {
unsigned common_order(unsigned a, unsigned b) {
    return std::lcm(a, b);
}
} // namespace

CyclotomicElem CyclotomicElem::operator+(const CyclotomicElem& o) const {
    unsigned n = common_order(d_order, o.d_order);
    if (n != d_order || n != o.d_order) return embedded(n) + o.embedded(n);
    std::vector<BigRational> c = d_c;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.d_c[i];
    return CyclotomicElem(d_order, std::move(c));
}

CyclotomicElem CyclotomicElem::operator-(const CyclotomicElem& o) const {
    return *this + (-o);
}

CyclotomicElem CyclotomicElem::operator-() const {
    std::vector<BigRational> c = d_c;
    for (auto& x : c) x = -x;
    return CyclotomicElem(d_order, std::move(c));
}

CyclotomicElem CyclotomicElem::operator*(const CyclotomicElem& o) const {
    unsigned n = common_order(d_order, o.d_order);
    if (n != d_order || n != o.d_order) return embedded(n) * o.embedded(n);
    return CyclotomicElem(d_order, mul(d_c, o.d_c));
}

CyclotomicElem CyclotomicElem::operator/(const CyclotomicElem& o) const {
    return *this * o.inverse();
}

bool CyclotomicElem::operator==(const CyclotomicElem& o) const {
    unsigned n = common_order(d_order, o.d_order);
    if (n != d_order || n != o.d_order) return embedded(n) == o.embedded(n);
    return d_c == o.d_c;
}

CyclotomicElem CyclotomicElem::conj() const {
    std::vector<BigRational> poly(d_order, BigRational(0));
    for (std::size_t j = 0; j < d_c.size(); ++j)
        poly[(d_order - j) % d_order] += d_c[j];
    return CyclotomicElem(d_order, std::move(poly));
}

CyclotomicElem CyclotomicElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero cyclotomic element");
    Poly f = d_c;
    trim(f);
    Poly m = to_rational_poly(cyclotomic_polynomial(d_order));
    return CyclotomicElem(d_order, invert_mod(f, m));
}

CyclotomicElem CyclotomicElem::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicElem base = *this;
    CyclotomicElem acc(d_order, {BigRational(1)});
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CyclotomicElem::is_zero() const {
    for (const auto& x : d_c)
        if (!(x == 0)) return false;
    return true;
}

bool CyclotomicElem::is_rational() const {
    for (std::size_t i = 1; i < d_c.size(); ++i)
        if (!(d_c[i] == 0)) return false;
    return true;
}

BigRational CyclotomicElem::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
    return d_c[0];
}

namespace {
// Decompose x = a*1 + b*w for a basis pair {1, w} with w irrational.
std::optional<std::pair<BigRational, BigRational>>
two_term_decomposition(const CyclotomicElem& x, const CyclotomicElem& w) {
    CyclotomicElem one(1);
    unsigned n = std::lcm(x.order(), w.order());
    auto xe = x.embedded(n), we = w.embedded(n), oe = one.embedded(n);
    std::size_t dim = xe.coeffs().size();
    Mat<BigRational> a(dim, 2);
    std::vector<BigRational> rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        a(i, 0) = oe.coeffs()[i];
        a(i, 1) = we.coeffs()[i];
        rhs[i] = xe.coeffs()[i];
    }
    try {
        auto sol = solve_full_col_rank(a, rhs);
        return std::make_pair(sol[0], sol[1]);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}
} // namespace

bool CyclotomicElem::in_gaussian_field() const {
    if (d_order % 4 != 0) return is_rational();
    return two_term_decomposition(*this, root_of_unity(d_order, d_order / 4)).has_value();
}

std::pair<BigRational, BigRational> CyclotomicElem::gaussian_parts() const {
    if (d_order % 4 != 0) return {rational_value(), BigRational(0)};
    auto d = two_term_decomposition(*this, root_of_unity(d_order, d_order / 4));
    if (!d) throw std::domain_error("cyclotomic element is not in Q(i)");
    return *d;
}

bool CyclotomicElem::in_sqrt3_field() const {
    if (d_order % 12 != 0) return is_rational();
    auto s = root_of_unity(d_order, d_order / 12) + root_of_unity(d_order, -(long long)(d_order / 12));
    return two_term_decomposition(*this, s).has_value();
}

std::pair<BigRational, BigRational> CyclotomicElem::sqrt3_parts() const {
    if (d_order % 12 != 0) return {rational_value(), BigRational(0)};
    auto s = root_of_unity(d_order, d_order / 12) + root_of_unity(d_order, -(long long)(d_order / 12));
    auto d = two_term_decomposition(*this, s);
    if (!d) throw std::domain_error("cyclotomic element is not in Q(sqrt 3)");
    return *d;
}

std::string CyclotomicElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < d_c.size(); ++j) {
        if (d_c[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << qforma::to_string(d_c[j]);
        } else {
            if (!(d_c[j] == 1)) os << "(" << qforma::to_string(d_c[j]) << ")*";
            os << "z^" << j;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::optional<unsigned> root_of_unity_exponent(const CyclotomicElem& x) {
    unsigned n = x.order();
    for (unsigned k = 0; k < n; ++k)
        if (x == CyclotomicElem::root_of_unity(n, k)) return k;
    return std::nullopt;
}

} // namespace qforma
