#include "nsct/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "nsct/error.hpp"

namespace nsct {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw InternalCheckFailed("cyclotomic polynomial coefficient overflow");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw InternalCheckFailed("cyclotomic polynomial coefficient overflow");
    return r;
}

using Poly = std::vector<long long>;

/// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
Poly poly_exact_div(Poly num, const Poly& den) {
    const std::size_t dd = den.size() - 1;
    Poly q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        long long c = num[k];
        q[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] = checked_sub(num[k - dd + j], checked_mul(c, den[j]));
    }
    for (std::size_t k = 0; k < dd; ++k)
        if (num[k] != 0) throw InternalCheckFailed("cyclotomic division left a remainder");
    return q;
}

/// Per-conductor reduction data.
struct Field {
    unsigned m = 1;
    unsigned phi = 1;
    /// powers[j] = coefficient vector of ζ^j, 0 <= j < m.
    std::vector<std::vector<long long>> powers;
};

std::mutex g_cache_mutex;
std::map<unsigned, Poly>& poly_cache() {
    static std::map<unsigned, Poly> cache;
    return cache;
}
std::map<unsigned, std::shared_ptr<const Field>>& field_cache() {
    static std::map<unsigned, std::shared_ptr<const Field>> cache;
    return cache;
}

const Poly& cyclotomic_locked(unsigned m) {
    auto& cache = poly_cache();
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    Poly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) num = poly_exact_div(num, cyclotomic_locked(d));
    return cache.emplace(m, std::move(num)).first->second;
}

std::shared_ptr<const Field> field(unsigned m) {
    if (m == 0) throw InvalidArgument("conductor must be positive");
    std::lock_guard lock(g_cache_mutex);
    auto& cache = field_cache();
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    const Poly& phi_poly = cyclotomic_locked(m);
    auto f = std::make_shared<Field>();
    f->m = m;
    f->phi = static_cast<unsigned>(phi_poly.size() - 1);
    f->powers.resize(m);
    // x^j mod Φ: shift the previous remainder and fold the top term back.
    std::vector<long long> cur(f->phi, 0);
    cur[0] = 1;
    for (unsigned j = 0; j < m; ++j) {
        f->powers[j] = cur;
        long long top = cur[f->phi - 1];
        std::vector<long long> next(f->phi, 0);
        for (unsigned k = f->phi - 1; k > 0; --k) next[k] = cur[k - 1];
        for (unsigned k = 0; k < f->phi; ++k) next[k] = checked_sub(next[k], checked_mul(top, phi_poly[k]));
        cur = std::move(next);
    }
    return cache.emplace(m, std::move(f)).first->second;
}

/// Folds an exponent-indexed accumulator (index = power of ζ mod m) into canonical coefficients.
std::vector<Rational> fold(const Field& f, const std::vector<Rational>& acc) {
    std::vector<Rational> out(f.phi);
    for (unsigned j = 0; j < f.m; ++j) {
        if (acc[j] == 0) continue;
        if (j < f.phi) {
            out[j] += acc[j];
            continue;
        }
        const auto& pw = f.powers[j];
        for (unsigned k = 0; k < f.phi; ++k)
            if (pw[k] != 0) out[k] += acc[j] * pw[k];
    }
    return out;
}

bool coeffs_rational(const std::vector<Rational>& c) {
    for (std::size_t k = 1; k < c.size(); ++k)
        if (c[k] != 0) return false;
    return true;
}

}  // namespace

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<long long>& cyclotomic_polynomial(unsigned m) {
    if (m == 0) throw InvalidArgument("conductor must be positive");
    std::lock_guard lock(g_cache_mutex);
    return cyclotomic_locked(m);
}

CycNum::CycNum(Rational q) : conductor_(1), coeffs_{std::move(q)} {}

CycNum CycNum::from_polynomial(unsigned conductor, const std::vector<Rational>& poly) {
    auto f = field(conductor);
    std::vector<Rational> acc(f->m);
    for (std::size_t k = 0; k < poly.size(); ++k) acc[k % f->m] += poly[k];
    return CycNum(conductor, fold(*f, acc));
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const { return coeffs_rational(coeffs_); }

Rational CycNum::as_rational() const {
    if (!is_rational()) throw NotRational(format_cyc(*this) + " is not rational");
    return coeffs_[0];
}

CycNum CycNum::rebase(unsigned new_conductor) const {
    if (new_conductor == conductor_) return *this;
    if (new_conductor == 0) throw InvalidArgument("conductor must be positive");
    if (is_rational()) {
        std::vector<Rational> c(field(new_conductor)->phi);
        c[0] = coeffs_[0];
        return CycNum(new_conductor, std::move(c));
    }
    if (new_conductor % conductor_ != 0)
        throw ConductorMismatch("cannot rebase conductor " + std::to_string(conductor_) + " to " +
                                std::to_string(new_conductor));
    auto f = field(new_conductor);
    const unsigned step = new_conductor / conductor_;
    std::vector<Rational> acc(f->m);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) acc[(k * step) % f->m] += coeffs_[k];
    return CycNum(new_conductor, fold(*f, acc));
}

namespace {

/// Brings two operands to a shared conductor, promoting rational ones.
void align(CycNum& a, CycNum& b) {
    if (a.conductor() == b.conductor()) return;
    if (a.is_rational()) {
        a = a.rebase(b.conductor());
        return;
    }
    if (b.is_rational()) {
        b = b.rebase(a.conductor());
        return;
    }
    throw ConductorMismatch("operands have conductors " + std::to_string(a.conductor()) + " and " +
                            std::to_string(b.conductor()));
}

}  // namespace

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    CycNum b = o;
    align(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    CycNum b = o;
    align(*this, b);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    if (o.is_rational()) {
        const Rational q = o.coeffs_[0];
        for (auto& c : coeffs_) c *= q;
        return *this;
    }
    if (is_rational()) {
        const Rational q = coeffs_[0];
        *this = o;
        for (auto& c : coeffs_) c *= q;
        return *this;
    }
    if (conductor_ != o.conductor_)
        throw ConductorMismatch("operands have conductors " + std::to_string(conductor_) + " and " +
                                std::to_string(o.conductor_));
    auto f = field(conductor_);
    std::vector<Rational> acc(f->m);
    for (unsigned i = 0; i < f->phi; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < f->phi; ++j)
            if (o.coeffs_[j] != 0) acc[(i + j) % f->m] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = fold(*f, acc);
    return *this;
}

CycNum& CycNum::operator/=(const Rational& q) {
    if (q == 0) throw InvalidArgument("division by zero");
    for (auto& c : coeffs_) c /= q;
    return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    const bool ar = a.is_rational(), br = b.is_rational();
    if (ar || br) return ar && br && a.coeffs_[0] == b.coeffs_[0];
    const unsigned l = std::lcm(a.conductor_, b.conductor_);
    return a.rebase(l).coeffs_ == b.rebase(l).coeffs_;
}

bool lex_less(const CycNum& a, const CycNum& b) {
    if (a.conductor() == b.conductor()) return a.coeffs() < b.coeffs();
    const unsigned l = std::lcm(a.conductor(), b.conductor());
    return a.rebase(l).coeffs() < b.rebase(l).coeffs();
}

CycNum root_of_unity(unsigned m, long long k) {
    if (m == 0) throw InvalidArgument("root of unity order must be positive");
    long long e = k % static_cast<long long>(m);
    if (e < 0) e += m;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
    poly[static_cast<std::size_t>(e)] = 1;
    return CycNum::from_polynomial(m, poly);
}

CycNum galois_power(const CycNum& a, long long r) {
    const long long m = a.conductor();
    long long rr = r % m;
    if (rr < 0) rr += m;
    if (std::gcd(rr == 0 ? m : rr, m) != 1 && m > 1)
        throw NotCoprime("exponent " + std::to_string(r) + " is not coprime to conductor " + std::to_string(m));
    if (a.is_rational()) return a;
    std::vector<Rational> poly(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < a.coeffs().size(); ++k)
        poly[(k * static_cast<std::size_t>(rr)) % static_cast<std::size_t>(m)] += a.coeffs()[k];
    return CycNum::from_polynomial(a.conductor(), poly);
}

std::string format_cyc(const CycNum& a) {
    if (a.is_rational()) return to_string(a.coeffs()[0]);
    std::string out;
    const std::string base = "E(" + std::to_string(a.conductor()) + ")";
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
        const Rational& c = a.coeffs()[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (neg)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (k == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += base;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace nsct
