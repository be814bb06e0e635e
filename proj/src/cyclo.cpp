#include "ffa/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "ffa/errors.hpp"

namespace ffa {

void IntPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    IntPoly r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
}

IntPoly poly_divide_exact(const IntPoly& num, const IntPoly& den) {
    if (den.coeffs.empty()) throw NonDivisibleError(0);
    IntPoly rem = num;
    rem.trim();
    const int dd = den.degree();
    const BigInt& lead = den.coeffs.back();
    IntPoly quot;
    if (rem.degree() >= dd) quot.coeffs.assign(rem.degree() - dd + 1, BigInt(0));
    while (rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        BigInt c = rem.coeffs.back() / lead;
        if (c * lead != rem.coeffs.back()) throw NonDivisibleError(0);
        quot.coeffs[shift] = c;
        for (int i = 0; i <= dd; ++i) rem.coeffs[shift + i] -= c * den.coeffs[i];
        rem.trim();
    }
    if (!rem.coeffs.empty()) throw NonDivisibleError(0);
    quot.trim();
    return quot;
}

const IntPoly& cyclotomic_poly(int n) {
    static std::mutex mtx;
    static std::map<int, IntPoly> cache;
    std::scoped_lock lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by all proper-divisor cyclotomics.
    IntPoly num;
    num.coeffs.assign(n + 1, BigInt(0));
    num.coeffs[0] = -1;
    num.coeffs[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto jt = cache.find(d);
        if (jt == cache.end()) {
            // Recurse outside the lock-free path: compute divisors bottom-up.
            // Divisors are strictly smaller, so a simple loop in increasing d
            // with on-demand computation terminates.
            IntPoly sub_num;
            sub_num.coeffs.assign(d + 1, BigInt(0));
            sub_num.coeffs[0] = -1;
            sub_num.coeffs[d] = 1;
            for (int e = 1; e < d; ++e)
                if (d % e == 0) sub_num = poly_divide_exact(sub_num, cache.at(e));
            jt = cache.emplace(d, std::move(sub_num)).first;
        }
        num = poly_divide_exact(num, jt->second);
    }
    return cache.emplace(n, std::move(num)).first->second;
}

namespace {

// Per-n context: Phi_n, reduction rows for x^k with k >= deg, and the reduced
// representations of all n powers of zeta.
struct CycRing {
    int n = 1;
    int deg = 1;
    IntPoly phi;
    std::vector<std::vector<BigInt>> xpow;  // xpow[i] = x^(deg+i) mod phi
    std::vector<std::vector<BigInt>> zpow;  // zpow[j] = zeta^j, j in [0, n)
};

const CycRing& ring(int n) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<CycRing>> cache;
    std::scoped_lock lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto r = std::make_unique<CycRing>();
    r->n = n;
    r->phi = cyclotomic_poly(n);
    r->deg = r->phi.degree();
    const int d = r->deg;

    // x^d mod phi = -(phi - x^d); subsequent rows by shift-and-fold.
    r->xpow.resize(std::max(d - 1, 1));
    r->xpow[0].assign(d, BigInt(0));
    for (int i = 0; i < d; ++i) r->xpow[0][i] = -r->phi.coeffs[i];
    for (int i = 1; i < d - 1; ++i) {
        std::vector<BigInt> row(d, BigInt(0));
        const auto& prev = r->xpow[i - 1];
        for (int j = 0; j + 1 < d; ++j) row[j + 1] = prev[j];
        const BigInt& top = prev[d - 1];
        if (top != 0)
            for (int j = 0; j < d; ++j) row[j] += top * r->xpow[0][j];
        r->xpow[i] = std::move(row);
    }

    r->zpow.resize(n);
    r->zpow[0].assign(d, BigInt(0));
    r->zpow[0][0] = 1;
    for (int j = 1; j < n; ++j) {
        std::vector<BigInt> row(d, BigInt(0));
        const auto& prev = r->zpow[j - 1];
        for (int i = 0; i + 1 < d; ++i) row[i + 1] = prev[i];
        const BigInt& top = prev[d - 1];
        if (top != 0)
            for (int i = 0; i < d; ++i) row[i] += top * r->xpow[0][i];
        r->zpow[j] = std::move(row);
    }

    const CycRing& ref = *r;
    cache.emplace(n, std::move(r));
    return ref;
}

void check_same_root(const CycNum& a, const CycNum& b) {
    if (a.n != b.n) throw MixedRootsError(a.n, b.n);
}

}  // namespace

bool CycNum::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

CycNum cyc_zero(int n) {
    const CycRing& r = ring(n);
    return CycNum{n, std::vector<BigInt>(r.deg, BigInt(0))};
}

CycNum cyc_int(int n, const BigInt& v) {
    CycNum a = cyc_zero(n);
    a.coeffs[0] = v;
    return a;
}

CycNum zeta_pow(int n, long long j) {
    const CycRing& r = ring(n);
    long long e = j % n;
    if (e < 0) e += n;
    return CycNum{n, r.zpow[static_cast<size_t>(e)]};
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    check_same_root(a, b);
    CycNum r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    check_same_root(a, b);
    CycNum r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

CycNum operator-(const CycNum& a) {
    CycNum r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    check_same_root(a, b);
    const CycRing& r = ring(a.n);
    const int d = r.deg;
    std::vector<BigInt> conv(2 * d - 1, BigInt(0));
    for (int i = 0; i < d; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (b.coeffs[j] == 0) continue;
            conv[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    }
    CycNum res{a.n, std::vector<BigInt>(conv.begin(), conv.begin() + d)};
    for (int k = d; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = r.xpow[k - d];
        for (int i = 0; i < d; ++i) res.coeffs[i] += conv[k] * row[i];
    }
    return res;
}

CycNum scalar_mul(const BigInt& c, const CycNum& a) {
    CycNum r = a;
    for (auto& x : r.coeffs) x *= c;
    return r;
}

CycNum div_exact(const CycNum& a, long long d) {
    if (d == 0) throw NonDivisibleError(0);
    CycNum r = a;
    for (auto& c : r.coeffs) {
        if (c % d != 0) throw NonDivisibleError(d);
        c /= d;
    }
    return r;
}

std::complex<double> to_complex(const CycNum& a) {
    const long double ang = 2.0L * 3.141592653589793238462643383279502884L / a.n;
    const std::complex<long double> z(std::cos(ang), std::sin(ang));
    std::complex<long double> acc(0.0L, 0.0L);
    for (size_t i = a.coeffs.size(); i-- > 0;)
        acc = acc * z + std::complex<long double>(a.coeffs[i].convert_to<long double>(), 0.0L);
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string cyc_to_string(const CycNum& a) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = a.coeffs.size(); i-- > 0;) {
        const BigInt& c = a.coeffs[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag.str();
        if (i >= 1) {
            os << "z";
            if (i >= 2) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace ffa
