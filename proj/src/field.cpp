#include "ffa/field.hpp"

#include <algorithm>
#include <numeric>

namespace ffa {

bool is_prime(long long v) {
    if (v < 2) return false;
    for (long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

bool is_prime_power(long long q) {
    if (q < 2) return false;
    long long p = q;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    long long v = q;
    while (v % p == 0) v /= p;
    return v == 1;
}

namespace {

using Digits = std::vector<int>;  // length k, base-p coefficients

Digits to_digits(int idx, int p, int k) {
    Digits d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = idx % p;
        idx /= p;
    }
    return d;
}

int to_index(const Digits& d, int p) {
    int idx = 0;
    for (size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
    return idx;
}

// Remainder of a (dense, any length) by monic b over F_p.
Digits poly_mod_p(Digits a, const Digits& b, int p) {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        const int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int& t = a[i - db + j];
            t = (t - c * b[j]) % p;
            if (t < 0) t += p;
        }
    }
    a.resize(db);
    return a;
}

bool is_irreducible(const Digits& f, int p) {
    const int k = static_cast<int>(f.size()) - 1;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (int d = 1; 2 * d <= k; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long m = 0; m < count; ++m) {
            Digits g = to_digits(static_cast<int>(m), p, d);
            g.push_back(1);
            Digits r = poly_mod_p(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree k over F_p,
// coefficients compared from highest degree down.
Digits canonical_modulus(int p, int k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long m = 0; m < count; ++m) {
        // Base-p digits of m are the lower coefficients; increasing m
        // enumerates (c_{k-1}, ..., c_0) in ascending lexicographic order.
        Digits f = to_digits(static_cast<int>(m), p, k);
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
    }
    throw InternalNoGeneratorError();  // unreachable: irreducibles exist for every (p, k)
}

}  // namespace

FieldTable build_field(int p, int k, long long bound) {
    if (!is_prime(p)) throw NotPrimeError(p);
    if (k < 1) throw NotPrimeError(k);
    long long q_ll = 1;
    for (int i = 0; i < k; ++i) {
        q_ll *= p;
        if (q_ll > bound) throw BoundExceededError(q_ll, bound);
    }
    const int q = static_cast<int>(q_ll);

    FieldTable f;
    f.spec.p = p;
    f.spec.k = k;
    if (k > 1) {
        Digits mod = canonical_modulus(p, k);
        f.spec.modulus.assign(mod.begin(), mod.end());
    }
    f.q = q;
    f.n = q - 1;

    f.add_t_.assign(static_cast<size_t>(q) * q, 0);
    f.mul_t_.assign(static_cast<size_t>(q) * q, 0);
    f.neg_t_.assign(q, 0);
    f.inv_t_.assign(q, 0);
    Digits mod(f.spec.modulus.begin(), f.spec.modulus.end());
    for (int a = 0; a < q; ++a) {
        Digits da = to_digits(a, p, k);
        for (int b = 0; b < q; ++b) {
            Digits db = to_digits(b, p, k);
            Digits sum(k);
            for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
            f.add_t_[static_cast<size_t>(a) * q + b] = to_index(sum, p);
            Digits prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            if (k > 1) prod = poly_mod_p(std::move(prod), mod, p);
            prod.resize(k);
            f.mul_t_[static_cast<size_t>(a) * q + b] = to_index(prod, p);
        }
        Digits neg(k);
        for (int i = 0; i < k; ++i) neg[i] = (p - da[i]) % p;
        f.neg_t_[a] = to_index(neg, p);
    }
    for (int a = 1; a < q; ++a)
        for (int b = 1; b < q; ++b)
            if (f.mul_t_[static_cast<size_t>(a) * q + b] == 1) {
                f.inv_t_[a] = b;
                break;
            }

    // Canonical generator: smallest index with multiplicative order n.
    f.generator = 0;
    for (int g = 1; g < q; ++g) {
        int x = g, order = 1;
        while (x != 1) {
            x = f.mul_t_[static_cast<size_t>(x) * q + g];
            ++order;
        }
        if (order == f.n || (f.n == 0)) {
            f.generator = g;
            break;
        }
    }
    if (f.generator == 0) throw InternalNoGeneratorError();

    f.dlog_t_.assign(q, -1);
    f.exp_t_.assign(std::max(f.n, 1), 1);
    int x = 1;
    for (int j = 0; j < f.n; ++j) {
        f.exp_t_[j] = x;
        f.dlog_t_[x] = j;
        x = f.mul_t_[static_cast<size_t>(x) * q + f.generator];
    }
    return f;
}

FieldTable build_field_q(long long q, long long bound) {
    if (q < 2) throw NotPrimeError(q);
    long long p = q;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int k = 0;
    long long v = q;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    if (v != 1) throw NotPrimeError(q);
    return build_field(static_cast<int>(p), k, bound);
}

}  // namespace ffa
