#pragma once

#include <vector>

#include "ffa/errors.hpp"

namespace ffa {

// Field elements are integer indices in [0, q). The base-p digits of the
// index are the polynomial coefficients of the element, constant term least
// significant; for prime fields the index is the residue itself.
using Elem = int;

struct FieldSpec {
    int p = 0;
    int k = 1;
    // Modulus coefficients, ascending degree, size k+1, monic. Empty for k=1.
    std::vector<int> modulus;

    bool operator==(const FieldSpec&) const = default;
};

constexpr long long kDefaultFieldBound = 1024;

// A realized F_q with dense arithmetic and discrete-log tables keyed to the
// canonical generator. Immutable after construction.
class FieldTable {
public:
    FieldSpec spec;
    int q = 0;
    int n = 0;  // q - 1
    Elem generator = 0;

    Elem add(Elem a, Elem b) const { return add_t_[a * q + b]; }
    Elem mul(Elem a, Elem b) const { return mul_t_[a * q + b]; }
    Elem neg(Elem a) const { return neg_t_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem inv(Elem a) const {
        if (a == 0) throw ZeroElementError();
        return inv_t_[a];
    }
    Elem one_minus(Elem a) const { return sub(1, a); }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    int dlog(Elem a) const {
        if (a == 0) throw ZeroElementError();
        return dlog_t_[a];
    }
    Elem exp(int j) const { return exp_t_[((j % n) + n) % n]; }

    bool same_field(const FieldTable& o) const { return this == &o || spec == o.spec; }
    bool operator==(const FieldTable&) const = default;

    friend FieldTable build_field(int p, int k, long long bound);

private:
    std::vector<Elem> add_t_, mul_t_, neg_t_, inv_t_;
    std::vector<int> dlog_t_;  // dlog_t_[0] unused (-1)
    std::vector<Elem> exp_t_;
};

FieldTable build_field(int p, int k, long long bound = kDefaultFieldBound);

// Convenience for CLI input: factor q as p^k and build. Throws NotPrime when
// q is not a prime power.
FieldTable build_field_q(long long q, long long bound = kDefaultFieldBound);

bool is_prime(long long v);
bool is_prime_power(long long q);

}  // namespace ffa
