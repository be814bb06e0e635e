#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffa/errors.hpp"

namespace ffa {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial, ascending degree. Empty vector is the zero
// polynomial; otherwise the leading coefficient is nonzero.
struct IntPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void trim();
    bool operator==(const IntPoly&) const = default;
};

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact division; throws NonDivisible if the remainder is nonzero.
IntPoly poly_divide_exact(const IntPoly& num, const IntPoly& den);

// Phi_n, computed as (x^n - 1) / prod_{d|n, d<n} Phi_d. Cached; thread-safe.
const IntPoly& cyclotomic_poly(int n);

// Element of Z[zeta_n] in the canonical basis 1, zeta, ..., zeta^{phi(n)-1}
// (reduced mod Phi_n). Equality is coefficient-wise by construction.
struct CycNum {
    int n = 1;
    std::vector<BigInt> coeffs;  // length deg Phi_n

    bool is_zero() const;
    bool operator==(const CycNum&) const = default;
};

CycNum cyc_zero(int n);
CycNum cyc_int(int n, const BigInt& v);
CycNum zeta_pow(int n, long long j);  // zeta_n^(j mod n)

CycNum operator+(const CycNum& a, const CycNum& b);
CycNum operator-(const CycNum& a, const CycNum& b);
CycNum operator-(const CycNum& a);
CycNum operator*(const CycNum& a, const CycNum& b);
CycNum scalar_mul(const BigInt& c, const CycNum& a);
inline CycNum operator*(long long c, const CycNum& a) { return scalar_mul(BigInt(c), a); }
inline CycNum operator*(const CycNum& a, long long c) { return scalar_mul(BigInt(c), a); }

// Division by an integer that must divide every coefficient; throws
// NonDivisible otherwise.
CycNum div_exact(const CycNum& a, long long d);

// Evaluate at zeta_n = exp(2*pi*i/n) in double precision.
std::complex<double> to_complex(const CycNum& a);

// Render as a polynomial in "z", e.g. "z^3 - 2z + 1".
std::string cyc_to_string(const CycNum& a);

}  // namespace ffa
