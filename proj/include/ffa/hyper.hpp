#pragma once

#include <vector>

#include "ffa/chars.hpp"

namespace ffa {

// Jacobi sum J(A, B) = sum_u A(u) B(1-u) over u in F_q.
CycNum jacobi(const Character& A, const Character& B);

// Precomputed table of all binomial coefficients {chi_a choose chi_b}
// = chi_b(-1) J(chi_a, inverse(chi_b)). Built eagerly: the character-sum
// evaluators do (q-1)^2 lookups per call.
class BinomialTable {
public:
    explicit BinomialTable(const FieldTable& f);

    const FieldTable& field() const { return *f_; }
    const CycNum& entry(int a, int b) const {
        return t_[static_cast<size_t>(((a % n_) + n_) % n_) * n_ + (((b % n_) + n_) % n_)];
    }

private:
    const FieldTable* f_;
    int n_;
    std::vector<CycNum> t_;
};

CycNum binom(const BinomialTable& bt, const Character& A, const Character& B);

// 2F1(A,B;C|x) in the x q normalization: the defining sum
// eps(x) BC(-1) sum_y B(y) (B^-1 C)(1-y) A^-1(1-xy).
CycNum f21_def(const Character& A, const Character& B, const Character& C, Elem x);

// Same function through the character sum
// (1/(q-1)) sum_chi {A chi choose chi}{B chi choose C chi} chi(x).
CycNum f21_charsum(const BinomialTable& bt, const Character& A, const Character& B,
                   const Character& C, Elem x);

// (n+1)Fn via its character sum. numer = (A_0, ..., A_n), denom = (B_1, ..., B_n).
CycNum fpq_charsum(const BinomialTable& bt, const std::vector<Character>& numer,
                   const std::vector<Character>& denom, Elem x);

// delta(x) + (1/(q-1)) sum_chi {A choose chi} chi(x); equals A(1+x).
CycNum binomial_theorem_rhs(const BinomialTable& bt, const Character& A, Elem x);

// The double-character-sum expansion of A(1+x+y); collapses to A(x) at y = -1.
CycNum trinomial_rhs(const BinomialTable& bt, const Character& A, Elem x, Elem y);

}  // namespace ffa
