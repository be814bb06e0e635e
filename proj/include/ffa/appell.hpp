#pragma once

#include "ffa/hyper.hpp"

namespace ffa {

// F1(A;B,B';C;x,y) = eps(xy) AC(-1) sum_u A(u) (A^-1 C)(1-u) B^-1(1-ux) B'^-1(1-uy).
CycNum f1_def(const Character& A, const Character& B, const Character& Bp, const Character& C,
              Elem x, Elem y);

// F2(A;B,B';C,C';x,y) as the defining double sum over (u, v), O(q^2) terms.
CycNum f2_def(const Character& A, const Character& B, const Character& Bp, const Character& C,
              const Character& Cp, Elem x, Elem y);

// F2 through the double character sum plus the v = 1/y boundary term.
// Returns 0 for x = 0 or y = 0, matching f2_def.
CycNum f2_charsum(const BinomialTable& bt, const Character& A, const Character& B,
                  const Character& Bp, const Character& C, const Character& Cp, Elem x, Elem y);

// The isolated boundary term A^-1(-x) C'^-1(y) (B'^-1 C')(1-y) {A^-1 B choose B C^-1}.
CycNum f2_boundary_term(const BinomialTable& bt, const Character& A, const Character& B,
                        const Character& Bp, const Character& C, const Character& Cp, Elem x,
                        Elem y);

}  // namespace ffa
