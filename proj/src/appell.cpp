#include "ffa/appell.hpp"

#include <cassert>

namespace ffa {

namespace {

void check_field(const Character& a, const Character& b) {
    if (!a.field->same_field(*b.field)) throw MixedFieldsError();
}

}  // namespace

CycNum f1_def(const Character& A, const Character& B, const Character& Bp, const Character& C,
              Elem x, Elem y) {
    check_field(A, B);
    check_field(A, Bp);
    check_field(A, C);
    const FieldTable& f = *A.field;
    if (x == 0 || y == 0) return cyc_zero(f.n);
    const Character Abar = char_inverse(A);
    const Character AbarC = char_product(Abar, C);
    const Character Bbar = char_inverse(B), Bpbar = char_inverse(Bp);
    CycNum acc = cyc_zero(f.n);
    for (Elem u = 0; u < f.q; ++u) {
        acc = acc + char_eval(A, u) * char_eval(AbarC, f.one_minus(u)) *
                        char_eval(Bbar, f.one_minus(f.mul(u, x))) *
                        char_eval(Bpbar, f.one_minus(f.mul(u, y)));
    }
    return char_eval(char_product(A, C), f.neg(1)) * acc;
}

CycNum f2_def(const Character& A, const Character& B, const Character& Bp, const Character& C,
              const Character& Cp, Elem x, Elem y) {
    check_field(A, B);
    check_field(A, Bp);
    check_field(A, C);
    check_field(A, Cp);
    const FieldTable& f = *A.field;
    if (x == 0 || y == 0) return cyc_zero(f.n);
    const Character Abar = char_inverse(A);
    const Character BbarC = char_product(char_inverse(B), C);
    const Character BpbarCp = char_product(char_inverse(Bp), Cp);
    const Character pref =
        char_product(char_product(B, Bp), char_product(C, Cp));
    CycNum acc = cyc_zero(f.n);
    for (Elem u = 0; u < f.q; ++u) {
        const CycNum fu = char_eval(B, u) * char_eval(BbarC, f.one_minus(u));
        if (fu.is_zero()) continue;
        const Elem ux = f.mul(u, x);
        CycNum inner = cyc_zero(f.n);
        for (Elem v = 0; v < f.q; ++v) {
            const CycNum fv = char_eval(Bp, v) * char_eval(BpbarCp, f.one_minus(v));
            if (fv.is_zero()) continue;
            inner = inner + fv * char_eval(Abar, f.sub(f.one_minus(ux), f.mul(v, y)));
        }
        acc = acc + fu * inner;
    }
    return char_eval(pref, f.neg(1)) * acc;
}

CycNum f2_charsum(const BinomialTable& bt, const Character& A, const Character& B,
                  const Character& Bp, const Character& C, const Character& Cp, Elem x, Elem y) {
    check_field(A, B);
    check_field(A, Bp);
    check_field(A, C);
    check_field(A, Cp);
    const FieldTable& f = *A.field;
    const int n = f.n;

    // Per-chi factors u(chi) = {A chi choose chi}{B chi choose C chi} chi(x)
    // are hoisted; the lambda loop reuses them through {A chi lambda choose lambda}.
    std::vector<CycNum> uf;
    uf.reserve(n);
    for (int m = 0; m < n; ++m)
        uf.push_back(bt.entry(A.m + m, m) * bt.entry(B.m + m, C.m + m) *
                     char_eval(Character{&f, m}, x));
    CycNum dbl = cyc_zero(n);
    for (int l = 0; l < n; ++l) {
        const CycNum wy = bt.entry(Bp.m + l, Cp.m + l) * char_eval(Character{&f, l}, y);
        if (wy.is_zero()) continue;
        CycNum inner = cyc_zero(n);
        for (int m = 0; m < n; ++m) {
            if (uf[m].is_zero()) continue;
            inner = inner + uf[m] * bt.entry(A.m + m + l, l);
        }
        dbl = dbl + wy * inner;
    }
    CycNum res = div_exact(dbl, static_cast<long long>(n) * n) +
                 f2_boundary_term(bt, A, B, Bp, C, Cp, x, y);
    // Both addends vanish at x = 0 or y = 0 through the lifted chi(0) = 0
    // convention; assert instead of special-casing.
    if (x == 0 || y == 0) assert(res.is_zero());
    return res;
}

CycNum f2_boundary_term(const BinomialTable& bt, const Character& A, const Character& B,
                        const Character& Bp, const Character& C, const Character& Cp, Elem x,
                        Elem y) {
    const FieldTable& f = *A.field;
    const Character Abar = char_inverse(A);
    const Character AbarB = char_product(Abar, B);
    const Character BCbar = char_product(B, char_inverse(C));
    const Character Cpbar = char_inverse(Cp);
    const Character BpbarCp = char_product(char_inverse(Bp), Cp);
    return char_eval(Abar, f.neg(x)) * char_eval(Cpbar, y) * char_eval(BpbarCp, f.one_minus(y)) *
           bt.entry(AbarB.m, BCbar.m);
}

}  // namespace ffa
