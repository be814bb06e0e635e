#include "ffa/hyper.hpp"

namespace ffa {

namespace {

void check_field(const Character& a, const Character& b) {
    if (!a.field->same_field(*b.field)) throw MixedFieldsError();
}

}  // namespace

CycNum jacobi(const Character& A, const Character& B) {
    check_field(A, B);
    const FieldTable& f = *A.field;
    CycNum acc = cyc_zero(f.n);
    for (Elem u = 1; u < f.q; ++u) {
        const Elem w = f.one_minus(u);
        if (w == 0) continue;
        acc = acc + zeta_pow(f.n, static_cast<long long>(A.m) * f.dlog(u) +
                                      static_cast<long long>(B.m) * f.dlog(w));
    }
    return acc;
}

BinomialTable::BinomialTable(const FieldTable& f) : f_(&f), n_(f.n) {
    t_.reserve(static_cast<size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            Character A{&f, a}, B{&f, b};
            CycNum j = jacobi(A, char_inverse(B));
            t_.push_back(char_eval(B, f.neg(1)) * j);
        }
    }
}

CycNum binom(const BinomialTable& bt, const Character& A, const Character& B) {
    check_field(A, B);
    if (!A.field->same_field(bt.field())) throw MixedFieldsError();
    return bt.entry(A.m, B.m);
}

CycNum f21_def(const Character& A, const Character& B, const Character& C, Elem x) {
    check_field(A, B);
    check_field(A, C);
    const FieldTable& f = *A.field;
    if (x == 0) return cyc_zero(f.n);
    const Character Bbar = char_inverse(B), Abar = char_inverse(A);
    const Character BbarC = char_product(Bbar, C), BC = char_product(B, C);
    CycNum acc = cyc_zero(f.n);
    for (Elem y = 0; y < f.q; ++y) {
        const CycNum t =
            char_eval(B, y) * char_eval(BbarC, f.one_minus(y)) * char_eval(Abar, f.one_minus(f.mul(x, y)));
        acc = acc + t;
    }
    return char_eval(BC, f.neg(1)) * acc;
}

CycNum f21_charsum(const BinomialTable& bt, const Character& A, const Character& B,
                   const Character& C, Elem x) {
    check_field(A, B);
    check_field(A, C);
    const FieldTable& f = *A.field;
    CycNum acc = cyc_zero(f.n);
    for (int m = 0; m < f.n; ++m) {
        Character chi{&f, m};
        const CycNum cx = char_eval(chi, x);
        if (cx.is_zero()) continue;
        acc = acc + bt.entry(A.m + m, m) * bt.entry(B.m + m, C.m + m) * cx;
    }
    return div_exact(acc, f.n);
}

CycNum fpq_charsum(const BinomialTable& bt, const std::vector<Character>& numer,
                   const std::vector<Character>& denom, Elem x) {
    if (numer.empty() || numer.size() != denom.size() + 1)
        throw ArityMismatchError("fpq requires n+1 numerator and n denominator characters");
    const FieldTable& f = *numer[0].field;
    for (const auto& c : numer)
        if (!c.field->same_field(f)) throw MixedFieldsError();
    for (const auto& c : denom)
        if (!c.field->same_field(f)) throw MixedFieldsError();
    CycNum acc = cyc_zero(f.n);
    for (int m = 0; m < f.n; ++m) {
        Character chi{&f, m};
        const CycNum cx = char_eval(chi, x);
        if (cx.is_zero()) continue;
        CycNum term = bt.entry(numer[0].m + m, m);
        for (size_t i = 0; i < denom.size(); ++i)
            term = term * bt.entry(numer[i + 1].m + m, denom[i].m + m);
        acc = acc + term * cx;
    }
    return div_exact(acc, f.n);
}

CycNum binomial_theorem_rhs(const BinomialTable& bt, const Character& A, Elem x) {
    const FieldTable& f = *A.field;
    CycNum acc = cyc_zero(f.n);
    for (int m = 0; m < f.n; ++m) {
        const CycNum cx = char_eval(Character{&f, m}, x);
        if (cx.is_zero()) continue;
        acc = acc + bt.entry(A.m, m) * cx;
    }
    return cyc_int(f.n, delta_elem(x)) + div_exact(acc, f.n);
}

CycNum trinomial_rhs(const BinomialTable& bt, const Character& A, Elem x, Elem y) {
    const FieldTable& f = *A.field;
    if (y == f.neg(1)) return char_eval(A, x);
    CycNum res = cyc_int(f.n, delta_elem(x) * delta_elem(y));
    CycNum single = cyc_zero(f.n);
    if (delta_elem(x)) {
        for (int m = 0; m < f.n; ++m) {
            const CycNum cy = char_eval(Character{&f, m}, y);
            if (!cy.is_zero()) single = single + bt.entry(A.m, m) * cy;
        }
    }
    if (delta_elem(y)) {
        for (int m = 0; m < f.n; ++m) {
            const CycNum cx = char_eval(Character{&f, m}, x);
            if (!cx.is_zero()) single = single + bt.entry(A.m, m) * cx;
        }
    }
    res = res + div_exact(single, f.n);
    CycNum dbl = cyc_zero(f.n);
    for (int m = 0; m < f.n; ++m) {
        const CycNum cx = char_eval(Character{&f, m}, x);
        if (cx.is_zero()) continue;
        const CycNum outer = bt.entry(A.m, m) * cx;
        CycNum inner = cyc_zero(f.n);
        for (int l = 0; l < f.n; ++l) {
            const CycNum cy = char_eval(Character{&f, l}, y);
            if (!cy.is_zero()) inner = inner + bt.entry(A.m - m, l) * cy;
        }
        dbl = dbl + outer * inner;
    }
    return res + div_exact(dbl, static_cast<long long>(f.n) * f.n);
}

}  // namespace ffa
