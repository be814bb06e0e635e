#include <doctest.h>

#include "ffa/appell.hpp"

using namespace ffa;

TEST_CASE("F2 defining sum: worked value at q = 3") {
    const FieldTable f = build_field_q(3);
    const Character chi1{&f, 1};
    CHECK(f2_def(chi1, chi1, chi1, chi1, chi1, 1, 2) == cyc_int(2, 1));
}

TEST_CASE("F1 and F2 vanish when x or y is zero") {
    const FieldTable f = build_field_q(5);
    const BinomialTable bt(f);
    for (int a = 0; a < f.n; ++a) {
        const Character A{&f, a}, B{&f, (a + 1) % f.n}, C{&f, (a + 2) % f.n};
        for (Elem t = 0; t < f.q; ++t) {
            CHECK(f1_def(A, B, C, A, 0, t).is_zero());
            CHECK(f1_def(A, B, C, A, t, 0).is_zero());
            CHECK(f2_def(A, B, C, A, B, 0, t).is_zero());
            CHECK(f2_def(A, B, C, A, B, t, 0).is_zero());
            CHECK(f2_charsum(bt, A, B, C, A, B, 0, t).is_zero());
            CHECK(f2_charsum(bt, A, B, C, A, B, t, 0).is_zero());
        }
    }
}

TEST_CASE("F1 is symmetric under swapping (B,x) with (B',y)") {
    const FieldTable f = build_field_q(4);
    for (int a = 0; a < f.n; ++a)
        for (int b = 0; b < f.n; ++b)
            for (int bp = 0; bp < f.n; ++bp)
                for (int c = 0; c < f.n; ++c)
                    for (Elem x = 0; x < f.q; ++x)
                        for (Elem y = 0; y < f.q; ++y) {
                            const Character A{&f, a}, B{&f, b}, Bp{&f, bp}, C{&f, c};
                            CHECK(f1_def(A, B, Bp, C, x, y) == f1_def(A, Bp, B, C, y, x));
                        }
}

TEST_CASE("F2 is symmetric under swapping the primed slots with (x,y)") {
    const FieldTable f = build_field_q(3);
    for (int a = 0; a < f.n; ++a)
        for (int b = 0; b < f.n; ++b)
            for (int bp = 0; bp < f.n; ++bp)
                for (int c = 0; c < f.n; ++c)
                    for (int cp = 0; cp < f.n; ++cp)
                        for (Elem x = 0; x < f.q; ++x)
                            for (Elem y = 0; y < f.q; ++y) {
                                const Character A{&f, a}, B{&f, b}, Bp{&f, bp}, C{&f, c},
                                    Cp{&f, cp};
                                CHECK(f2_def(A, B, Bp, C, Cp, x, y) ==
                                      f2_def(A, Bp, B, Cp, C, y, x));
                            }
}

TEST_CASE("F2 boundary term is the stated product of table lookups") {
    const FieldTable f = build_field_q(5);
    const BinomialTable bt(f);
    for (int a = 0; a < f.n; ++a)
        for (int b = 0; b < f.n; ++b)
            for (int bp = 0; bp < f.n; ++bp)
                for (int c = 0; c < f.n; ++c) {
                    const int cp = (a + b) % f.n;
                    const Character A{&f, a}, B{&f, b}, Bp{&f, bp}, C{&f, c}, Cp{&f, cp};
                    for (Elem x = 1; x < f.q; ++x)
                        for (Elem y = 1; y < f.q; ++y) {
                            const CycNum expect =
                                char_eval(char_inverse(A), f.neg(x)) *
                                char_eval(char_inverse(Cp), y) *
                                char_eval(char_product(char_inverse(Bp), Cp),
                                          f.one_minus(y)) *
                                bt.entry((b - a + f.n) % f.n, (b - c + f.n) % f.n);
                            CHECK(f2_boundary_term(bt, A, B, Bp, C, Cp, x, y) == expect);
                        }
                }
}

TEST_CASE("F2 character sum agrees with the defining sum") {
    for (long long q : {2, 3, 4}) {
        const FieldTable f = build_field_q(q);
        const BinomialTable bt(f);
        for (int a = 0; a < f.n; ++a)
            for (int b = 0; b < f.n; ++b)
                for (int bp = 0; bp < f.n; ++bp)
                    for (int c = 0; c < f.n; ++c)
                        for (int cp = 0; cp < f.n; ++cp)
                            for (Elem x = 0; x < f.q; ++x)
                                for (Elem y = 0; y < f.q; ++y) {
                                    const Character A{&f, a}, B{&f, b}, Bp{&f, bp}, C{&f, c},
                                        Cp{&f, cp};
                                    CHECK(f2_charsum(bt, A, B, Bp, C, Cp, x, y) ==
                                          f2_def(A, B, Bp, C, Cp, x, y));
                                }
    }
}

TEST_CASE("F2 character sum agrees with the defining sum at q = 5 (slice)") {
    const FieldTable f = build_field_q(5);
    const BinomialTable bt(f);
    for (int a = 0; a < f.n; ++a)
        for (int b = 0; b < f.n; ++b)
            for (int cp = 0; cp < f.n; ++cp)
                for (Elem x = 1; x < f.q; ++x)
                    for (Elem y = 1; y < f.q; ++y) {
                        const Character A{&f, a}, B{&f, b}, Bp{&f, (a + cp) % f.n},
                            C{&f, (b + 1) % f.n}, Cp{&f, cp};
                        CHECK(f2_charsum(bt, A, B, Bp, C, Cp, x, y) ==
                              f2_def(A, B, Bp, C, Cp, x, y));
                    }
}

TEST_CASE("F2 at y = 1 reduces to a 3F2") {
    const FieldTable f = build_field_q(5);
    const BinomialTable bt(f);
    for (int a = 0; a < f.n; ++a)
        for (int b = 0; b < f.n; ++b)
            for (int bp = 0; bp < f.n; ++bp)
                for (int c = 0; c < f.n; ++c)
                    for (int cp = 0; cp < f.n; ++cp)
                        for (Elem x = 0; x < f.q; ++x) {
                            const Character A{&f, a}, B{&f, b}, Bp{&f, bp}, C{&f, c}, Cp{&f, cp};
                            const Character ACpInv{&f, (a - cp + f.n) % f.n};
                            const Character ABpCpInv{&f, (a + bp - cp + 2 * f.n) % f.n};
                            const CycNum rhs =
                                char_eval(char_product(Bp, Cp), f.neg(1)) *
                                fpq_charsum(bt, {A, B, ACpInv}, {C, ABpCpInv}, x);
                            CHECK(f2_def(A, B, Bp, C, Cp, x, 1) == rhs);
                        }
}
