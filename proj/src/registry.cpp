#include "ffa/identities.hpp"

namespace ffa {

namespace {

using V = Assignment;

ParamSpec ch(const char* name) { return {name, ParamKind::Character}; }
ParamSpec el(const char* name) { return {name, ParamKind::Element}; }

bool total(const EvalContext&, const V&) { return true; }

std::vector<IdentitySpec> make_registry() {
    std::vector<IdentitySpec> r;

    // --- binomial coefficient symmetries -----------------------------------
    r.push_back({"binom-sym-1",
                 {ch("A"), ch("B")},
                 total,
                 [](EvalContext& c, const V& v) { return c.bn(v[0], v[1]); },
                 [](EvalContext& c, const V& v) { return c.bn(v[0], c.cmul(v[0], c.cinv(v[1]))); },
                 "binomial symmetry {A|B} = {A|A B^-1} (Greene (2.6))"});
    r.push_back({"binom-sym-2",
                 {ch("A"), ch("B")},
                 total,
                 [](EvalContext& c, const V& v) { return c.bn(v[0], v[1]); },
                 [](EvalContext& c, const V& v) {
                     return c.bn(c.cmul(v[1], c.cinv(v[0])), v[1]) * c.chi(v[1], c.neg1());
                 },
                 "binomial symmetry {A|B} = {B A^-1|B} B(-1) (Greene (2.7))"});
    r.push_back({"binom-sym-3",
                 {ch("A"), ch("B")},
                 total,
                 [](EvalContext& c, const V& v) { return c.bn(v[0], v[1]); },
                 [](EvalContext& c, const V& v) {
                     return c.bn(c.cinv(v[1]), c.cinv(v[0])) * c.chi(c.cmul(v[0], v[1]), c.neg1());
                 },
                 "binomial symmetry {A|B} = {B^-1|A^-1} AB(-1) (Greene (2.8))"});
    r.push_back({"binom-sym-4",
                 {ch("A")},
                 total,
                 [](EvalContext& c, const V& v) { return c.bn(v[0], 0); },
                 [](EvalContext& c, const V& v) { return c.ci(-1 + (c.q() - 1) * c.dchar(v[0])); },
                 "edge column {A|eps} = -1 + (q-1) delta(A) (Greene (2.12))"});

    // --- binomial and trinomial theorems -----------------------------------
    r.push_back({"binom-theorem",
                 {ch("A"), el("x")},
                 total,
                 [](EvalContext& c, const V& v) { return c.chi(v[0], c.eadd(1, v[1])); },
                 [](EvalContext& c, const V& v) {
                     return binomial_theorem_rhs(c.bintab(), c.chr(v[0]), v[1]);
                 },
                 "binomial theorem: A(1+x) as a character sum (Greene (2.5))"});
    r.push_back({"trinomial",
                 {ch("A"), el("x"), el("y")},
                 total,
                 [](EvalContext& c, const V& v) {
                     return c.chi(v[0], c.eadd(c.eadd(1, v[1]), v[2]));
                 },
                 [](EvalContext& c, const V& v) {
                     return trinomial_rhs(c.bintab(), c.chr(v[0]), v[1], v[2]);
                 },
                 "trinomial theorem: A(1+x+y) as a double character sum"});

    // --- 2F1 ----------------------------------------------------------------
    r.push_back({"f21-def-eq-charsum",
                 {ch("A"), ch("B"), ch("C"), el("x")},
                 total,
                 [](EvalContext& c, const V& v) { return c.F21(v[0], v[1], v[2], v[3]); },
                 [](EvalContext& c, const V& v) { return c.F21cs(v[0], v[1], v[2], v[3]); },
                 "2F1 defining sum equals its character-sum form (Greene Thm 3.6)"});
    r.push_back({"f21-at-1",
                 {ch("A"), ch("B"), ch("C")},
                 total,
                 [](EvalContext& c, const V& v) { return c.F21(v[0], v[1], v[2], 1); },
                 [](EvalContext& c, const V& v) {
                     return c.chi(v[0], c.neg1()) * c.bn(v[1], c.cmul(c.cinv(v[0]), v[2]));
                 },
                 "2F1 at x=1: A(-1) {B|A^-1 C} (Greene Thm 4.9)"});

    // --- Greene reductions ---------------------------------------------------
    r.push_back({"greene-2f1-eps",
                 {ch("A"), ch("C"), el("x")},
                 total,
                 [](EvalContext& c, const V& v) { return c.F21(v[0], 0, v[1], v[2]); },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], C = v[1];
                     const Elem x = v[2];
                     CycNum res = c.bn(C, A) * c.chi(A, c.neg1()) * c.chi(c.cinv(C), x) *
                                  c.chi(c.cmul(c.cinv(A), C), c.one_minus(x));
                     res = res - c.chi(C, c.neg1()) * c.eps(x);
                     const int d = delta_elem(c.one_minus(x)) * c.dchar(c.cmul(c.cinv(A), C));
                     if (d) res = res + (c.q() - 1) * c.chi(A, c.neg1());
                     return res;
                 },
                 "2F1(A,eps;C|x) closed form (Greene Cor 3.16)"});
    r.push_back({"greene-2f1-topbottom",
                 {ch("A"), ch("B"), el("x")},
                 total,
                 [](EvalContext& c, const V& v) { return c.F21(v[0], v[1], v[0], v[2]); },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1];
                     const Elem x = v[2];
                     CycNum res = c.bn(B, A) * c.eps(x) * c.chi(c.cinv(B), c.one_minus(x));
                     res = res - c.chi(c.cinv(A), c.eneg(x));
                     const int d = delta_elem(c.one_minus(x)) * c.dchar(B);
                     if (d) res = res + (c.q() - 1) * c.chi(A, c.neg1());
                     return res;
                 },
                 "2F1(A,B;A|x) closed form (Greene Cor 3.16)"});
    r.push_back({"greene-3f2-reduction",
                 {ch("A"), ch("B"), ch("C"), ch("D"), el("x")},
                 total,
                 [](EvalContext& c, const V& v) {
                     return c.F32(v[0], v[1], v[0], v[2], v[3], v[4]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], C = v[2], D = v[3];
                     const Elem x = v[4];
                     CycNum res = c.bn(B, A) * c.F21(B, C, D, x);
                     res = res - c.chi(c.cinv(A), c.eneg(x)) *
                                     c.bn(c.cmul(C, c.cinv(A)), c.cmul(D, c.cinv(A)));
                     if (c.dchar(B))
                         res = res + (c.q() - 1) * (c.chi(A, c.neg1()) * c.chi(c.cinv(D), x) *
                                                    c.chi(c.cmul(c.cinv(C), D), c.one_minus(x)));
                     return res;
                 },
                 "3F2(A,B,C;A,D|x) reduction to 2F1 (Greene Thm 3.15)"});
    r.push_back({"greene-211",
                 {ch("A"), ch("B"), el("x")},
                 total,
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1];
                     const Elem x = v[2];
                     CycNum acc = c.ci(0);
                     for (int m = 0; m < c.n(); ++m) {
                         const CycNum cx = c.chi(m, x);
                         if (cx.is_zero()) continue;
                         acc = acc + c.bn(A + m, B + m) * cx;
                     }
                     return acc;
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1];
                     const Elem x = v[2];
                     return (c.q() - 1) * (c.chi(c.cinv(B), x) *
                                           c.chi(c.cmul(c.cinv(A), B), c.one_minus(x)));
                 },
                 "sum_chi {A chi|B chi} chi(x) = (q-1) B^-1(x) (A^-1 B)(1-x) (Greene (2.11))"});

    // --- F2 core -------------------------------------------------------------
    r.push_back({"f2-def-eq-charsum",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y")},
                 total,
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
                 },
                 [](EvalContext& c, const V& v) {
                     return c.F2cs(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
                 },
                 "F2 double sum equals double character sum plus boundary term"});
    r.push_back({"f2-symmetry",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y")},
                 total,
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
                 },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[2], v[1], v[4], v[3], v[6], v[5]);
                 },
                 "F2(A;B,B';C,C';x,y) = F2(A;B',B;C',C;y,x)"});
    r.push_back({"f2-at-y1",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x")},
                 total,
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[4], v[5], 1);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5];
                     return c.chi(c.cmul(Bp, Cp), c.neg1()) *
                            c.F32(A, B, C, c.cmul(A, c.cinv(Cp)), c.cmul(c.cmul(A, Bp), c.cinv(Cp)),
                                  x);
                 },
                 "F2 at y=1 reduces to a 3F2"});
    r.push_back({"f2-at-x1",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("y")},
                 total,
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[4], 1, v[5]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem y = v[5];
                     return c.chi(c.cmul(B, C), c.neg1()) *
                            c.F32(A, Bp, Cp, c.cmul(A, c.cinv(C)), c.cmul(c.cmul(A, B), c.cinv(C)),
                                  y);
                 },
                 "F2 at x=1 reduces to a 3F2 (mirror of the y=1 case)"});

    // --- reduction formulas --------------------------------------------------
    r.push_back({"thm32-a",
                 {ch("A"), ch("B"), ch("C"), ch("Cp"), el("x"), el("y")},
                 [](const EvalContext&, const V& v) { return v[5] != 1; },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], 0, v[2], v[3], v[4], v[5]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], C = v[2], Cp = v[3];
                     const Elem x = v[4], y = v[5];
                     const int ACpb = c.cmul(A, c.cinv(Cp));
                     CycNum res = -(c.eps(y) * c.chi(Cp, c.neg1()) * c.F21(A, B, C, x));
                     res = res + c.chi(c.cinv(Cp), y) * c.chi(c.cmul(c.cinv(A), Cp), c.one_minus(y)) *
                                     c.bn(ACpb, A) * c.F21(ACpb, B, C, c.ediv(x, c.one_minus(y)));
                     if (c.dchar(ACpb)) {
                         res = res + (c.q() - 1) *
                                         (c.chi(A, c.neg1()) * c.chi(c.cinv(C), x) *
                                          c.chi(c.cinv(Cp), y) *
                                          c.chi(c.cmul(c.cinv(B), c.cmul(C, C)), c.one_minus(y)) *
                                          c.chi(c.cmul(B, c.cinv(C)), c.esub(c.one_minus(x), y)));
                     }
                     return res;
                 },
                 "F2 with B'=eps collapses to 2F1 terms (y != 1)",
                 true,
                 "right side taken verbatim; fails whenever delta(A C'^-1)=1 and x+y != 1. "
                 "Re-deriving the delta term from the 3F2 reduction gives "
                 "B(1-y) (B^-1 C)(1-x-y) in place of the printed "
                 "(B^-1 C^2)(1-y) (B C^-1)(1-x-y), and that variant verifies "
                 "(empirical finding; see unit tests)."});
    r.push_back({"thm32-b",
                 {ch("A"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y")},
                 [](const EvalContext&, const V& v) { return v[4] != 1; },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], 0, v[1], v[2], v[3], v[4], v[5]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], Bp = v[1], C = v[2], Cp = v[3];
                     const Elem x = v[4], y = v[5];
                     const int ACb = c.cmul(A, c.cinv(C));
                     CycNum res = -(c.eps(x) * c.chi(C, c.neg1()) * c.F21(A, Bp, Cp, y));
                     res = res + c.chi(c.cinv(C), x) * c.chi(c.cmul(c.cinv(A), C), c.one_minus(x)) *
                                     c.bn(ACb, A) * c.F21(ACb, Bp, Cp, c.ediv(y, c.one_minus(x)));
                     if (c.dchar(ACb)) {
                         res = res + (c.q() - 1) *
                                         (c.chi(A, c.neg1()) * c.chi(c.cinv(Cp), y) *
                                          c.chi(c.cinv(C), x) *
                                          c.chi(c.cmul(c.cinv(Bp), c.cmul(Cp, Cp)), c.one_minus(x)) *
                                          c.chi(c.cmul(Bp, c.cinv(Cp)), c.esub(c.one_minus(x), y)));
                     }
                     return res;
                 },
                 "F2 with B=eps collapses to 2F1 terms (x != 1)",
                 true,
                 "right side taken verbatim; mirrored form of the quarantined y-reduction "
                 "and fails on the same subdomain (delta(A C^-1)=1, x+y != 1). The "
                 "corrected variant swaps the roles of B' and C' in the delta term "
                 "(empirical finding; see unit tests)."});
    r.push_back({"thm33-bailey",
                 {ch("A"), ch("B"), ch("Bp"), ch("Cp"), el("x"), el("y")},
                 [](const EvalContext&, const V& v) { return v[4] != 1; },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[1], v[3], v[4], v[5]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], Cp = v[3];
                     const Elem x = v[4], y = v[5];
                     const int ABb = c.cmul(A, c.cinv(B));
                     CycNum res = -(c.eps(x) * c.chi(c.cinv(A), c.one_minus(x)) *
                                    c.F21(A, Bp, Cp, c.ediv(y, c.one_minus(x))));
                     res = res + c.chi(c.cinv(B), x) * c.bn(ABb, c.cinv(B)) * c.F21(ABb, Bp, Cp, y);
                     if (c.dchar(ABb))
                         res = res + (c.q() - 1) *
                                         (c.chi(c.cinv(A), c.eneg(x)) * c.chi(c.cinv(Cp), y) *
                                          c.chi(c.cmul(c.cinv(Bp), Cp), c.one_minus(y)));
                     return res;
                 },
                 "F2 reduction at C=B (Bailey's formula, x != 1)"});
    r.push_back({"thm34-bprime",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), el("x"), el("y")},
                 [](const EvalContext&, const V& v) { return v[5] != 1; },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[2], v[4], v[5]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3];
                     const Elem x = v[4], y = v[5];
                     const int ABpb = c.cmul(A, c.cinv(Bp));
                     const CycNum bare = c.chi(c.cinv(A), c.eneg(y)) * c.chi(c.cinv(C), x) *
                                         c.chi(c.cmul(c.cinv(B), C), c.one_minus(x));
                     CycNum res = -(c.eps(y) * c.chi(c.cinv(A), c.one_minus(y)) *
                                    c.F21(A, B, C, c.ediv(x, c.one_minus(y))));
                     res = res + bare;
                     res = res + bare * c.ci(-1 + (c.q() - 1) * c.dchar(ABpb));
                     res = res + c.chi(c.cinv(Bp), y) * c.bn(ABpb, c.cinv(Bp)) * c.F21(ABpb, B, C, x);
                     return res;
                 },
                 "F2 reduction at C'=B' (y != 1); right side taken verbatim"});

    // --- transformations -----------------------------------------------------
    r.push_back({"thm35-t1",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y")},
                 [](const EvalContext&, const V& v) { return v[5] != 1; },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6];
                     const Elem d = c.one_minus(x);
                     return c.chi(C, c.neg1()) * c.chi(c.cinv(A), d) *
                            c.F2(A, c.cmul(c.cinv(B), C), Bp, C, Cp, c.ediv(c.eneg(x), d),
                                 c.ediv(y, d));
                 },
                 "F2 transformation via u -> 1-u (x != 1)"});
    r.push_back({"thm35-t2",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y")},
                 [](const EvalContext&, const V& v) { return v[6] != 1; },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6];
                     const Elem d = c.one_minus(y);
                     return c.chi(Cp, c.neg1()) * c.chi(c.cinv(A), d) *
                            c.F2(A, B, c.cmul(c.cinv(Bp), Cp), C, Cp, c.ediv(x, d),
                                 c.ediv(c.eneg(y), d));
                 },
                 "F2 transformation via v -> 1-v (y != 1)"});
    r.push_back({"thm35-t3",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y")},
                 [](const EvalContext& c, const V& v) {
                     return c.field().add(v[5], v[6]) != 1;
                 },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6];
                     const Elem d = c.esub(c.one_minus(x), y);
                     return c.chi(c.cmul(C, Cp), c.neg1()) * c.chi(c.cinv(A), d) *
                            c.F2(A, c.cmul(c.cinv(B), C), c.cmul(c.cinv(Bp), Cp), C, Cp,
                                 c.ediv(c.eneg(x), d), c.ediv(c.eneg(y), d));
                 },
                 "F2 transformation via u -> 1-u, v -> 1-v (x+y != 1)"});
    r.push_back({"thm36-xy1",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x")},
                 [](const EvalContext&, const V& v) { return v[5] != 1; },
                 [](EvalContext& c, const V& v) {
                     return c.F2(v[0], v[1], v[2], v[3], v[4], v[5], c.one_minus(v[5]));
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5];
                     const Elem d = c.one_minus(x);
                     return c.chi(c.cmul(C, c.cmul(Bp, Cp)), c.neg1()) * c.chi(c.cinv(A), d) *
                            c.F32(A, c.cmul(c.cinv(B), C), C, c.cmul(A, c.cinv(Cp)),
                                  c.cmul(c.cmul(A, Bp), c.cinv(Cp)), c.ediv(c.eneg(x), d));
                 },
                 "F2 on the line x+y=1 reduces to a 3F2 (x != 1)"});

    // --- generating functions ------------------------------------------------
    r.push_back({"prop41-binom-product",
                 {ch("A"), ch("B"), ch("C")},
                 total,
                 [](EvalContext& c, const V& v) { return c.bn(v[0], v[1]) * c.bn(v[2], v[0]); },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], C = v[2];
                     CycNum res = c.bn(C, B) * c.bn(c.cmul(C, c.cinv(B)), c.cmul(A, c.cinv(B)));
                     if (c.dchar(A)) res = res - (c.q() - 1) * c.chi(B, c.neg1());
                     if (c.dchar(c.cmul(B, c.cinv(C))))
                         res = res + (c.q() - 1) * c.chi(c.cmul(A, B), c.neg1());
                     return res;
                 },
                 "product rule {A|B}{C|A} (Greene (2.15))"});
    r.push_back({"thm42-genfun",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y"), el("t")},
                 [](const EvalContext&, const V& v) { return v[5] != 0 && v[7] != 0 && v[7] != 1; },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6], t = v[7];
                     CycNum acc = c.ci(0);
                     for (int th = 0; th < c.n(); ++th) {
                         const CycNum ct = c.chi(th, t);
                         if (ct.is_zero()) continue;
                         acc = acc + c.bn(c.cmul(A, th), th) *
                                         c.F2(c.cmul(A, th), B, Bp, C, Cp, x, y) * ct;
                     }
                     return div_exact(acc, c.q() - 1);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6], t = v[7];
                     const Elem omt = c.one_minus(t);
                     const CycNum tail =
                         c.chi(c.cinv(Cp), y) * c.chi(c.cmul(c.cinv(Bp), Cp), c.one_minus(y));
                     CycNum res = c.chi(c.cinv(A), omt) *
                                  c.F2(A, B, Bp, C, Cp, c.ediv(x, omt), c.ediv(y, omt));
                     res = res - c.chi(c.cinv(A), c.eneg(t)) * tail *
                                     c.F21(A, B, C, c.ediv(c.eneg(x), t));
                     res = res - c.chi(c.cinv(A), c.eneg(t)) *
                                     (c.bn(B, C) * c.bn(Bp, Cp) * c.eps(y) -
                                      c.F2(0, B, Bp, C, Cp, x, y));
                     res = res + c.chi(c.cmul(B, C), c.neg1()) * c.chi(c.cinv(A), c.eneg(x)) * tail *
                                     c.F21(A, c.cmul(A, c.cinv(C)), c.cmul(A, c.cinv(B)),
                                           c.ediv(c.eneg(t), x));
                     return res;
                 },
                 "generating function over the first F2 parameter (x != 0, t not in {0,1})"});
    r.push_back({"thm43-a",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y"), el("t")},
                 [](const EvalContext&, const V& v) { return v[5] != 1 && v[7] != 1; },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6], t = v[7];
                     const int BCb = c.cmul(B, c.cinv(C));
                     CycNum acc = c.ci(0);
                     for (int th = 0; th < c.n(); ++th) {
                         const CycNum ct = c.chi(th, t);
                         if (ct.is_zero()) continue;
                         acc = acc + c.bn(c.cmul(BCb, th), th) *
                                         c.F2(A, c.cmul(B, th), Bp, C, Cp, x, y) * ct;
                     }
                     return div_exact(acc, c.q() - 1);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6], t = v[7];
                     const Elem omt = c.one_minus(t);
                     CycNum res = c.eps(t) * c.chi(c.cinv(B), omt) *
                                  c.F2(A, B, Bp, C, Cp, c.ediv(x, omt), y);
                     res = res - c.chi(c.cmul(c.cinv(B), C), c.eneg(t)) * c.eps(x) *
                                     c.chi(c.cinv(A), c.one_minus(x)) *
                                     c.F21(A, Bp, Cp, c.ediv(y, c.one_minus(x)));
                     return res;
                 },
                 "generating function over B (x != 1, t != 1)"});
    r.push_back({"thm43-b",
                 {ch("A"), ch("B"), ch("Bp"), ch("C"), ch("Cp"), el("x"), el("y"), el("t")},
                 [](const EvalContext&, const V& v) { return v[6] != 1 && v[7] != 1; },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6], t = v[7];
                     const int BpCpb = c.cmul(Bp, c.cinv(Cp));
                     CycNum acc = c.ci(0);
                     for (int th = 0; th < c.n(); ++th) {
                         const CycNum ct = c.chi(th, t);
                         if (ct.is_zero()) continue;
                         acc = acc + c.bn(c.cmul(BpCpb, th), th) *
                                         c.F2(A, B, c.cmul(Bp, th), C, Cp, x, y) * ct;
                     }
                     return div_exact(acc, c.q() - 1);
                 },
                 [](EvalContext& c, const V& v) {
                     const int A = v[0], B = v[1], Bp = v[2], C = v[3], Cp = v[4];
                     const Elem x = v[5], y = v[6], t = v[7];
                     const Elem omt = c.one_minus(t);
                     CycNum res = c.eps(t) * c.chi(c.cinv(Bp), omt) *
                                  c.F2(A, B, Bp, C, Cp, x, c.ediv(y, omt));
                     res = res - c.chi(c.cmul(c.cinv(Bp), Cp), c.eneg(t)) * c.eps(y) *
                                     c.chi(c.cinv(A), c.one_minus(y)) *
                                     c.F21(A, B, C, c.ediv(x, c.one_minus(y)));
                     return res;
                 },
                 "generating function over B' (y != 1, t != 1)"});

    return r;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
    static const std::vector<IdentitySpec> r = make_registry();
    return r;
}

const IdentitySpec& find_identity(const std::string& id) {
    for (const auto& spec : registry())
        if (spec.id == id) return spec;
    throw Error("UnknownIdentity", "no identity with id '" + id + "'");
}

}  // namespace ffa
