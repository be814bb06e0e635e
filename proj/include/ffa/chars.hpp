#pragma once

#include "ffa/cyclo.hpp"
#include "ffa/field.hpp"

namespace ffa {

// Multiplicative character chi_m of F*_q, lifted to F_q by chi(0) = 0.
// chi_m(g^j) = zeta_n^(m*j) for the canonical generator g, n = q - 1.
struct Character {
    const FieldTable* field = nullptr;
    int m = 0;  // exponent in [0, n)

    bool is_trivial() const { return m == 0; }
    int order() const;

    bool operator==(const Character& o) const {
        return field->same_field(*o.field) && m == o.m;
    }
};

inline Character trivial_char(const FieldTable& f) { return Character{&f, 0}; }

CycNum char_eval(const Character& c, Elem x);

Character char_inverse(const Character& c);
Character char_product(const Character& c, const Character& d);  // MixedFields checked

inline int delta_char(const Character& c) { return c.is_trivial() ? 1 : 0; }
inline int delta_elem(Elem x) { return x == 0 ? 1 : 0; }

}  // namespace ffa
