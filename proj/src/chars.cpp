#include "ffa/chars.hpp"

#include <numeric>

namespace ffa {

int Character::order() const {
    const int n = field->n;
    return n / std::gcd(n, m);
}

CycNum char_eval(const Character& c, Elem x) {
    const FieldTable& f = *c.field;
    if (x == 0) return cyc_zero(f.n);
    return zeta_pow(f.n, static_cast<long long>(c.m) * f.dlog(x));
}

Character char_inverse(const Character& c) {
    return Character{c.field, (c.field->n - c.m) % c.field->n};
}

Character char_product(const Character& c, const Character& d) {
    if (!c.field->same_field(*d.field)) throw MixedFieldsError();
    return Character{c.field, (c.m + d.m) % c.field->n};
}

}  // namespace ffa
