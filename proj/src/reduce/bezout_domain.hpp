#pragma once

#include "edr/reduce/matrix.hpp"

namespace edr {

/// Throws UnsupportedRing unless `ring` is Z or GF(p)[x].
void require_bezout_domain(const Ring& ring);

bool coprime(const Element& a, const Element& b);

inline Matrix mat2(const Element& a, const Element& b, const Element& c, const Element& d) {
    Matrix m(a.ring(), 2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

}  // namespace edr
