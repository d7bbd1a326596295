#pragma once

#include "edr/lab/diadem.hpp"
#include "edr/reduce/matrix.hpp"

namespace edr {

// Producers in this header accept Z and GF(p)[x] only and throw
// UnsupportedRing("producer requires a Bezout domain") elsewhere.

struct HermiteRow {
    Matrix Q;   // (a b) * Q = (g 0)
    Element g;
};

struct HermiteColumn {
    Matrix P;   // P * (a b)^T = (g 0)^T
    Element g;
};

/// Q = [[u, -b1], [v, a1]] from the Bezout certificate of (a, b); the
/// identity when a = b = 0. det Q = 1.
HermiteRow hermite_reduce_1x2(const Element& a, const Element& b);
HermiteColumn hermite_reduce_2x1(const Element& a, const Element& b);

struct DiademStep {
    Element x, y;
    Element w;  // b + a*x + c*y, a diadem
    DiademWitness witness;
};

/// For comaximal (a, b, c): w = b + g*lambda with g = gcd(a, c) and lambda
/// the diadem search result for the pair (b, g); (x, y) are lambda times
/// the cofactors of g.
DiademStep diadem_step(const Element& a, const Element& b, const Element& c);

/// mu with alpha*R + (c + d*mu)*R = R, given alpha*R + c*R + d*R = R.
/// Divides out k = gcd(c, d) first; scans the search order, then falls back
/// to stripping from alpha every factor it shares with c/k.
Element comaximal_completion(const Element& alpha, const Element& c, const Element& d);

/// Diagonal reduction of [[a, 0], [b, c]] with aR + bR + cR = R by the
/// diadem route: shear b into a diadem w, Hermite-reduce (w, c), complete
/// the top row against the divisor alpha of w, Hermite-reduce the first
/// column to a unit corner, then clear. D = diag(1, e) with e ~ a*c.
ReductionCertificate reduce_2x2_comaximal(const Matrix& A);

/// Full canonical diagonal form: d1 | d2 | ..., zeros last, entries
/// normalized (nonnegative over Z, monic over GF(p)[x]).
ReductionCertificate smith_normal_form(const Matrix& A);

/// Fraction-free (Bareiss) determinant of a square matrix over Z or GF(p)[x].
Element determinant(const Matrix& M);

/// Inverse of a matrix with unit determinant, by Hermite row elimination.
/// Throws PreconditionError when the determinant is not a unit.
Matrix inverse_unimodular(const Matrix& M);

struct SR2Witness {
    Element a, b, c, p, q;  // (a + c*p)R + (b + c*q)R = R
};

/// Constructive stable range 2 for comaximal (a, b, c): d = gcd(b, c), nu a
/// diadem of (a, d), mu with nu*R + (b + c*mu)R = R, s*nu + t*(b + c*mu) = 1,
/// then (p, q) solve p*s + q*(x*s + t) = y*s + mu*t.
SR2Witness stable_range_2_witness(const Element& a, const Element& b, const Element& c);

struct GelfandWitness {
    Integer lambda;
    Integer modulus;  // a + b*lambda
    bool exhaustive;
};

/// First lambda (search order 0, 1, -1, ...) with a + b*lambda != 0 and
/// Z/(a + b*lambda) Gelfand. Requires gcd(a, b) = 1.
GelfandWitness gelfand_range_1_witness(const Integer& a, const Integer& b, const DiademOptions& options = {});

}  // namespace edr
