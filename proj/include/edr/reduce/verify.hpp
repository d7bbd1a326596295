#pragma once

#include <string>

#include "edr/reduce/matrix.hpp"

namespace edr {

struct VerifyResult {
    bool ok = true;
    std::string failed_clause;  // "diagonal", "chain", "normalization", "product", "unit-determinant"
    std::string detail;
};

/// Checks a certificate for A from scratch: D diagonal, d_i | d_(i+1),
/// normalized entries (Z: >= 0, GF(p)[x]: monic or zero), P*A*Q = D, and
/// det P, det Q units. Clauses are tried in that order and the first
/// failure is reported. Works over any ring, zero divisors included.
/// Throws ShapeMismatch / RingMismatch on incompatible inputs.
VerifyResult verify_certificate(const Matrix& A, const ReductionCertificate& cert);

}  // namespace edr
