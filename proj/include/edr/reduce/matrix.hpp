#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "edr/core/ring.hpp"

namespace edr {

/// Dense row-major matrix over a ring. Shapes with zero rows or columns are
/// allowed.
class Matrix {
public:
    Matrix(Ring ring, std::size_t rows, std::size_t cols);

    static Matrix identity(const Ring& ring, std::size_t n);
    static Matrix from_ints(const Ring& ring, std::initializer_list<std::initializer_list<long>> rows);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Element> data_;
};

/// `<rows> <cols>` then one line per row of whitespace-separated literals.
std::string format_matrix(const Matrix& m);

/// Reads the matrix format; lines starting with '#' are ignored. Throws
/// ParseError.
Matrix parse_matrix(const Ring& ring, std::string_view text);

/// P*A*Q = D.
struct ReductionCertificate {
    Matrix P, D, Q;
};

/// Three blocks headed by lines `P`, `D`, `Q`.
std::string format_certificate(const ReductionCertificate& cert);
ReductionCertificate parse_certificate(const Ring& ring, std::string_view text);

}  // namespace edr
