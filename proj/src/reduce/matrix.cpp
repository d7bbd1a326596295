#include "edr/reduce/matrix.hpp"

#include <cctype>

namespace edr {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

Matrix Matrix::from_ints(const Ring& ring, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(ring, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw ShapeMismatch("ragged matrix literal");
        std::size_t j = 0;
        for (long v : row) m(i, j++) = ring.from_int(v);
        ++i;
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.ring_ == b.ring_)) throw RingMismatch();
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape mismatch");
    Matrix out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Element& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string format_matrix(const Matrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

namespace {

struct Token {
    std::string_view text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    bool line_start = true;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            line_start = true;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#' && line_start) {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        line_start = false;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        out.push_back({text.substr(start, i - start), start});
    }
    return out;
}

class TokenReader {
public:
    TokenReader(std::vector<Token> tokens, std::size_t end) : tokens_(std::move(tokens)), end_(end) {}

    bool done() const { return next_ == tokens_.size(); }

    const Token& take(const char* what) {
        if (done()) throw ParseError(std::string("unexpected end of input, expected ") + what, end_);
        return tokens_[next_++];
    }

    std::size_t dimension() {
        const Token& t = take("a dimension");
        std::size_t v = 0;
        if (t.text.empty() || t.text.size() > 9) throw ParseError("bad matrix dimension", t.pos);
        for (char c : t.text) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad matrix dimension", t.pos);
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        return v;
    }

    Matrix matrix(const Ring& ring) {
        const std::size_t r = dimension();
        const std::size_t c = dimension();
        Matrix m(ring, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                const Token& t = take("a matrix entry");
                try {
                    m(i, j) = ring.parse_element(t.text);
                } catch (const ParseError& e) {
                    throw ParseError(std::string("bad matrix entry '") + std::string(t.text) + "'",
                                     t.pos + e.position());
                }
            }
        return m;
    }

    void keyword(std::string_view word) {
        const Token& t = take("a block header");
        if (t.text != word) throw ParseError("expected block header '" + std::string(word) + "'", t.pos);
    }

    void expect_end() const {
        if (!done()) throw ParseError("unexpected trailing input", tokens_[next_].pos);
    }

private:
    std::vector<Token> tokens_;
    std::size_t next_ = 0;
    std::size_t end_;
};

}  // namespace

Matrix parse_matrix(const Ring& ring, std::string_view text) {
    TokenReader in(tokenize(text), text.size());
    Matrix m = in.matrix(ring);
    in.expect_end();
    return m;
}

std::string format_certificate(const ReductionCertificate& cert) {
    return "P\n" + format_matrix(cert.P) + "D\n" + format_matrix(cert.D) + "Q\n" + format_matrix(cert.Q);
}

ReductionCertificate parse_certificate(const Ring& ring, std::string_view text) {
    TokenReader in(tokenize(text), text.size());
    in.keyword("P");
    Matrix P = in.matrix(ring);
    in.keyword("D");
    Matrix D = in.matrix(ring);
    in.keyword("Q");
    Matrix Q = in.matrix(ring);
    in.expect_end();
    return {std::move(P), std::move(D), std::move(Q)};
}

}  // namespace edr
