#include <gtest/gtest.h>

#include <random>

#include "edr/reduce/reduction.hpp"
#include "edr/reduce/verify.hpp"
#include "oracle.hpp"

using namespace edr;

namespace {

Element Z(long v) { return integers().from_int(v); }

Matrix ints(std::initializer_list<std::initializer_list<long>> rows) { return Matrix::from_ints(integers(), rows); }

Matrix diag(const Ring& R, std::initializer_list<Element> d, std::size_t rows, std::size_t cols) {
    Matrix m(R, rows, cols);
    std::size_t i = 0;
    for (const auto& x : d) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

void expect_full(const Matrix& A, const ReductionCertificate& c) {
    auto v = verify_certificate(A, c);
    EXPECT_TRUE(v.ok) << v.failed_clause << ": " << v.detail;
    EXPECT_EQ(oracle::diagonal_vs_minors(A, c.D), "") << format_matrix(A);
}

}  // namespace

TEST(Hermite, Examples) {
    auto h = hermite_reduce_1x2(Z(4), Z(6));
    EXPECT_EQ(h.Q, ints({{-1, -3}, {1, 2}}));
    EXPECT_EQ(h.g, Z(2));
    h = hermite_reduce_1x2(Z(0), Z(0));
    EXPECT_EQ(h.Q, Matrix::identity(integers(), 2));
    EXPECT_EQ(h.g, Z(0));

    Ring F = polynomials_over(5);
    Element a = F.parse_element("4,0,1"), b = F.parse_element("4,1");
    h = hermite_reduce_1x2(a, b);
    EXPECT_EQ(h.g, b);
    EXPECT_TRUE((a * h.Q(0, 1) + b * h.Q(1, 1)).is_zero());
    EXPECT_EQ(a * h.Q(0, 0) + b * h.Q(1, 0), h.g);

    auto c = hermite_reduce_2x1(Z(4), Z(6));
    Matrix col = ints({{4}, {6}});
    EXPECT_EQ(c.P * col, ints({{2}, {0}}));
    EXPECT_THROW(hermite_reduce_1x2(parse_ring("Z/12").one(), parse_ring("Z/12").one()), UnsupportedRing);
}

TEST(Hermite, DeterminantOne) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 300; ++i) {
        Element a = Z(d(rng)), b = Z(d(rng));
        auto h = hermite_reduce_1x2(a, b);
        EXPECT_EQ(oracle::det(h.Q), Z(1));
        EXPECT_TRUE((a * h.Q(0, 1) + b * h.Q(1, 1)).is_zero());
    }
}

TEST(DiademStep, Examples) {
    auto s = diadem_step(Z(6), Z(10), Z(15));
    EXPECT_EQ(s.x, Z(0));
    EXPECT_EQ(s.y, Z(0));
    EXPECT_EQ(s.w, Z(10));
    s = diadem_step(Z(0), Z(1), Z(0));
    EXPECT_EQ(s.w, Z(1));
    s = diadem_step(Z(2), Z(0), Z(3));
    EXPECT_EQ(s.w, Z(1));
    EXPECT_EQ(s.w, Z(0) + Z(2) * s.x + Z(3) * s.y);
    EXPECT_THROW(diadem_step(Z(2), Z(4), Z(6)), PreconditionError);
}

TEST(DiademStep, SoundOnRandomTriples) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 300; ++i) {
        auto t = oracle::random_comaximal_triple(rng, -60, 60);
        Element a = Z(t.a), b = Z(t.b), c = Z(t.c);
        auto s = diadem_step(a, b, c);
        EXPECT_EQ(s.w, b + a * s.x + c * s.y);
        ASSERT_FALSE(s.w.is_zero());
        // small enough to enumerate: the quotient must have stable range 1
        Ring q = quotient_ring(integers(), s.w);
        if (*q.cardinality() <= 400) {
            EXPECT_TRUE(check_stable_range_1(FiniteRing(q)).holds);
        }
    }
}

TEST(Completion, Comaximal) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        auto t = oracle::random_comaximal_triple(rng, -500, 500);
        if (t.a == 0) continue;  // Z does not have stable range 1
        Element alpha = Z(t.a), c = Z(t.b), d = Z(t.c);
        Element mu = comaximal_completion(alpha, c, d);
        EXPECT_EQ(oracle::gcd(alpha.integer(), (c + d * mu).integer()), 1);
    }
    // the scan cannot succeed within 64 candidates: alpha shares 2, 3, 5, 7
    // with every small c + d*mu
    Element mu = comaximal_completion(Z(210 * 11), Z(210), Z(1));
    EXPECT_EQ(oracle::gcd(Integer(2310), (Z(210) + mu).integer()), 1);
    // alpha = 0 needs 2 + 5*mu = +-1
    EXPECT_THROW(comaximal_completion(Z(0), Z(2), Z(5)), PreconditionError);
    EXPECT_EQ(comaximal_completion(Z(0), Z(4), Z(5)), Z(-1));
}

TEST(Reduce2x2, Examples) {
    Matrix A = ints({{6, 0}, {10, 15}});
    auto c = reduce_2x2_comaximal(A);
    EXPECT_EQ(c.D, ints({{1, 0}, {0, 90}}));
    EXPECT_EQ(c.P * A * c.Q, c.D);
    expect_full(A, c);

    Matrix I = Matrix::identity(integers(), 2);
    c = reduce_2x2_comaximal(I);
    EXPECT_EQ(c.D, I);
    EXPECT_EQ(c.P, I);
    EXPECT_EQ(c.Q, I);

    Ring F = polynomials_over(5);
    Matrix B(F, 2, 2);
    B(0, 0) = F.parse_element("0,1");
    B(1, 0) = F.one();
    B(1, 1) = F.parse_element("1,1");
    c = reduce_2x2_comaximal(B);
    EXPECT_EQ(c.D, diag(F, {F.one(), F.parse_element("0,1,1")}, 2, 2));
    expect_full(B, c);

    EXPECT_THROW(reduce_2x2_comaximal(ints({{2, 0}, {4, 6}})), PreconditionError);
    EXPECT_THROW(reduce_2x2_comaximal(ints({{2, 1}, {4, 6}})), PreconditionError);
}

TEST(Reduce2x2, RandomComaximal) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
        auto t = oracle::random_comaximal_triple(rng, -1000, 1000);
        Matrix A = ints({{t.a, 0}, {t.b, t.c}});
        auto c = reduce_2x2_comaximal(A);
        EXPECT_EQ(c.D(0, 0), Z(1));
        EXPECT_EQ(abs(c.D(1, 1).integer()), abs(Integer(t.a) * t.c));
        EXPECT_TRUE(verify_certificate(A, c).ok);
    }
}

TEST(Snf, Examples) {
    auto c = smith_normal_form(ints({{2, 0}, {0, 3}}));
    EXPECT_EQ(c.D, ints({{1, 0}, {0, 6}}));
    c = smith_normal_form(ints({{4, 6}, {6, 9}}));
    EXPECT_EQ(c.D, ints({{1, 0}, {0, 0}}));
    c = smith_normal_form(ints({{-7}}));
    EXPECT_EQ(c.D, ints({{7}}));
    expect_full(ints({{-7}}), c);
}

TEST(Snf, DegenerateShapes) {
    Matrix empty(integers(), 0, 0);
    auto c = smith_normal_form(empty);
    EXPECT_EQ(c.D.rows(), 0u);
    EXPECT_TRUE(verify_certificate(empty, c).ok);
    Matrix wide(integers(), 0, 3);
    c = smith_normal_form(wide);
    EXPECT_EQ(c.Q, Matrix::identity(integers(), 3));
    Matrix zeros(integers(), 3, 2);
    c = smith_normal_form(zeros);
    EXPECT_EQ(c.D, zeros);
    EXPECT_TRUE(verify_certificate(zeros, c).ok);
    // zero rows and columns end up last
    Matrix A = ints({{0, 0, 0}, {0, 0, 4}, {0, 6, 0}});
    c = smith_normal_form(A);
    EXPECT_EQ(c.D, ints({{2, 0, 0}, {0, 12, 0}, {0, 0, 0}}));
    expect_full(A, c);
    EXPECT_THROW(smith_normal_form(Matrix(parse_ring("Z/12"), 1, 1)), UnsupportedRing);
}

TEST(Snf, RandomIntegerAgainstMinors) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int i = 0; i < 200; ++i) {
        Matrix A = oracle::random_int_matrix(rng, dim(rng), dim(rng), -50, 50);
        expect_full(A, smith_normal_form(A));
    }
}

TEST(Snf, LowRankAndStructured) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 50; ++i) {
        // rank <= 2 product of thin factors
        Matrix L = oracle::random_int_matrix(rng, 4, 2, -9, 9), Rm = oracle::random_int_matrix(rng, 2, 5, -9, 9);
        Matrix A = L * Rm;
        expect_full(A, smith_normal_form(A));
        // common factor everywhere
        Matrix B = oracle::random_int_matrix(rng, 3, 3, -5, 5);
        Matrix K = Matrix::identity(integers(), 3);
        for (std::size_t j = 0; j < 3; ++j) K(j, j) = Z(12);
        expect_full(B * K, smith_normal_form(B * K));
    }
}

TEST(Snf, RandomPolynomialAgainstMinors) {
    std::mt19937_64 rng(23);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        Ring F = polynomials_over(p);
        for (int i = 0; i < 40; ++i) {
            Matrix A = oracle::random_poly_matrix(rng, F, 3, 3, 2);
            auto c = smith_normal_form(A);
            expect_full(A, c);
            for (std::size_t k = 0; k < 3; ++k)
                EXPECT_TRUE(c.D(k, k).is_zero() || c.D(k, k).poly().lead() == 1);
        }
    }
}

TEST(Snf, TransposeCoherence) {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 100; ++i) {
        Matrix A = oracle::random_int_matrix(rng, 3, 4, -30, 30);
        auto c = smith_normal_form(A), t = smith_normal_form(A.transpose());
        for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(c.D(k, k), t.D(k, k));
    }
}

TEST(Snf, InputUnchanged) {
    Matrix A = ints({{4, 6}, {6, 9}});
    Matrix copy = A;
    smith_normal_form(A);
    EXPECT_EQ(A, copy);
}

TEST(Determinant, AgreesWithExpansion) {
    std::mt19937_64 rng(30);
    for (std::size_t n = 0; n <= 5; ++n)
        for (int i = 0; i < 30; ++i) {
            Matrix A = oracle::random_int_matrix(rng, n, n, -20, 20);
            EXPECT_EQ(determinant(A), oracle::det(A));
        }
    Ring F = polynomials_over(3);
    for (int i = 0; i < 30; ++i) {
        Matrix A = oracle::random_poly_matrix(rng, F, 3, 3, 2);
        EXPECT_EQ(determinant(A), oracle::det(A));
    }
    EXPECT_EQ(determinant(ints({{0, 1}, {1, 0}})), Z(-1));
    EXPECT_THROW(determinant(ints({{1, 2}})), ShapeMismatch);
}

TEST(Unimodular, InverseOfCertificates) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        Matrix A = oracle::random_int_matrix(rng, 4, 4, -99, 99);
        auto c = smith_normal_form(A);
        for (const Matrix* M : {&c.P, &c.Q}) {
            Matrix inv = inverse_unimodular(*M);
            EXPECT_EQ(*M * inv, Matrix::identity(integers(), 4));
            EXPECT_EQ(determinant(*M) * determinant(inv), Z(1));
        }
    }
    EXPECT_THROW(inverse_unimodular(ints({{2, 0}, {0, 1}})), PreconditionError);
}

TEST(Verify, DetectsEachClause) {
    Matrix A = ints({{2, 0}, {0, 3}});
    auto good = smith_normal_form(A);
    EXPECT_TRUE(verify_certificate(A, good).ok);

    auto chain = good;
    chain.D = ints({{3, 0}, {0, 2}});
    auto v = verify_certificate(A, chain);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.failed_clause, "chain");

    auto tampered = good;
    tampered.P(0, 0) += Z(1);
    v = verify_certificate(A, tampered);
    EXPECT_EQ(v.failed_clause, "product");

    auto offdiag = good;
    offdiag.D(0, 1) = Z(1);
    EXPECT_EQ(verify_certificate(A, offdiag).failed_clause, "diagonal");

    auto negative = good;
    negative.D(1, 1) = Z(-6);
    EXPECT_EQ(verify_certificate(A, negative).failed_clause, "normalization");

    // P*A*Q = D but P is singular-ish: det 2
    Matrix B = ints({{1, 0}, {0, 0}});
    ReductionCertificate scaled{ints({{1, 0}, {0, 2}}), ints({{1, 0}, {0, 0}}), Matrix::identity(integers(), 2)};
    EXPECT_EQ(verify_certificate(B, scaled).failed_clause, "unit-determinant");

    auto shape = good;
    shape.Q = Matrix::identity(integers(), 3);
    EXPECT_THROW(verify_certificate(A, shape), ShapeMismatch);
}

TEST(Verify, ZeroDivisorRing) {
    // the verifier accepts any commutative ring; the producer does not
    Ring R = parse_ring("Z/12");
    Matrix A = Matrix::from_ints(R, {{4, 0}, {0, 6}});
    ReductionCertificate c{Matrix::identity(R, 2), A, Matrix::identity(R, 2)};
    auto v = verify_certificate(A, c);
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.failed_clause, "chain");  // 4 does not divide 6 in Z/12
    Matrix B = Matrix::from_ints(R, {{2, 0}, {0, 4}});
    ReductionCertificate d{Matrix::from_ints(R, {{5, 0}, {0, 7}}), Matrix::from_ints(R, {{10, 0}, {0, 4}}),
                           Matrix::identity(R, 2)};
    EXPECT_TRUE(verify_certificate(B, d).ok);
}

TEST(Formats, MatrixRoundTrip) {
    Matrix A = ints({{1, -2, 3}, {0, 40, -5}});
    EXPECT_EQ(format_matrix(A), "2 3\n1 -2 3\n0 40 -5\n");
    EXPECT_EQ(parse_matrix(integers(), format_matrix(A)), A);
    EXPECT_EQ(parse_matrix(integers(), "# comment\n1 1\n  7\n"), ints({{7}}));
    Ring F = polynomials_over(5);
    Matrix P = parse_matrix(F, "1 2\n1,2 0\n");
    EXPECT_EQ(P(0, 0).to_string(), "1,2");
    auto c = smith_normal_form(A);
    auto back = parse_certificate(integers(), format_certificate(c));
    EXPECT_EQ(back.P, c.P);
    EXPECT_EQ(back.D, c.D);
    EXPECT_EQ(back.Q, c.Q);
    for (const char* bad : {"", "2", "2 2\n1 2\n3", "1 1\nx", "1 1\n1 2", "-1 1\n1"})
        EXPECT_THROW(parse_matrix(integers(), bad), ParseError) << bad;
    EXPECT_THROW(parse_certificate(integers(), "P\n1 1\n1\n"), ParseError);
}

TEST(Witness, StableRange2Examples) {
    auto w = stable_range_2_witness(Z(6), Z(10), Z(15));
    EXPECT_EQ(oracle::gcd((Z(6) + Z(15) * w.p).integer(), (Z(10) + Z(15) * w.q).integer()), 1);
    w = stable_range_2_witness(Z(1), Z(0), Z(0));
    EXPECT_EQ(w.p, Z(0));
    EXPECT_EQ(w.q, Z(0));
    w = stable_range_2_witness(Z(2), Z(3), Z(0));
    EXPECT_EQ(w.p, Z(0));
    EXPECT_EQ(w.q, Z(0));
    EXPECT_THROW(stable_range_2_witness(Z(2), Z(4), Z(6)), PreconditionError);
}

TEST(Witness, StableRange2Random) {
    std::mt19937_64 rng(40);
    for (int i = 0; i < 300; ++i) {
        auto t = oracle::random_comaximal_triple(rng, -1000, 1000);
        auto w = stable_range_2_witness(Z(t.a), Z(t.b), Z(t.c));
        EXPECT_EQ(oracle::gcd(t.a + t.c * w.p.integer(), t.b + t.c * w.q.integer()), 1);
    }
    Ring F = polynomials_over(2);
    for (int i = 0; i < 100; ++i) {
        Element a = oracle::random_poly(rng, F, 3), b = oracle::random_poly(rng, F, 3), c = oracle::random_poly(rng, F, 3);
        if (!is_unit(oracle::gcd(oracle::gcd(a, b), c))) continue;
        auto w = stable_range_2_witness(a, b, c);
        EXPECT_TRUE(is_unit(oracle::gcd(a + c * w.p, b + c * w.q)));
    }
}

TEST(Witness, GelfandExamples) {
    auto g = gelfand_range_1_witness(3, 5);
    EXPECT_EQ(g.lambda, 0);
    EXPECT_EQ(g.modulus, 3);
    g = gelfand_range_1_witness(1, 0);
    EXPECT_EQ(g.lambda, 0);
    g = gelfand_range_1_witness(4, 9);
    EXPECT_EQ(g.lambda, 0);
    EXPECT_TRUE(g.exhaustive);
    g = gelfand_range_1_witness(0, 1);
    EXPECT_EQ(g.lambda, 1);  // lambda = 0 gives the zero modulus
    EXPECT_THROW(gelfand_range_1_witness(4, 6), PreconditionError);
}
