#include <gtest/gtest.h>

#include <random>

#include "edr/lab/diadem.hpp"
#include "oracle.hpp"

using namespace edr;

namespace {

using Index = FiniteRing::Index;

Element Z(long v) { return integers().from_int(v); }

std::vector<Element> residues(const Ring& R, std::initializer_list<long> v) {
    std::vector<Element> out;
    for (long x : v) out.push_back(R.from_int(x));
    return out;
}

// GF(2)[x,y]/(x,y)^2: a + b*x + c*y stored as a | b<<1 | c<<2. Local but
// (x, y) is not principal, so 1x2 rows need not reduce.
FiniteRing non_hermite_ring() {
    std::vector<std::vector<Index>> add(8, std::vector<Index>(8)), mul(8, std::vector<Index>(8));
    std::vector<std::string> labels;
    for (Index i = 0; i < 8; ++i) {
        std::string s;
        if (i & 1) s += "1";
        if (i & 2) s += s.empty() ? "x" : "+x";
        if (i & 4) s += s.empty() ? "y" : "+y";
        labels.push_back(s.empty() ? "0" : s);
        for (Index j = 0; j < 8; ++j) {
            add[i][j] = i ^ j;
            const Index a1 = i & 1, a2 = j & 1;
            const Index bx = ((a1 & (j >> 1)) ^ (a2 & (i >> 1))) & 1;
            const Index cy = ((a1 & (j >> 2)) ^ (a2 & (i >> 2))) & 1;
            mul[i][j] = (a1 & a2) | bx << 1 | cy << 2;
        }
    }
    return FiniteRing::from_tables("GF(2)[x,y]/(x,y)^2", add, mul, labels);
}

}  // namespace

TEST(Ideals, Examples) {
    Ring R = parse_ring("Z/12");
    const Element g1[] = {R.from_int(4), R.from_int(6)};
    EXPECT_EQ(ideal_generated(R, g1), residues(R, {0, 2, 4, 6, 8, 10}));
    const Element g2[] = {R.from_int(5)};
    EXPECT_EQ(ideal_generated(R, g2).size(), 12u);
    EXPECT_EQ(ideal_generated(R, std::span<const Element>{}), residues(R, {0}));
    EXPECT_FALSE(is_comaximal(R, g1));
    const Element t[] = {Z(6), Z(10), Z(15)}, p[] = {Z(4), Z(6)};
    EXPECT_TRUE(is_comaximal(integers(), t));
    EXPECT_FALSE(is_comaximal(integers(), p));
}

TEST(FiniteRingTables, IdealsClosed) {
    for (const auto& spec : oracle::suite_upto_16()) {
        FiniteRing R(parse_ring(spec));
        for (std::size_t id = 0; id < R.ideal_count(); ++id) {
            auto m = R.members(static_cast<FiniteRing::IdealId>(id));
            for (Index x : m) {
                for (Index y : m) EXPECT_TRUE(R.contains(static_cast<FiniteRing::IdealId>(id), R.add(x, y)));
                for (Index r = 0; r < R.size(); ++r)
                    EXPECT_TRUE(R.contains(static_cast<FiniteRing::IdealId>(id), R.mul(x, r)));
            }
        }
    }
}

TEST(FiniteRingTables, RejectsBadTables) {
    std::vector<std::vector<Index>> add{{0, 1}, {1, 0}}, mul{{0, 0}, {0, 0}};
    EXPECT_THROW(FiniteRing::from_tables("no-one", add, mul, {"0", "1"}), PreconditionError);
    EXPECT_THROW(FiniteRing{integers()}, InfiniteRing);
    EXPECT_THROW(FiniteRing(parse_ring("Z/100"), 50), PreconditionError);
}

TEST(Properties, SpecExamples) {
    struct Case {
        const char* ring;
        Property p;
    };
    const Case cases[] = {
        {"Z/6", Property::StableRange1},   {"Z/5", Property::StableRange1},
        {"Z/4 x Z/9", Property::StableRange1}, {"Z/12", Property::StableRange2},
        {"Z/2", Property::StableRange2},   {"Z/4 x Z/4", Property::StableRange2},
        {"Z/12", Property::IdempotentStableRange1}, {"Z/7", Property::IdempotentStableRange1},
        {"Z/4", Property::IdempotentStableRange1},  {"Z/12", Property::Clean},
        {"Z/2", Property::Clean},          {"Z/4 x Z/9", Property::Clean},
        {"Z/12", Property::Exchange},      {"Z/3", Property::Exchange},
        {"Z/8", Property::Exchange},       {"Z/12", Property::Gelfand},
        {"Z/5", Property::Gelfand},        {"Z/4 x Z/9", Property::Gelfand},
        {"Z/12", Property::Hermite},       {"Z/2", Property::Hermite},
        {"Z/12", Property::DyadicRange1},  {"Z/7", Property::DyadicRange1},
        {"Z/4 x Z/9", Property::DyadicRange1},
    };
    for (const auto& c : cases) {
        FiniteRing R(parse_ring(c.ring));
        auto rep = check_property(R, c.p);
        EXPECT_TRUE(rep.holds) << c.ring << " " << property_name(c.p);
        EXPECT_FALSE(rep.counterexample);
    }
    EXPECT_EQ(check_stable_range_1(FiniteRing(parse_ring("Z/6"))).checked, 36u);
}

TEST(Properties, ZeroRingVacuous) {
    Ring zero = quotient_ring(integers(), Z(1));
    FiniteRing R(zero);
    for (Property p : all_properties()) EXPECT_TRUE(check_property(R, p).holds) << property_name(p);
}

TEST(Properties, CheckedIsFullDomain) {
    FiniteRing R(parse_ring("Z/10"));
    EXPECT_EQ(check_stable_range_1(R).checked, 100u);
    EXPECT_EQ(check_stable_range_2(R).checked, 1000u);
    EXPECT_EQ(check_clean(R).checked, 10u);
    EXPECT_EQ(check_gelfand(R).checked, 10u);  // pairs with a + b = 1
}

TEST(Properties, SerializeLine) {
    auto rep = check_property(FiniteRing(parse_ring("Z/12")), Property::Gelfand);
    EXPECT_EQ(serialize(rep), "property=gelfand ring=Z/12 holds=true checked=12");
    for (Property p : all_properties()) EXPECT_EQ(parse_property(property_name(p)), p);
    EXPECT_FALSE(parse_property("nonsense"));
}

TEST(Properties, BoundsAndInfiniteRings) {
    EXPECT_THROW(check_property(integers(), Property::StableRange1), InfiniteRing);
    EXPECT_THROW(check_property(parse_ring("Z/20"), Property::StableRange2), PreconditionError);
    EXPECT_TRUE(check_property(parse_ring("Z/20"), Property::StableRange1).holds);
}

TEST(Properties, NonHermiteCounterexampleReplays) {
    FiniteRing R = non_hermite_ring();
    auto rep = check_hermite(R);
    ASSERT_FALSE(rep.holds);
    ASSERT_TRUE(rep.counterexample);
    EXPECT_TRUE(replay_counterexample(R, rep));
    // least failing pair in enumeration order is (x, y)
    EXPECT_EQ(rep.counterexample->at(0).text, "x");
    EXPECT_EQ(rep.counterexample->at(1).text, "y");
    EXPECT_NE(serialize(rep).find("holds=false counterexample=(a=x,b=y)"), std::string::npos);
    // local: everything else holds
    for (Property p : all_properties())
        if (p != Property::Hermite) {
            EXPECT_TRUE(check_property(R, p).holds) << property_name(p);
        }
}

TEST(Properties, ReplayRejectsBogusCounterexamples) {
    FiniteRing R(parse_ring("Z/6"));
    PropertyReport fake{Property::StableRange1, "Z/6", false, std::vector<LabeledElement>{{"a", 1, "1"}, {"b", 0, "0"}}, 0};
    EXPECT_FALSE(replay_counterexample(R, fake));
    fake.property = Property::Clean;
    EXPECT_FALSE(replay_counterexample(R, fake));
}

TEST(Properties, CleanMatchesIdempotentAndDyadicImpliesSR2) {
    std::vector<std::string> specs = oracle::product_quotient_suite();
    for (int n = 2; n <= 50; ++n) specs.push_back("Z/" + std::to_string(n));
    for (const auto& spec : specs) {
        FiniteRing R(parse_ring(spec));
        EXPECT_EQ(check_clean(R).holds, check_idempotent_stable_range_1(R).holds) << spec;
        if (check_dyadic_range_1(R).holds) {
            EXPECT_TRUE(check_stable_range_2(R).holds) << spec;
        }
    }
    FiniteRing bad = non_hermite_ring();
    EXPECT_EQ(check_clean(bad).holds, check_idempotent_stable_range_1(bad).holds);
}

TEST(Diadem, DirectExamples) {
    FiniteRing R(parse_ring("Z/12"));
    const Ring& Z12 = *R.ring();
    EXPECT_TRUE(is_diadem_direct(R, Z12.from_int(3), Z12.from_int(4), Z12.from_int(1)));
    EXPECT_TRUE(is_diadem_direct(R, Z12.from_int(3), Z12.from_int(4), Z12.from_int(0)));
    EXPECT_THROW(is_diadem_direct(R, Z12.from_int(4), Z12.from_int(6), Z12.from_int(0)), PreconditionError);
    FiniteRing F(parse_ring("Z/5"));
    for (Index a = 0; a < 5; ++a)
        for (Index b = 0; b < 5; ++b)
            for (Index l = 0; l < 5; ++l)
                if (F.comaximal(a, b) && F.add(a, F.mul(b, l)) != F.zero()) {
                    EXPECT_TRUE(is_diadem_direct(F, a, b, l));
                }
}

TEST(Diadem, QuotientExamples) {
    EXPECT_TRUE(is_diadem_via_quotient(Z(3), Z(5), Z(0)));
    EXPECT_TRUE(is_diadem_via_quotient(Z(4), Z(1), Z(-3)));
    EXPECT_THROW(is_diadem_via_quotient(Z(10), Z(5), Z(-2)), PreconditionError);  // gcd 5
    EXPECT_THROW(is_diadem_via_quotient(Z(5), Z(1), Z(-5)), InfiniteRing);
    // (a+u) + a*(-1) = u
    EXPECT_TRUE(is_diadem_via_quotient(Z(7) + Z(-1), Z(7), Z(-1)));
}

TEST(Diadem, FindExamples) {
    auto w = find_diadem(Z(3), Z(5));
    EXPECT_EQ(w.lambda, Z(0));
    EXPECT_EQ(w.diadem, Z(3));
    EXPECT_EQ(w.evidence, DiademEvidence::QuotientStableRange1);
    w = find_diadem(Z(4), Z(5));
    EXPECT_EQ(w.lambda, Z(0));
    EXPECT_EQ(w.diadem, Z(4));
    w = find_diadem(Z(8), Z(-1));
    EXPECT_EQ(w.evidence, DiademEvidence::TrivialUnit);
    EXPECT_TRUE(is_unit(w.diadem));
    EXPECT_EQ(w.diadem, Z(8) + Z(-1) * w.lambda);
    EXPECT_THROW(find_diadem(Z(4), Z(6)), PreconditionError);

    Ring R = parse_ring("Z/12");
    w = find_diadem(R.from_int(3), R.from_int(4));
    EXPECT_TRUE(w.exhaustive);
    EXPECT_EQ(w.diadem, R.from_int(3) + R.from_int(4) * w.lambda);
    EXPECT_TRUE(is_diadem_direct(FiniteRing(R), R.from_int(3), R.from_int(4), w.lambda));

    Ring F = polynomials_over(3);
    w = find_diadem(F.parse_element("0,1"), F.parse_element("1,1"));
    EXPECT_EQ(w.diadem, F.parse_element("0,1"));
}

TEST(Diadem, SearchOrder) {
    std::vector<long> want{0, 1, -1, 2, -2, 3};
    for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(search_candidate(integers(), k), Z(want[k]));
    Ring F = polynomials_over(3);
    EXPECT_EQ(search_candidate(F, 4).to_string(), "1,1");
}

TEST(Diadem, WitnessesAreSound) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-200, 200);
    for (int i = 0; i < 200; ++i) {
        long a = d(rng), b = d(rng);
        if (oracle::gcd(Integer(a), Integer(b)) != 1) continue;
        auto w = find_diadem(Z(a), Z(b));
        EXPECT_EQ(w.diadem, Z(a) + Z(b) * w.lambda);
        EXPECT_FALSE(w.diadem.is_zero());
        if (w.evidence == DiademEvidence::TrivialUnit) {
            EXPECT_TRUE(is_unit(w.diadem));
        }
        if (w.exhaustive) {
            EXPECT_TRUE(is_diadem_via_quotient(Z(a), Z(b), w.lambda));
        }
    }
}

TEST(Diadem, DirectMatchesQuotientOnSmallRings) {
    // full sweep lives in the acceptance suite; here a handful of rings
    for (const char* spec : {"Z/8", "Z/12", "Z/2 x Z/3", "GF(2)[x]/(0,0,1)"}) {
        FiniteRing R(parse_ring(spec));
        const Ring& ring = *R.ring();
        const Index n = static_cast<Index>(R.size());
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) {
                if (!R.comaximal(a, b)) continue;
                for (Index l = 0; l < n; ++l) {
                    Element w = R.element(R.add(a, R.mul(b, l)));
                    bool quotient = check_stable_range_1(FiniteRing(quotient_ring(ring, w))).holds;
                    EXPECT_EQ(is_diadem_direct(R, a, b, l), quotient) << spec;
                }
            }
    }
}

TEST(DyadicRange, SurvivesRadicalAndPrincipalQuotients) {
    for (const auto& spec : oracle::suite_upto_16()) {
        Ring ring = parse_ring(spec);
        FiniteRing R(ring);
        const bool dr1 = check_dyadic_range_1(R).holds;
        auto J = jacobson_radical(ring);
        Ring top = quotient_by_ideal(ring, J.members);
        EXPECT_EQ(dr1, check_dyadic_range_1(FiniteRing(top)).holds) << spec;
        if (!dr1) continue;
        for (const auto& c : ring.elements())
            EXPECT_TRUE(check_dyadic_range_1(FiniteRing(quotient_ring(ring, c))).holds) << spec << " / " << c;
    }
}

TEST(AssociateDiadems, Examples) {
    for (const char* spec : {"Z/12", "Z/5", "Z/4 x Z/3", "GF(2)[x]/(0,0,1)"})
        EXPECT_TRUE(verify_associate_diadems(FiniteRing(parse_ring(spec))).holds) << spec;
    // 4*d1 = 8 in Z/12 with d1 a diadem
    FiniteRing R(parse_ring("Z/12"));
    auto table = direct_diadem_table(R);
    EXPECT_TRUE(table[2]);
    EXPECT_EQ(R.mul(4, 2), 8u);
    // GF(5): 2*4 = 3, 4 a unit
    FiniteRing F(parse_ring("Z/5"));
    EXPECT_TRUE(direct_diadem_table(F)[4]);
}

TEST(Splitting, Examples) {
    auto s = find_coprime_splitting(12, 2, 3);
    EXPECT_EQ(s.r, 3);
    EXPECT_EQ(s.s, 4);
    s = find_coprime_splitting(1, 5, 7);
    EXPECT_EQ(s.r, 1);
    EXPECT_EQ(s.s, 1);
    s = find_coprime_splitting(30, 6, 35);
    EXPECT_EQ(s.r * s.s, 30);
    EXPECT_EQ(oracle::gcd(s.r, s.s), 1);
    EXPECT_EQ(oracle::gcd(s.r, Integer(6)), 1);
    EXPECT_EQ(oracle::gcd(s.s, Integer(35)), 1);
    EXPECT_EQ(s.r, 5);
    EXPECT_THROW(find_coprime_splitting(0, 1, 1), PreconditionError);
    EXPECT_THROW(find_coprime_splitting(12, 2, 4), PreconditionError);
}
