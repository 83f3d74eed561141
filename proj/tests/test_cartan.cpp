#include <gtest/gtest.h>

#include <set>

#include "qbruhat/cartan.hpp"
#include "qbruhat/rational.hpp"

using namespace qbruhat;

namespace {

// Orbit of the simple roots under the simple reflections, computed only from
// the Cartan matrix; kept separate from the root-string construction.
std::set<IntVec> reflection_closure(const RootSystem& rs) {
    const int n = rs.rank();
    std::set<IntVec> seen;
    std::vector<IntVec> todo;
    for (int i = 0; i < n; ++i) {
        IntVec a(n, 0);
        a[i] = 1;
        seen.insert(a);
        todo.push_back(a);
    }
    while (!todo.empty()) {
        IntVec b = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
            Int p = 0;  // <b, alpha_i^v> = sum_j b_j <alpha_j, alpha_i^v>
            for (int j = 0; j < n; ++j) p += b[j] * rs.cartan(j, i);
            IntVec c = b;
            c[i] -= p;
            if (seen.insert(c).second) todo.push_back(c);
        }
    }
    std::set<IntVec> positive;
    for (const auto& r : seen)
        if (std::all_of(r.begin(), r.end(), [](Int v) { return v >= 0; })) positive.insert(r);
    return positive;
}

const std::vector<std::string> kTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                                         "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

const std::map<std::string, std::size_t> kPositiveCounts = {
    {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},  {"B3", 9},  {"B4", 16}, {"C2", 4},  {"C3", 9},
    {"C4", 16}, {"D4", 12}, {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};

}  // namespace

TEST(Rational, LowestTermsAndSign) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-2/6"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("5"), Rational(5));
    EXPECT_EQ(Rational(7, 3).str(), "7/3");
    EXPECT_THROW(Rational(1, 0), InvalidInput);
    EXPECT_THROW(Rational::parse("1/x"), InvalidInput);
    EXPECT_THROW(Rational::parse(""), InvalidInput);
}

TEST(Rational, OverflowIsAnError) {
    Rational big(INT64_MAX / 2 + 1);
    EXPECT_THROW(big + big, OverflowError);
    EXPECT_THROW(Rational(INT64_MAX) * Rational(2), OverflowError);
    EXPECT_THROW(Rational(1, INT64_MAX) + Rational(1, INT64_MAX - 1), OverflowError);
}

TEST(FiniteType, ParseAndValidate) {
    EXPECT_EQ(FiniteType::parse("A2").name(), "A2");
    EXPECT_EQ(FiniteType::parse("c3").family, Family::C);
    EXPECT_THROW(FiniteType::parse("B1"), InvalidInput);
    EXPECT_THROW(FiniteType::parse("D3"), InvalidInput);
    EXPECT_THROW(FiniteType::parse("E9"), InvalidInput);
    EXPECT_THROW(FiniteType::parse("F5"), InvalidInput);
    EXPECT_THROW(FiniteType::parse("H3"), InvalidInput);
    EXPECT_THROW(FiniteType::parse("A"), InvalidInput);
    EXPECT_THROW(RootSystem(FiniteType{Family::G, 3}), InvalidInput);
}

TEST(RootSystem, A2RootsAndTheta) {
    RootSystem rs(FiniteType::parse("A2"));
    ASSERT_EQ(rs.num_positive_roots(), 3u);
    EXPECT_EQ(rs.root(0), Root({1, 0}));
    EXPECT_EQ(rs.root(1), Root({0, 1}));
    EXPECT_EQ(rs.root(2), Root({1, 1}));
    EXPECT_EQ(rs.root(rs.highest_root()), Root({1, 1}));
}

TEST(RootSystem, A1) {
    RootSystem rs(FiniteType::parse("A1"));
    ASSERT_EQ(rs.num_positive_roots(), 1u);
    EXPECT_EQ(rs.highest_root(), 0u);
    EXPECT_EQ(rs.coroot(0), Coroot({1}));
}

TEST(RootSystem, C2ThetaIsLong) {
    RootSystem rs(FiniteType::parse("C2"));
    ASSERT_EQ(rs.num_positive_roots(), 4u);
    EXPECT_EQ(rs.root(rs.highest_root()), Root({2, 1}));
    // theta^v = alpha_1^v + alpha_2^v for C2 (theta long)
    EXPECT_EQ(rs.coroot(rs.highest_root()), Coroot({1, 1}));
    EXPECT_EQ(reflection_closure(rs).size(), 4u);
}

TEST(RootSystem, CountsMatchReflectionClosure) {
    for (const auto& name : kTypes) {
        RootSystem rs(FiniteType::parse(name));
        auto closure = reflection_closure(rs);
        std::set<IntVec> built;
        for (const auto& r : rs.positive_roots()) built.insert(r.coords);
        EXPECT_EQ(built, closure) << name;
        EXPECT_EQ(rs.num_positive_roots(), kPositiveCounts.at(name)) << name;
    }
}

TEST(RootSystem, CartanMatrixIsSimplePairing) {
    for (const auto& name : kTypes) {
        RootSystem rs(FiniteType::parse(name));
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                Root a = Root::zero(rs.rank());
                a[i] = 1;
                EXPECT_EQ(rs.pair(a, rs.coroot(rs.simple_root_index(j))), rs.cartan(i, j)) << name;
            }
    }
}

TEST(RootSystem, RhoPairings) {
    for (const auto& name : kTypes) {
        RootSystem rs(FiniteType::parse(name));
        // rho as half the sum of positive roots, computed in root coordinates
        IntVec twice_rho(rs.rank(), 0);
        for (const auto& r : rs.positive_roots())
            for (int i = 0; i < rs.rank(); ++i) twice_rho[i] += r[i];
        Weight two_rho = rs.to_weight(Root(twice_rho));
        EXPECT_EQ(two_rho, Int{2} * rs.rho()) << name;
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            Int p = pair(rs.rho(), rs.coroot(k));
            bool simple = rs.height(k) == 1;
            if (simple) {
                EXPECT_EQ(p, 1) << name;
            } else {
                EXPECT_GT(p, 1) << name;
            }
        }
        // theta is the unique root of maximal height
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            if (k != rs.highest_root()) {
                EXPECT_LT(rs.height(k), rs.height(rs.highest_root())) << name;
            }
        }
    }
}

TEST(Pairing, ExampleLabels) {
    RootSystem rs(FiniteType::parse("A2"));
    Weight lambda({2, 1});
    EXPECT_EQ(pair(lambda, rs.coroot(rs.highest_root())), 3);
    EXPECT_EQ(pair(lambda, rs.coroot(0)), 2);
    EXPECT_EQ(pair(lambda, Coroot::zero(2)), 0);
}

TEST(ReflectWeight, A2Examples) {
    RootSystem rs(FiniteType::parse("A2"));
    Weight lambda({2, 1});
    Weight once = reflect_weight(rs, lambda, 0);
    EXPECT_EQ(once, Weight({-2, 3}));
    EXPECT_EQ(reflect_weight(rs, once, 0), lambda);
    EXPECT_EQ(reflect_weight(rs, Weight::zero(2), 2), Weight::zero(2));
}

TEST(ReflectWeight, InvolutionOnGeneratedWeights) {
    for (const auto& name : kTypes) {
        RootSystem rs(FiniteType::parse(name));
        const int n = rs.rank();
        for (int seed = 0; seed < 8; ++seed) {
            Weight w = Weight::zero(n);
            for (int i = 0; i < n; ++i) w[i] = ((seed + 3) * (i + 1) * 7) % 9 - 4;
            for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
                Weight r = rs.reflect(w, k);
                EXPECT_EQ(rs.reflect(r, k), w);
                EXPECT_EQ(pair(r, rs.coroot(k)), -pair(w, rs.coroot(k)));
            }
        }
    }
}

TEST(WeightToRootCoords, RoundTrip) {
    RootSystem rs(FiniteType::parse("B3"));
    for (const auto& r : rs.positive_roots()) {
        auto coords = rs.weight_to_root_coords(rs.to_weight(r));
        for (int i = 0; i < rs.rank(); ++i) EXPECT_EQ(coords[i], Rational(r[i]));
    }
    RootSystem a2(FiniteType::parse("A2"));
    auto w1 = a2.weight_to_root_coords(Weight({1, 0}));  // omega_1 = (2 alpha_1 + alpha_2)/3
    EXPECT_EQ(w1[0], Rational(2, 3));
    EXPECT_EQ(w1[1], Rational(1, 3));
}

TEST(Shape, ParabolicFromLambda) {
    RootSystem a2(FiniteType::parse("A2"));
    IntVec m21{2, 1}, m10{1, 0};
    auto s = compute_shape(a2, m21);
    EXPECT_EQ(s.classical, Weight({2, 1}));
    EXPECT_EQ(s.parabolic, 0u);
    EXPECT_EQ(compute_shape(a2, m10).parabolic, NodeMask{0b10});

    RootSystem a3(FiniteType::parse("A3"));
    IntVec m010{0, 1, 0};
    auto s3 = compute_shape(a3, m010);
    EXPECT_EQ(s3.parabolic, NodeMask{0b101});
    EXPECT_EQ(format_nodes(s3.parabolic, 3), "{1,3}");
    for (int j = 0; j < 3; ++j) EXPECT_EQ(pair(s3.classical, a3.coroot(a3.simple_root_index(j))), m010[j]);
}

TEST(Shape, Rejections) {
    RootSystem a2(FiniteType::parse("A2"));
    IntVec zero{0, 0}, neg{1, -1}, short_{1};
    EXPECT_THROW(compute_shape(a2, zero), InvalidInput);
    EXPECT_THROW(compute_shape(a2, neg), InvalidInput);
    EXPECT_THROW(compute_shape(a2, short_), InvalidInput);
    IntVec m{2, 4};
    EXPECT_EQ(compute_shape(a2, m).delta_lattice(), 2);
}
