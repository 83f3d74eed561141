#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qbruhat/qls.hpp"

using namespace qbruhat;

namespace {

struct Shape : fixtures::Shape {
    using fixtures::Shape::Shape;

    std::set<oracle::BrutePath> brute(oracle::Condition cond) const {
        std::vector<oracle::PairedEdge> edges;
        for (const auto& e : g.edges()) edges.push_back({e.source, e.target, pair(shape.classical, rs.coroot(e.label))});
        return oracle::brute_qls(g.num_vertices(), edges, shape.max_pairing(rs), cond);
    }
};

std::set<oracle::BrutePath> as_brute(const std::vector<QLSPath>& paths) {
    std::set<oracle::BrutePath> out;
    for (const auto& p : paths) out.insert({std::vector<std::size_t>(p.dirs.begin(), p.dirs.end()), p.times});
    return out;
}

using fixtures::ShapeCase;

const std::vector<ShapeCase> kShapes = {{"A2", {2, 1}}, {"A2", {1, 1}}, {"A2", {1, 0}}, {"A2", {3, 0}},
                                        {"C2", {1, 1}}, {"B2", {1, 1}}, {"A3", {0, 1, 0}}, {"A3", {1, 0, 1}},
                                        {"G2", {1, 0}}, {"G2", {0, 1}}, {"A1", {2}},       {"B3", {0, 0, 1}}};

}  // namespace

TEST(SigmaCandidates, Examples) {
    Shape a("A2", {2, 1});
    EXPECT_EQ(sigma_candidates(a.shape, a.g), (std::vector<Rational>{Rational(1, 3), Rational(1, 2), Rational(2, 3)}));
    Shape b("A2", {1, 0});
    EXPECT_TRUE(sigma_candidates(b.shape, b.g).empty());
    Shape c("A2", {3, 0});
    EXPECT_EQ(sigma_candidates(c.shape, c.g), (std::vector<Rational>{Rational(1, 3), Rational(2, 3)}));
}

TEST(EnumerateHat, ContainsGoldenPaths) {
    Shape s("A2", {2, 1});
    auto hat = enumerate_hat(s.shape, s.g);
    std::set<QLSPath> set(hat.begin(), hat.end());
    const Rational h(1, 2), t(1, 3), tt(2, 3);
    EXPECT_TRUE(set.count(s.path({"s2", "s2 s1", "s1"}, {0, h, tt, 1})));
    EXPECT_TRUE(set.count(s.path({"s1", "e", "w0"}, {0, h, tt, 1})));
    EXPECT_TRUE(set.count(s.path({"e", "w0", "s1 s2"}, {0, t, h, 1})));
    EXPECT_EQ(hat.size(), 27u);
}

TEST(EnumerateHat, StraightPathsAlwaysPresent) {
    for (const auto& c : kShapes) {
        Shape s(c.type, c.m);
        auto hat = enumerate_hat(s.shape, s.g);
        std::set<QLSPath> set(hat.begin(), hat.end());
        for (Vertex x = 0; x < s.g.num_vertices(); ++x)
            EXPECT_TRUE(set.count(QLSPath{{x}, {Rational(0), Rational(1)}})) << c.type;
    }
}

TEST(EnumerateHat, FundamentalA2IsStraightOnly) {
    Shape s("A2", {1, 0});
    auto hat = enumerate_hat(s.shape, s.g);
    ASSERT_EQ(hat.size(), 3u);
    for (const auto& p : hat) EXPECT_EQ(p.segments(), 1u);
    EXPECT_EQ(enumerate_tilde(s.shape, s.g), hat);
}

TEST(EnumerateHat, MatchesBruteForce) {
    for (const auto& c : kShapes) {
        Shape s(c.type, c.m);
        auto hat = enumerate_hat(s.shape, s.g);
        auto tilde = enumerate_tilde(s.shape, s.g);
        EXPECT_EQ(as_brute(hat), s.brute(oracle::Condition::Hat)) << c.type;
        EXPECT_EQ(as_brute(tilde), s.brute(oracle::Condition::Tilde)) << c.type;
        EXPECT_EQ(hat, tilde) << c.type;
        for (const auto& p : hat) EXPECT_TRUE(is_qls_path(p, s.shape, s.g)) << c.type;
    }
}

TEST(EnumerateHat, ConditionsPrune) {
    for (const auto& c : {ShapeCase{"A2", {2, 1}}, ShapeCase{"C2", {1, 1}}}) {
        Shape s(c.type, c.m);
        EXPECT_GT(s.brute(oracle::Condition::None).size(), enumerate_hat(s.shape, s.g).size()) << c.type;
    }
}

// |B(lambda)_cl| is the product of the fundamental one-column sizes.
TEST(EnumerateHat, CardinalityMatchesTensorDimension) {
    struct Row {
        const char* type;
        IntVec m;
        std::size_t size;
    };
    for (const auto& r : {Row{"A2", {2, 1}, 27}, Row{"A2", {1, 1}, 9}, Row{"A3", {0, 1, 0}, 6},
                          Row{"C2", {1, 1}, 20}, Row{"A1", {2}, 4}, Row{"A2", {3, 0}, 27}}) {
        Shape s(r.type, r.m);
        EXPECT_EQ(enumerate_hat(s.shape, s.g).size(), r.size) << r.type;
    }
}

TEST(EnumerateHat, ThreadedMatchesSerial) {
    Shape s("C2", {1, 1});
    EnumerationOptions one{1'000'000, 1}, four{1'000'000, 4};
    EXPECT_EQ(enumerate_hat(s.shape, s.g, one), enumerate_hat(s.shape, s.g, four));
}

TEST(EnumerateHat, CapIsEnforced) {
    Shape s("A2", {2, 1});
    EXPECT_THROW(enumerate_hat(s.shape, s.g, EnumerationOptions{10, 1}), CapExceeded);
    EXPECT_THROW(enumerate_hat(s.shape, s.g, EnumerationOptions{10, 3}), CapExceeded);
}

TEST(Validation, RejectsMalformedAndInvalid) {
    Shape s("A2", {2, 1});
    const Rational h(1, 2);
    EXPECT_FALSE(is_qls_path(s.path({"e", "e"}, {0, h, 1}), s.shape, s.g));
    EXPECT_FALSE(is_qls_path(s.path({"e"}, {0, h}), s.shape, s.g));
    EXPECT_FALSE(is_qls_path(s.path({"e", "s1"}, {0, 1}), s.shape, s.g));
    EXPECT_FALSE(is_qls_path(s.path({"s1", "e"}, {0, Rational(2, 3), h, 1}), s.shape, s.g));
    // e <- w0 at 1/2: the only alpha_1-paths are longer than the theta edge
    EXPECT_FALSE(is_qls_path(s.path({"e", "w0"}, {0, h, 1}), s.shape, s.g));
    EXPECT_TRUE(is_qls_path(s.path({"e", "w0"}, {0, Rational(1, 3), 1}), s.shape, s.g));
    EXPECT_EQ(first_invalid_segment(s.path({"e", "w0", "s1 s2"}, {0, h, Rational(2, 3), 1}), s.shape, s.g,
                                    Variant::Hat),
              1u);
}

TEST(Evaluate, Examples) {
    Shape s("A2", {2, 1});
    const Weight lambda = s.shape.classical;
    auto straight = s.path({"e"}, {0, 1});
    auto at = evaluate(straight, Rational(2, 5), lambda, s.g);
    EXPECT_EQ(at, (RationalVector{Rational(4, 5), Rational(2, 5)}));

    auto eta3 = s.path({"e", "w0", "s1 s2"}, {0, Rational(1, 3), Rational(1, 2), 1});
    EXPECT_EQ(evaluate(eta3, Rational(0), lambda, s.g), (RationalVector{Rational(0), Rational(0)}));
    // (1/3)(2,1) + (1/6) w0(2,1) + (1/2) r1r2(2,1) with w0(2,1) = (-1,-2), r1r2(2,1) = (-3,2)
    EXPECT_EQ(s.group.act(parse_word(s.group, "w0"), lambda), Weight({-1, -2}));
    EXPECT_EQ(s.group.act(parse_word(s.group, "s1 s2"), lambda), Weight({-3, 2}));
    EXPECT_EQ(evaluate(eta3, Rational(1), lambda, s.g), (RationalVector{Rational(-1), Rational(1)}));
    EXPECT_EQ(evaluate(eta3, Rational(1, 2), lambda, s.g), (RationalVector{Rational(1, 2), Rational(0)}));

    EXPECT_THROW(evaluate(eta3, Rational(-1, 2), lambda, s.g), InvalidInput);
    EXPECT_THROW(evaluate(eta3, Rational(3, 2), lambda, s.g), InvalidInput);
}
