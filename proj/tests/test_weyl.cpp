#include <gtest/gtest.h>

#include <set>

#include "qbruhat/weyl.hpp"

using namespace qbruhat;

namespace {

struct Fixture {
    RootSystem rs;
    WeylGroup group;
    explicit Fixture(const char* name) : rs(FiniteType::parse(name)), group(rs) {}
    ElementId w(std::initializer_list<int> word) const {
        std::vector<int> v;
        for (int i : word) v.push_back(i - 1);
        return group.from_word(v);
    }
};

// Minimal coset representative by exhaustive length comparison over wW_J.
ElementId brute_force_projection(const WeylGroup& g, NodeMask J, ElementId w) {
    std::vector<ElementId> parabolic;
    for (ElementId x = 0; x < g.size(); ++x) {
        bool inside = true;
        for (int i : g.element(x).reduced_word) inside = inside && has_node(J, i);
        if (inside) parabolic.push_back(x);
    }
    ElementId best = w;
    for (ElementId x : parabolic) {
        ElementId c = g.multiply(w, x);
        if (g.length(c) < g.length(best)) best = c;
    }
    return best;
}

}  // namespace

TEST(WeylGroup, A2) {
    Fixture f("A2");
    ASSERT_EQ(f.group.size(), 6u);
    std::multiset<int> lengths;
    for (const auto& e : f.group.elements()) lengths.insert(e.length);
    EXPECT_EQ(lengths, (std::multiset<int>{0, 1, 1, 2, 2, 3}));
    EXPECT_EQ(f.group.length(f.group.identity()), 0);
    EXPECT_EQ(f.w({1, 2, 1}), f.w({2, 1, 2}));
    EXPECT_EQ(f.group.longest(), f.w({1, 2, 1}));
    // r_theta = w0 in A2
    EXPECT_EQ(f.group.reflection(f.rs.highest_root()), f.group.longest());
}

TEST(WeylGroup, A1) {
    Fixture f("A1");
    EXPECT_EQ(f.group.size(), 2u);
}

TEST(WeylGroup, C2OrderMatchesFormula) {
    Fixture f("C2");
    EXPECT_EQ(f.group.size(), 8u);
    EXPECT_EQ(weyl_group_order(f.rs.type()), 8u);
    EXPECT_EQ(f.group.length(f.group.longest()), 4);
}

TEST(WeylGroup, OrdersAcrossTypes) {
    for (const char* name : {"A3", "A4", "B3", "C3", "D4", "G2", "F4", "B4"}) {
        Fixture f(name);
        EXPECT_EQ(f.group.size(), weyl_group_order(f.rs.type())) << name;
        EXPECT_EQ(f.group.length(f.group.longest()), static_cast<int>(f.rs.num_positive_roots())) << name;
    }
}

TEST(WeylGroup, CapRefusesLargeGroups) {
    RootSystem e6(FiniteType::parse("E6"));
    EXPECT_THROW(WeylGroup{e6}, CapExceeded);
    RootSystem a3(FiniteType::parse("A3"));
    EXPECT_THROW(WeylGroup(a3, GroupLimits{10, 5}), CapExceeded);
    EXPECT_TRUE(WeylGroup(a3, GroupLimits{100, 5}).large());
}

TEST(WeylGroup, ReducedWordsAndInverses) {
    Fixture f("B3");
    for (const auto& e : f.group.elements()) {
        EXPECT_EQ(static_cast<int>(e.reduced_word.size()), e.length);
        EXPECT_EQ(f.group.from_word(e.reduced_word), e.id);
        EXPECT_EQ(f.group.multiply(e.id, f.group.inverse(e.id)), f.group.identity());
        EXPECT_EQ(f.group.length(f.group.inverse(e.id)), e.length);
    }
}

TEST(WeylGroup, ReflectionsAreInvolutions) {
    Fixture f("G2");
    for (std::size_t k = 0; k < f.rs.num_positive_roots(); ++k) {
        ElementId r = f.group.reflection(k);
        EXPECT_EQ(f.group.multiply(r, r), f.group.identity());
        EXPECT_EQ(f.group.length(r) % 2, 1);
    }
}

TEST(WeylGroup, RootActionAgreesWithWordAction) {
    Fixture f("C3");
    const std::size_t np = f.rs.num_positive_roots();
    for (const auto& e : f.group.elements()) {
        for (std::size_t k = 0; k < np; ++k) {
            Root img = f.group.act(e.id, f.rs.root(k));
            std::size_t idx = f.group.act_on_root(e.id, k);
            Root expect = idx < np ? f.rs.root(idx) : -f.rs.root(idx - np);
            EXPECT_EQ(img, expect);
        }
    }
}

TEST(CosetSystem, A2Parabolics) {
    Fixture f("A2");
    CosetSystem all(f.group, 0);
    EXPECT_EQ(all.size(), 6u);
    for (ElementId w = 0; w < f.group.size(); ++w) EXPECT_EQ(all.project(w), w);

    CosetSystem j2(f.group, 0b10);
    std::set<ElementId> reps(j2.reps().begin(), j2.reps().end());
    EXPECT_EQ(reps, (std::set<ElementId>{f.group.identity(), f.w({1}), f.w({2, 1})}));
    EXPECT_EQ(j2.project(f.w({2})), f.group.identity());
    EXPECT_EQ(j2.project(f.w({1, 2})), f.w({1}));

    CosetSystem full(f.group, 0b11);
    EXPECT_EQ(full.size(), 1u);
    EXPECT_EQ(full.rep(0), f.group.identity());
    EXPECT_EQ(all.project(f.group.longest()), f.group.longest());
}

TEST(CosetSystem, ProjectionMatchesBruteForce) {
    for (const char* name : {"A2", "A3", "B3", "C3", "G2"}) {
        Fixture f(name);
        const int n = f.rs.rank();
        for (NodeMask J = 0; J < (NodeMask{1} << n); ++J) {
            CosetSystem cs(f.group, J);
            for (ElementId w = 0; w < f.group.size(); ++w) {
                ElementId p = cs.project(w);
                EXPECT_EQ(p, brute_force_projection(f.group, J, w)) << name << " J=" << J;
                EXPECT_TRUE(cs.is_rep(p));
                EXPECT_EQ(cs.project(p), p);
                EXPECT_LE(f.group.length(p), f.group.length(w));
                EXPECT_EQ(f.group.length(p) == f.group.length(w), cs.is_rep(w));
                // p^{-1} w lies in W_J
                ElementId x = f.group.multiply(f.group.inverse(p), w);
                EXPECT_EQ(cs.project(x), f.group.identity());
            }
            EXPECT_EQ(cs.size() * cs.parabolic_order(), f.group.size());
        }
    }
}

TEST(CosetSystem, LengthAdditivity) {
    for (const char* name : {"A3", "B3", "C3"}) {
        Fixture f(name);
        for (NodeMask J = 0; J < (NodeMask{1} << f.rs.rank()); ++J) {
            CosetSystem cs(f.group, J);
            for (ElementId w : cs.reps())
                for (ElementId x = 0; x < f.group.size(); ++x) {
                    if (cs.project(x) != f.group.identity()) continue;
                    EXPECT_EQ(f.group.length(f.group.multiply(w, x)), f.group.length(w) + f.group.length(x));
                }
        }
    }
}

TEST(CosetSystem, OrbitMapIsInjective) {
    Fixture f("A3");
    for (IntVec m : {IntVec{0, 1, 0}, IntVec{1, 0, 0}, IntVec{1, 0, 2}, IntVec{1, 1, 1}}) {
        auto shape = compute_shape(f.rs, m);
        CosetSystem cs(f.group, shape.parabolic);
        std::set<IntVec> images;
        for (ElementId w : cs.reps()) images.insert(f.group.act(w, shape.classical).coords);
        EXPECT_EQ(images.size(), cs.size());
    }
}

TEST(WordFormat, RoundTripAndAliases) {
    Fixture f("A2");
    for (const auto& e : f.group.elements()) EXPECT_EQ(parse_word(f.group, format_word(f.group, e.id)), e.id);
    EXPECT_EQ(format_word(f.group, f.group.identity()), "e");
    EXPECT_EQ(parse_word(f.group, "r1 r2 r1"), f.group.longest());
    EXPECT_EQ(parse_word(f.group, "w0"), f.group.longest());
    EXPECT_EQ(parse_word(f.group, "2 1"), f.w({2, 1}));
    EXPECT_THROW(parse_word(f.group, "s3"), InvalidInput);
    EXPECT_THROW(parse_word(f.group, "x1"), InvalidInput);
    EXPECT_THROW(parse_word(f.group, ""), InvalidInput);
    EXPECT_EQ(parse_word(f.group, "s1 s1"), f.group.identity());
    EXPECT_THROW(parse_word(f.group, "s1 s1", WordCheck::Reduced), InvalidInput);
    EXPECT_EQ(parse_word(f.group, "w0", WordCheck::Reduced), f.group.longest());
}
