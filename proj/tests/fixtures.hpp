#pragma once

#include <string_view>
#include <vector>

#include "qbruhat/degree.hpp"

namespace fixtures {

using namespace qbruhat;

/// Root system, group, shape, cosets and graph for one (type, multiplicities).
struct Shape {
    RootSystem rs;
    WeylGroup group;
    LevelZeroShape shape;
    CosetSystem cs;
    PQBG g;
    Shape(const char* type, const IntVec& m)
        : rs(FiniteType::parse(type)), group(rs), shape(compute_shape(rs, m)), cs(group, shape.parabolic), g(cs) {}

    Vertex v(std::string_view word) const { return *g.vertex_of(parse_word(group, word)); }

    QLSPath path(std::initializer_list<const char*> dirs, std::initializer_list<Rational> times) const {
        QLSPath p;
        for (auto d : dirs) p.dirs.push_back(v(d));
        p.times.assign(times.begin(), times.end());
        return p;
    }
};

struct ShapeCase {
    const char* type;
    IntVec m;
};

/// The four shapes named by the acceptance criteria.
inline const std::vector<ShapeCase>& acceptance_shapes() {
    static const std::vector<ShapeCase> s = {{"A2", {2, 1}}, {"A2", {1, 1}}, {"C2", {1, 1}}, {"A3", {0, 1, 0}}};
    return s;
}

}  // namespace fixtures
