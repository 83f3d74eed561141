#pragma once

// Everything derived from one (type, multiplicities) input, owned together
// because the group, cosets and graph hold pointers into each other.

#include <optional>
#include <string_view>

#include "qbruhat/qbg.hpp"

namespace qbruhat {

struct Problem {
    RootSystem rs;
    WeylGroup group;
    LevelZeroShape shape;
    CosetSystem cs;
    PQBG g;

    /// J defaults to the stabiliser of Lambda; an override must be a subset of it.
    Problem(std::string_view type, const IntVec& multiplicities, std::optional<NodeMask> J = std::nullopt)
        : rs(FiniteType::parse(type)),
          group(rs),
          shape(compute_shape(rs, multiplicities)),
          cs(group, checked_parabolic(shape, rs.rank(), J)),
          g(cs) {}

    Problem(const Problem&) = delete;
    Problem& operator=(const Problem&) = delete;

    bool default_parabolic() const { return cs.J() == shape.parabolic; }

private:
    static NodeMask checked_parabolic(const LevelZeroShape& shape, int rank, std::optional<NodeMask> J) {
        if (!J) return shape.parabolic;
        if ((*J & ~shape.parabolic) != 0)
            throw InvalidInput("parabolic set " + format_nodes(*J, rank) + " is not contained in " +
                               format_nodes(shape.parabolic, rank) + " = {j : <Lambda, alpha_j^v> = 0}");
        return *J;
    }
};

}  // namespace qbruhat
