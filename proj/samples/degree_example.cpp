// Degrees and affine lifts of a few quantum LS paths of shape 2w1 + w2 in type A2,
// then the degree distribution over all 27 paths.

#include <iostream>
#include <map>

#include "qbruhat/affine_oracle.hpp"
#include "qbruhat/degree.hpp"
#include "qbruhat/io.hpp"
#include "qbruhat/problem.hpp"

using namespace qbruhat;

int main() {
    Problem p("A2", {2, 1});
    EnergyCache cache(p.g, p.shape.classical);
    AffineOrbit orbit(p.cs, p.shape, 10);

    for (const char* text : {"s2;s2 s1;s1|0,1/2,2/3,1", "s1;e;w0|0,1/2,2/3,1", "e;w0;s1 s2|0,1/3,1/2,1"}) {
        const QLSPath eta = io::parse_path_literal(text, p.g);
        std::cout << text << "\n  Deg = " << degree(eta, cache) << "\n  lift:";
        const AffineLSPath pi = lift(eta, cache);
        for (const auto& w : pi.weights)
            std::cout << " (" << format_word(p.group, p.g.element(w.rep)) << ", " << w.delta << ")";
        std::cout << "\n  oracle: " << to_string(orbit.verify_ls_path(pi).verdict) << '\n';
    }

    std::map<Int, int> histogram;
    for (const auto& row : degree_table(enumerate_hat(p.shape, p.g), cache)) ++histogram[row.degree];
    std::cout << "degree distribution:";
    for (const auto& [d, n] : histogram) std::cout << ' ' << d << ':' << n;
    std::cout << '\n';
}
