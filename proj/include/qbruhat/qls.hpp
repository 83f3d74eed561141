#pragma once

// Quantum LS paths of shape lambda: candidate turning times, enumeration of
// the hat variant (shortest sigma-paths) and the tilde variant (any
// sigma-path), structural validation and evaluation as a piecewise-linear map.

#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qbruhat/cartan.hpp"
#include "qbruhat/parallel.hpp"
#include "qbruhat/qbg.hpp"
#include "qbruhat/rational.hpp"

namespace qbruhat {

/// (x_1, ..., x_s; 0 = sigma_0 < ... < sigma_s = 1) with directions as PQBG vertices.
struct QLSPath {
    std::vector<Vertex> dirs;
    std::vector<Rational> times;

    std::size_t segments() const { return dirs.size(); }

    friend bool operator==(const QLSPath&, const QLSPath&) = default;
    friend auto operator<=>(const QLSPath& a, const QLSPath& b) {
        if (auto c = a.dirs <=> b.dirs; c != 0) return c;
        return a.times <=> b.times;
    }
};

using RationalVector = std::vector<Rational>;

enum class Variant { Hat, Tilde };

inline const char* to_string(Variant v) { return v == Variant::Hat ? "hat" : "tilde"; }

/// Every a/b in lowest terms with 0 < a/b < 1 and b dividing <Lambda, beta^v> for some label beta.
inline std::vector<Rational> sigma_candidates(const LevelZeroShape& shape, const PQBG& g) {
    std::vector<Rational> out;
    std::vector<Int> seen_b;
    for (auto k : g.labels()) {
        Int v = pair(shape.classical, g.roots().coroot(k));
        for (Int b = 2; b <= v; ++b) {
            if (v % b != 0 || std::find(seen_b.begin(), seen_b.end(), b) != seen_b.end()) continue;
            seen_b.push_back(b);
            for (Int a = 1; a < b; ++a)
                if (std::gcd(a, b) == 1) out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Whether a sigma-path from x_next to x_cur exists (tilde), and is shortest overall (hat).
inline bool segment_admissible(const PQBG& g, const Weight& lambda, Vertex x_cur, Vertex x_next,
                               const Rational& sigma, Variant variant) {
    auto d = g.distances_to(x_cur, g.admissible_labels(sigma, lambda));
    int ds = (*d)[x_next];
    if (ds < 0) return false;
    return variant == Variant::Tilde || ds == g.directed_distance(x_cur, x_next);
}

/// Structural problems with a path (sizes, time monotonicity, repeated directions), or nullopt.
inline std::optional<std::string> structural_error(const QLSPath& eta, std::size_t num_vertices) {
    if (eta.dirs.empty()) return "path has no directions";
    if (eta.times.size() != eta.dirs.size() + 1) return "expected one more time than directions";
    if (eta.times.front() != Rational(0) || eta.times.back() != Rational(1)) return "times must start at 0 and end at 1";
    for (std::size_t k = 1; k < eta.times.size(); ++k)
        if (eta.times[k] <= eta.times[k - 1]) return "times must be strictly increasing";
    for (auto v : eta.dirs)
        if (v >= num_vertices) return "direction is not a coset representative";
    for (std::size_t k = 1; k < eta.dirs.size(); ++k)
        if (eta.dirs[k] == eta.dirs[k - 1]) return "consecutive directions must differ";
    return std::nullopt;
}

/// Index k (1-based, as in the turning time sigma_k) of the first failing segment, 0 if valid.
inline std::size_t first_invalid_segment(const QLSPath& eta, const LevelZeroShape& shape, const PQBG& g,
                                         Variant variant) {
    for (std::size_t k = 1; k < eta.dirs.size(); ++k)
        if (!segment_admissible(g, shape.classical, eta.dirs[k - 1], eta.dirs[k], eta.times[k], variant)) return k;
    return 0;
}

inline bool is_qls_path(const QLSPath& eta, const LevelZeroShape& shape, const PQBG& g,
                        Variant variant = Variant::Hat) {
    return !structural_error(eta, g.num_vertices()) && first_invalid_segment(eta, shape, g, variant) == 0;
}

struct EnumerationOptions {
    std::size_t cap = 1'000'000;
    unsigned threads = 0;  // 0: worker_count()
};

/// All QLS paths of the given variant, sorted. Throws CapExceeded past options.cap paths.
inline std::vector<QLSPath> enumerate_qls(const LevelZeroShape& shape, const PQBG& g, Variant variant,
                                          const EnumerationOptions& options = {}) {
    const std::size_t n = g.num_vertices();
    const auto sigmas = sigma_candidates(shape, g);

    // ok[c][x * n + y]: a segment x <- y is admissible at sigmas[c]
    std::vector<std::vector<char>> ok(sigmas.size(), std::vector<char>(n * n, 0));
    std::map<std::string, std::size_t> by_mask;
    for (std::size_t c = 0; c < sigmas.size(); ++c) {
        auto mask = g.admissible_labels(sigmas[c], shape.classical);
        auto [it, fresh] = by_mask.emplace(mask.to_string(), c);
        if (!fresh) {
            ok[c] = ok[it->second];
            continue;
        }
        for (Vertex x = 0; x < n; ++x) {
            auto ds = g.distances_to(x, mask);
            auto d = g.distances_to(x);
            for (Vertex y = 0; y < n; ++y) {
                if (x == y || (*ds)[y] < 0) continue;
                ok[c][x * n + y] = variant == Variant::Tilde || (*ds)[y] == (*d)[y];
            }
        }
    }

    std::atomic<std::size_t> total{0};
    std::vector<std::vector<QLSPath>> per_start(n);
    auto run = [&](std::size_t start) {
        auto& out = per_start[start];
        QLSPath cur;
        cur.dirs.push_back(static_cast<Vertex>(start));
        cur.times.push_back(Rational(0));
        auto dfs = [&](auto&& self, std::size_t next_sigma) -> void {
            cur.times.push_back(Rational(1));
            out.push_back(cur);
            cur.times.pop_back();
            if (total.fetch_add(1) + 1 > options.cap)
                throw CapExceeded("QLS enumeration exceeded " + std::to_string(options.cap) + " paths");
            const Vertex x = cur.dirs.back();
            for (std::size_t c = next_sigma; c < sigmas.size(); ++c)
                for (Vertex y = 0; y < n; ++y) {
                    if (!ok[c][x * n + y]) continue;
                    cur.dirs.push_back(y);
                    cur.times.push_back(sigmas[c]);
                    self(self, c + 1);
                    cur.times.pop_back();
                    cur.dirs.pop_back();
                }
        };
        dfs(dfs, 0);
    };
    parallel_for(n, run, options.threads == 0 ? worker_count() : options.threads);

    std::vector<QLSPath> all;
    for (auto& v : per_start) all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    std::sort(all.begin(), all.end());
    return all;
}

inline std::vector<QLSPath> enumerate_hat(const LevelZeroShape& shape, const PQBG& g,
                                          const EnumerationOptions& options = {}) {
    return enumerate_qls(shape, g, Variant::Hat, options);
}

inline std::vector<QLSPath> enumerate_tilde(const LevelZeroShape& shape, const PQBG& g,
                                            const EnumerationOptions& options = {}) {
    return enumerate_qls(shape, g, Variant::Tilde, options);
}

/// eta(t) = sum_{l<k} (sigma_l - sigma_{l-1}) x_l Lambda + (t - sigma_{k-1}) x_k Lambda, in omega-coordinates.
inline RationalVector evaluate(const QLSPath& eta, const Rational& t, const Weight& lambda, const PQBG& g) {
    if (t < Rational(0) || t > Rational(1)) throw InvalidInput("t must lie in [0, 1], got " + t.str());
    if (auto err = structural_error(eta, g.num_vertices())) throw InvalidInput(*err);
    RationalVector out(static_cast<std::size_t>(lambda.rank()), Rational(0));
    for (std::size_t l = 0; l < eta.dirs.size() && eta.times[l] < t; ++l) {
        const Rational span = std::min(t, eta.times[l + 1]) - eta.times[l];
        const Weight xl = g.group().act(g.element(eta.dirs[l]), lambda);
        for (int i = 0; i < lambda.rank(); ++i) out[i] += span * Rational(xl[i]);
    }
    return out;
}

}  // namespace qbruhat
