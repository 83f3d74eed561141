#pragma once

// Degree of a quantum LS path from segment energies <Lambda, wt(d_p)>, and
// the affine lift (nu_1, ..., nu_s; sigma) together with the cover chains
// that join consecutive weights. The lift is only used as a certificate;
// degree() never consults it.

#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "qbruhat/qbg.hpp"
#include "qbruhat/qls.hpp"

namespace qbruhat {

/// x Lambda + delta * (null root), with x a coset representative.
struct AffineOrbitElement {
    Vertex rep = 0;
    Int delta = 0;

    friend bool operator==(const AffineOrbitElement&, const AffineOrbitElement&) = default;
    friend auto operator<=>(const AffineOrbitElement&, const AffineOrbitElement&) = default;
};

struct SegmentData {
    std::size_t index = 0;  // p, the turning time sigma_p
    Vertex source = 0;      // x_{p+1}
    Vertex target = 0;      // x_p
    Rational sigma;
    DirectedPath path;
    Int energy = 0;
};

/// One step mu_{k-1} > mu_k of a lift chain; xi = finite + delta_part * delta.
struct ChainStep {
    AffineOrbitElement from;
    AffineOrbitElement to;
    std::uint32_t beta = 0;
    EdgeKind kind = EdgeKind::Bruhat;
    Root xi_finite;
    Int xi_delta = 0;
};

struct SegmentChain {
    std::size_t index = 0;
    Rational sigma;
    std::vector<AffineOrbitElement> mus;  // mu_0 = nu_p, ..., mu_n = nu_{p+1}
    std::vector<ChainStep> steps;
};

struct AffineLSPath {
    std::vector<AffineOrbitElement> weights;
    std::vector<Rational> times;
    std::vector<SegmentChain> chains;
};

/// Energy of the segment x_cur <- x_next at sigma from one shortest sigma-admissible path.
inline SegmentData segment_energy(const PQBG& g, const Weight& lambda, Vertex x_next, Vertex x_cur,
                                  const Rational& sigma, TieBreak tie = TieBreak::Forward) {
    SegmentData s;
    s.source = x_next;
    s.target = x_cur;
    s.sigma = sigma;
    if (x_next == x_cur) {
        s.path.vertices = {x_cur};
        return s;
    }
    auto r = g.sigma_path(x_cur, x_next, sigma, lambda, tie);
    if (!r.shortest)
        throw InvalidInput("no shortest " + sigma.str() + "-admissible path from " +
                           format_word(g.group(), g.element(x_next)) + " to " +
                           format_word(g.group(), g.element(x_cur)));
    s.path = std::move(*r.path);
    s.energy = pair(lambda, path_weight(g.roots(), s.path));
    if (s.energy < 0) throw InvariantViolation("negative segment energy");
    return s;
}

/// Segment energies memoised per (x_next, x_cur, sigma). Concurrent lookups are
/// safe; a race may compute a value twice but stores only one.
class EnergyCache {
public:
    EnergyCache(const PQBG& g, Weight lambda, TieBreak tie = TieBreak::Forward)
        : g_(&g), lambda_(std::move(lambda)), tie_(tie) {}

    const PQBG& graph() const { return *g_; }
    const Weight& lambda() const { return lambda_; }
    TieBreak tie() const { return tie_; }

    SegmentData get(Vertex x_next, Vertex x_cur, const Rational& sigma) const {
        const Key key{x_next, x_cur, sigma};
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        SegmentData s = segment_energy(*g_, lambda_, x_next, x_cur, sigma, tie_);
        std::lock_guard lock(mutex_);
        auto [it, fresh] = cache_.emplace(key, s);
        if (!fresh && it->second.energy != s.energy) throw InvariantViolation("segment energy is not canonical");
        return it->second;
    }

private:
    using Key = std::tuple<Vertex, Vertex, Rational>;
    const PQBG* g_;
    Weight lambda_;
    TieBreak tie_;
    mutable std::mutex mutex_;
    mutable std::map<Key, SegmentData> cache_;
};

/// Segment data for p = 1..s-1, after checking eta is a hat QLS path.
inline std::vector<SegmentData> segments(const QLSPath& eta, const EnergyCache& cache) {
    if (auto err = structural_error(eta, cache.graph().num_vertices())) throw InvalidInput(*err);
    std::vector<SegmentData> out;
    for (std::size_t p = 1; p < eta.dirs.size(); ++p) {
        SegmentData s = cache.get(eta.dirs[p], eta.dirs[p - 1], eta.times[p]);
        s.index = p;
        out.push_back(std::move(s));
    }
    return out;
}

/// Deg(eta) = -sum_p (1 - sigma_p) <Lambda, wt(d_p)>.
inline Int degree(const QLSPath& eta, const EnergyCache& cache) {
    Rational sum(0);
    for (const auto& s : segments(eta, cache)) sum += (Rational(1) - s.sigma) * Rational(s.energy);
    if (!sum.is_integer()) throw InvariantViolation("degree sum " + sum.str() + " is not an integer");
    return -sum.num();
}

inline Int degree(const QLSPath& eta, const LevelZeroShape& shape, const PQBG& g, TieBreak tie = TieBreak::Forward) {
    return degree(eta, EnergyCache(g, shape.classical, tie));
}

/// nu_1 = x_1 lambda, nu_p = x_p lambda + (sum_{u<p} energy_u) delta, with the cover chains between them.
inline AffineLSPath lift(const QLSPath& eta, const EnergyCache& cache) {
    const PQBG& g = cache.graph();
    const auto segs = segments(eta, cache);
    AffineLSPath out;
    out.times = eta.times;
    Int base = 0;
    out.weights.push_back({eta.dirs[0], 0});
    for (const auto& s : segs) {
        SegmentChain chain;
        chain.index = s.index;
        chain.sigma = s.sigma;
        const auto& d = s.path;
        Int acc = base;
        chain.mus.push_back({d.vertices[0], acc});
        for (std::size_t k = 1; k < d.vertices.size(); ++k) {
            ChainStep step;
            step.beta = d.labels[k - 1];
            step.kind = d.kinds[k - 1];
            step.xi_finite = g.group().act(g.element(d.vertices[k]), g.roots().root(step.beta));
            step.xi_delta = step.kind == EdgeKind::Quantum ? 1 : 0;
            step.from = chain.mus.back();
            if (step.kind == EdgeKind::Quantum) acc += pair(cache.lambda(), g.roots().coroot(step.beta));
            step.to = {d.vertices[k], acc};
            chain.mus.push_back(step.to);
            chain.steps.push_back(step);
        }
        base += s.energy;
        if (acc != base) throw InvariantViolation("chain endpoint disagrees with the segment energy");
        out.weights.push_back({eta.dirs[s.index], base});
        out.chains.push_back(std::move(chain));
    }
    return out;
}

inline AffineLSPath lift(const QLSPath& eta, const LevelZeroShape& shape, const PQBG& g) {
    return lift(eta, EnergyCache(g, shape.classical));
}

/// delta-coefficient of the lift at t = 1: sum_p (sigma_p - sigma_{p-1}) n_p.
inline Int endpoint_delta(const AffineLSPath& pi) {
    Rational sum(0);
    for (std::size_t p = 0; p < pi.weights.size(); ++p)
        sum += (pi.times[p + 1] - pi.times[p]) * Rational(pi.weights[p].delta);
    if (!sum.is_integer() || sum < Rational(0))
        throw InvariantViolation("endpoint delta-coefficient " + sum.str() + " is not a nonnegative integer");
    return sum.num();
}

/// Finite part of the lift at t = 1, in omega-coordinates.
inline RationalVector endpoint_finite(const AffineLSPath& pi, const Weight& lambda, const PQBG& g) {
    RationalVector out(static_cast<std::size_t>(lambda.rank()), Rational(0));
    for (std::size_t p = 0; p < pi.weights.size(); ++p) {
        const Weight x = g.group().act(g.element(pi.weights[p].rep), lambda);
        for (int i = 0; i < lambda.rank(); ++i) out[i] += (pi.times[p + 1] - pi.times[p]) * Rational(x[i]);
    }
    return out;
}

struct DegreeRow {
    QLSPath path;
    std::vector<Int> energies;
    Int degree = 0;

    friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

/// One row per path, in input order.
inline std::vector<DegreeRow> degree_table(const std::vector<QLSPath>& paths, const EnergyCache& cache,
                                           unsigned threads = 0) {
    std::vector<DegreeRow> rows(paths.size());
    parallel_for(
        paths.size(),
        [&](std::size_t i) {
            rows[i].path = paths[i];
            for (const auto& s : segments(paths[i], cache)) rows[i].energies.push_back(s.energy);
            rows[i].degree = degree(paths[i], cache);
        },
        threads == 0 ? worker_count() : threads);
    return rows;
}

}  // namespace qbruhat
