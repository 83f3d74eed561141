#pragma once

// Verification in the affine orbit W.lambda, inside the slice of elements
// x lambda + n delta with |n| <= window. Finite parts are handled as weights
// (reflected with the Cartan data) and only mapped back to coset
// representatives by lookup, so the checks do not reuse the graph's
// projection logic.
//
// Level-zero reflections: for xi = alpha + n delta and level-zero mu,
// <mu, xi^v> = <mu_fin, alpha^v> and r_xi mu = r_alpha mu_fin + (mu_delta - n <mu_fin, alpha^v>) delta.
// In particular r_{delta - gamma} mu = r_gamma mu + <mu, gamma^v> delta.
// A step mu -> r_xi mu with <mu, xi^v> < 0 never lowers the delta-coefficient,
// so every chain between two elements of the slice stays inside it.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qbruhat/degree.hpp"
#include "qbruhat/qbg.hpp"
#include "qbruhat/weyl.hpp"

namespace qbruhat {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

/// Step over the candidate set {gamma} u {delta - gamma}, gamma a positive finite root.
struct RaisingStep {
    enum class Kind { Finite, Affine };
    Kind kind = Kind::Finite;
    std::uint32_t gamma = 0;
    AffineOrbitElement from;
    AffineOrbitElement to;
};

/// Step over an arbitrary positive real root xi = xi_finite + xi_delta * delta.
struct ReflectionStep {
    AffineOrbitElement to;
    Root xi_finite;
    Int xi_delta = 0;
    Int pairing = 0;  // <mu, xi^v> < 0
};

struct DistResult {
    enum class Status { Defined, Undefined, Inconclusive };
    Status status = Status::Undefined;
    int value = 0;

    bool defined() const { return status == Status::Defined; }
};

struct LSVerification {
    Verdict verdict = Verdict::Pass;
    /// 1-based k of the failing pair (nu_k, nu_{k+1}); 0 if none.
    std::size_t pair = 0;
    std::string reason;
};

struct CoverReport {
    Int window = 0;
    std::size_t covers = 0;
    std::size_t edges = 0;
    std::size_t edge_checks = 0;
    std::size_t skipped = 0;  // edge images leaving the slice
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// A negative window denotes the empty slice.
class AffineOrbit {
public:
    AffineOrbit(const CosetSystem& cs, const LevelZeroShape& shape, Int window)
        : cs_(&cs), shape_(shape), window_(window < -1 ? -1 : window), lattice_(shape.delta_lattice()) {
        const auto& g = cs.group();
        for (Vertex v = 0; v < cs.size(); ++v) {
            Weight w = g.act(cs.rep(v), shape.classical);
            if (!by_weight_.emplace(w.coords, v).second)
                throw InvariantViolation("coset representatives give equal weights");
            weights_.push_back(std::move(w));
        }
    }

    AffineOrbit(const AffineOrbit&) = delete;
    AffineOrbit& operator=(const AffineOrbit&) = delete;

    Int window() const { return window_; }
    Int delta_lattice() const { return lattice_; }
    std::size_t num_reps() const { return weights_.size(); }
    const Weight& finite(const AffineOrbitElement& e) const { return weights_.at(e.rep); }

    bool in_window(const AffineOrbitElement& e) const { return e.delta >= -window_ && e.delta <= window_; }
    bool in_orbit(const AffineOrbitElement& e) const { return e.rep < weights_.size() && e.delta % lattice_ == 0; }

    std::optional<Vertex> rep_of(const Weight& w) const {
        auto it = by_weight_.find(w.coords);
        if (it == by_weight_.end()) return std::nullopt;
        return it->second;
    }

    /// Elements of the orbit inside the slice, ordered by (delta, rep).
    std::vector<AffineOrbitElement> slice() const {
        std::vector<AffineOrbitElement> out;
        for (Int n = -window_; n <= window_; ++n) {
            if (n % lattice_ != 0) continue;
            for (Vertex v = 0; v < weights_.size(); ++v) out.push_back({v, n});
        }
        return out;
    }

    std::vector<RaisingStep> raising_steps(const AffineOrbitElement& mu) const {
        const auto& rs = roots();
        std::vector<RaisingStep> out;
        const Weight& m = finite(mu);
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            const Int p = pair(m, rs.coroot(k));
            if (p == 0) continue;
            RaisingStep s;
            s.gamma = static_cast<std::uint32_t>(k);
            s.from = mu;
            s.kind = p < 0 ? RaisingStep::Kind::Finite : RaisingStep::Kind::Affine;
            s.to = {lookup(rs.reflect(m, k)), p < 0 ? mu.delta : mu.delta + p};
            out.push_back(s);
        }
        return out;
    }

    /// Every r_xi mu with xi a positive real root, <mu, xi^v> < 0 and delta-coefficient <= max_delta.
    std::vector<ReflectionStep> steps(const AffineOrbitElement& mu, Int max_delta) const {
        const auto& rs = roots();
        std::vector<ReflectionStep> out;
        const Weight& m = finite(mu);
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
            const Int q = pair(m, rs.coroot(k));
            if (q == 0) continue;
            const Vertex image = lookup(rs.reflect(m, k));
            // xi = sign * alpha_k + n delta, pairing sign * q must be negative
            const Int sign = q < 0 ? 1 : -1;
            const Int p = sign * q;
            for (Int n = sign > 0 ? 0 : 1;; ++n) {
                const Int d = mu.delta - n * p;
                if (d > max_delta) break;
                out.push_back({{image, d}, Int{sign} * rs.root(k), n, p});
            }
        }
        return out;
    }

    /// Maximal chain length from mu down to nu.
    DistResult dist(const AffineOrbitElement& mu, const AffineOrbitElement& nu) const {
        DistResult r;
        if (!in_window(mu) || !in_window(nu)) {
            r.status = DistResult::Status::Inconclusive;
            return r;
        }
        const int d = (*longest_to(nu))[index(mu)];
        if (d < 0) return r;
        r.status = DistResult::Status::Defined;
        r.value = d;
        return r;
    }

    Verdict is_cover(const AffineOrbitElement& mu, const AffineOrbitElement& nu) const {
        auto d = dist(mu, nu);
        if (d.status == DistResult::Status::Inconclusive) return Verdict::Inconclusive;
        return d.defined() && d.value == 1 ? Verdict::Pass : Verdict::Fail;
    }

    /// Whether a saturated cover chain mu > ... > nu exists with sigma <mu_{k-1}, xi_k^v> in Z_{<0} throughout.
    Verdict verify_sigma_chain(const AffineOrbitElement& mu, const AffineOrbitElement& nu, const Rational& sigma) const {
        if (!in_window(mu) || !in_window(nu)) return Verdict::Inconclusive;
        auto below = longest_to(nu);
        if ((*below)[index(mu)] < 1) return Verdict::Fail;
        std::map<AffineOrbitElement, bool> memo;
        std::function<bool(const AffineOrbitElement&)> reach = [&](const AffineOrbitElement& a) -> bool {
            if (a == nu) return true;
            if (auto it = memo.find(a); it != memo.end()) return it->second;
            bool ok = false;
            for (const auto& s : steps(a, nu.delta)) {
                if (!in_window(s.to) || (*below)[index(s.to)] < 0) continue;
                if (!(sigma * Rational(s.pairing)).is_integer()) continue;
                if ((*longest_to(s.to))[index(a)] != 1) continue;
                if (reach(s.to)) {
                    ok = true;
                    break;
                }
            }
            memo[a] = ok;
            return ok;
        };
        return reach(mu) ? Verdict::Pass : Verdict::Fail;
    }

    /// nu_1 > nu_2 > ... > nu_s with a sigma_k-chain for every consecutive pair.
    LSVerification verify_ls_path(const AffineLSPath& pi) const {
        LSVerification out;
        const auto& nu = pi.weights;
        if (nu.empty() || pi.times.size() != nu.size() + 1) {
            out.verdict = Verdict::Fail;
            out.reason = "malformed path";
            return out;
        }
        for (const auto& e : nu)
            if (!in_orbit(e)) {
                out.verdict = Verdict::Fail;
                out.reason = "weight outside the orbit";
                return out;
            }
        for (std::size_t k = 0; k + 1 < nu.size(); ++k) {
            out.pair = k + 1;
            auto d = dist(nu[k], nu[k + 1]);
            if (d.status == DistResult::Status::Inconclusive) {
                out.verdict = Verdict::Inconclusive;
                out.reason = "pair outside the window";
                return out;
            }
            if (!d.defined() || d.value < 1) {
                out.verdict = Verdict::Fail;
                out.reason = "weights not strictly decreasing";
                return out;
            }
            auto v = verify_sigma_chain(nu[k], nu[k + 1], pi.times[k + 1]);
            if (v != Verdict::Pass) {
                out.verdict = v;
                out.reason = "no " + pi.times[k + 1].str() + "-chain";
                return out;
            }
        }
        out.pair = 0;
        return out;
    }

    /// Checks every cover of the slice against the graph's edges, and every edge against covers.
    CoverReport covers_to_edges(const PQBG& graph) const {
        const auto& rs = roots();
        const auto& grp = cs_->group();
        CoverReport rep;
        rep.window = window_;
        auto name = [&](const AffineOrbitElement& e) {
            return "(" + format_word(grp, cs_->rep(e.rep)) + ", " + std::to_string(e.delta) + ")";
        };
        for (const auto& mu : slice()) {
            for (const auto& s : steps(mu, window_)) {
                if ((*longest_to(s.to))[index(mu)] != 1) continue;
                ++rep.covers;
                const bool finite_kind = s.xi_delta == 0;
                const bool affine_kind = s.xi_delta == 1 && !rs.positive_index(s.xi_finite);
                if (!finite_kind && !affine_kind) {
                    rep.mismatches.push_back("cover " + name(mu) + " > " + name(s.to) + " via a root outside the candidate set");
                    continue;
                }
                const ElementId w = cs_->rep(s.to.rep);
                const Root beta = grp.act(grp.inverse(w), s.xi_finite);
                auto bk = rs.positive_index(beta);
                auto e = bk ? graph.edge(s.to.rep, static_cast<std::uint32_t>(*bk)) : std::nullopt;
                const EdgeKind want = finite_kind ? EdgeKind::Bruhat : EdgeKind::Quantum;
                if (!e || e->target != mu.rep || e->kind != want)
                    rep.mismatches.push_back("cover " + name(mu) + " > " + name(s.to) + " has no matching " +
                                             to_string(want) + " edge");
            }
        }
        rep.edges = graph.edges().size();
        for (const auto& e : graph.edges()) {
            const ElementId w = cs_->rep(e.source);
            const Root xi = grp.act(w, rs.root(e.label));
            const Int xd = e.kind == EdgeKind::Quantum ? 1 : 0;
            const Int q = pair(shape_.classical, rs.coroot(e.label));
            if (xd == 0 && !rs.positive_index(xi)) {
                rep.mismatches.push_back("Bruhat edge with a negative reflecting root");
                continue;
            }
            for (Int n = -window_; n <= window_; ++n) {
                if (n % lattice_ != 0) continue;
                AffineOrbitElement nu{e.source, n};
                AffineOrbitElement mu{lookup(reflect_by(finite(nu), xi)), n - q * xd};
                if (!in_window(mu)) {
                    ++rep.skipped;
                    continue;
                }
                ++rep.edge_checks;
                if (mu.rep != e.target || is_cover(mu, nu) != Verdict::Pass)
                    rep.mismatches.push_back("edge image " + name(mu) + " > " + name(nu) + " is not a cover");
            }
        }
        return rep;
    }

private:
    const RootSystem& roots() const { return cs_->group().roots(); }

    Vertex lookup(const Weight& w) const {
        auto v = rep_of(w);
        if (!v) throw InvariantViolation("reflected weight left the orbit");
        return *v;
    }

    Weight reflect_by(const Weight& w, const Root& r) const {
        const auto& rs = roots();
        auto k = rs.positive_index(r);
        if (!k) k = rs.positive_index(-r);
        if (!k) throw InvariantViolation("not a root");
        return rs.reflect(w, *k);
    }

    std::size_t levels() const { return static_cast<std::size_t>(std::max<Int>(0, 2 * window_ + 1)); }
    std::size_t index(const AffineOrbitElement& e) const {
        return static_cast<std::size_t>(e.delta + window_) * weights_.size() + e.rep;
    }

    /// Longest chain length from every slice element down to nu; -1 where none exists.
    std::shared_ptr<const std::vector<int>> longest_to(const AffineOrbitElement& nu) const {
        const std::size_t key = index(nu);
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        const std::size_t total = levels() * weights_.size();
        auto table = std::make_shared<std::vector<int>>(total, -2);
        std::function<int(const AffineOrbitElement&)> walk = [&](const AffineOrbitElement& a) -> int {
            int& slot = (*table)[index(a)];
            if (slot != -2) return slot;
            if (a == nu) return slot = 0;
            int best = -1;
            for (const auto& s : steps(a, nu.delta)) {
                if (!in_window(s.to)) continue;
                int d = walk(s.to);
                if (d >= 0) best = std::max(best, d + 1);
            }
            return (*table)[index(a)] = best;
        };
        for (Int n = -window_; n <= window_; ++n)
            for (Vertex v = 0; v < weights_.size(); ++v) walk({v, n});
        std::lock_guard lock(mutex_);
        return memo_.emplace(key, std::move(table)).first->second;
    }

    const CosetSystem* cs_;
    LevelZeroShape shape_;
    Int window_;
    Int lattice_;
    std::vector<Weight> weights_;
    std::map<IntVec, Vertex> by_weight_;
    mutable std::mutex mutex_;
    mutable std::map<std::size_t, std::shared_ptr<const std::vector<int>>> memo_;
};

}  // namespace qbruhat
