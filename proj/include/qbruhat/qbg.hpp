#pragma once

// Parabolic quantum Bruhat graph on W^J: edge classification, shortest
// directed paths (optionally restricted to sigma-admissible labels), path
// weights and bounded exhaustive path enumeration.
//
// Orientation: an edge w --beta--> floor(w r_beta). A directed path "from y
// to x" is stored as vertices x = w_0, w_1, ..., w_n = y with edges
// w_k --beta_k--> w_{k-1}.

#include <bitset>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qbruhat/cartan.hpp"
#include "qbruhat/rational.hpp"
#include "qbruhat/weyl.hpp"

namespace qbruhat {

using Vertex = std::uint32_t;
using LabelMask = std::bitset<128>;

enum class EdgeKind : std::uint8_t { Bruhat, Quantum };

inline const char* to_string(EdgeKind k) { return k == EdgeKind::Bruhat ? "bruhat" : "quantum"; }

struct QBGEdge {
    Vertex source = 0;
    Vertex target = 0;
    /// Index of beta among the positive roots of the root system.
    std::uint32_t label = 0;
    EdgeKind kind = EdgeKind::Bruhat;

    friend bool operator==(const QBGEdge&, const QBGEdge&) = default;
};

struct DirectedPath {
    /// x = vertices.front(), y = vertices.back().
    std::vector<Vertex> vertices;
    std::vector<std::uint32_t> labels;
    std::vector<EdgeKind> kinds;

    std::size_t length() const { return labels.size(); }
    bool empty() const { return labels.empty(); }
    Vertex source() const { return vertices.back(); }
    Vertex target() const { return vertices.front(); }

    friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

/// Order in which equally short continuations are preferred.
enum class TieBreak { Forward, Reverse };

struct SigmaPathResult {
    std::optional<DirectedPath> path;
    /// True iff the path exists and its length equals the unrestricted distance.
    bool shortest = false;
};

/**
 * The parabolic quantum Bruhat graph. Immutable after construction except
 * for internal distance caches, which are guarded and safe to share.
 */
class PQBG {
public:
    explicit PQBG(const CosetSystem& cs);

    PQBG(const PQBG&) = delete;
    PQBG& operator=(const PQBG&) = delete;

    const CosetSystem& cosets() const { return *cs_; }
    const WeylGroup& group() const { return cs_->group(); }
    const RootSystem& roots() const { return cs_->group().roots(); }

    std::size_t num_vertices() const { return cs_->size(); }
    ElementId element(Vertex v) const { return cs_->rep(v); }
    std::optional<Vertex> vertex_of(ElementId w) const {
        auto r = cs_->rep_index(w);
        if (!r) return std::nullopt;
        return static_cast<Vertex>(*r);
    }

    /// Positive roots outside the parabolic subsystem, ascending.
    const std::vector<std::uint32_t>& labels() const { return labels_; }
    LabelMask all_labels() const { return all_labels_; }

    const std::vector<QBGEdge>& edges() const { return edges_; }
    /// Out-edges sorted by (target, label).
    const std::vector<QBGEdge>& out_edges(Vertex v) const { return out_[v]; }
    /// In-edges sorted by (source, label).
    const std::vector<QBGEdge>& in_edges(Vertex v) const { return in_[v]; }
    std::optional<QBGEdge> edge(Vertex source, std::uint32_t label) const {
        for (const auto& e : out_[source])
            if (e.label == label) return e;
        return std::nullopt;
    }

    std::size_t count(EdgeKind k) const {
        std::size_t c = 0;
        for (const auto& e : edges_) c += e.kind == k;
        return c;
    }

    /// 2 rho_J in the fundamental-weight basis.
    const Weight& twice_rho_J() const { return twice_rho_J_; }
    /// 2 <rho - rho_J, beta^v> for the positive root with index k.
    Int twice_rho_gap(std::size_t k) const {
        const Coroot& c = roots().coroot(k);
        return 2 * pair(roots().rho(), c) - pair(twice_rho_J_, c);
    }

    /// Labels beta with sigma <Lambda, beta^v> integral.
    LabelMask admissible_labels(const Rational& sigma, const Weight& lambda) const {
        LabelMask m;
        for (auto k : labels_)
            if ((sigma * Rational(pair(lambda, roots().coroot(k)))).is_integer()) m.set(k);
        return m;
    }

    /// BFS distance from every vertex to x using only edges whose labels are in `mask`; -1 if unreachable.
    std::shared_ptr<const std::vector<int>> distances_to(Vertex x, const LabelMask& mask) const;
    std::shared_ptr<const std::vector<int>> distances_to(Vertex x) const { return distances_to(x, all_labels_); }

    /// Length of a shortest directed path from y to x.
    int directed_distance(Vertex x, Vertex y) const { return (*distances_to(x))[y]; }

    /// A shortest path from y to x within the label mask, or nullopt if none exists.
    std::optional<DirectedPath> shortest_path(Vertex x, Vertex y, const LabelMask& mask,
                                              TieBreak tie = TieBreak::Forward) const;
    DirectedPath shortest_path(Vertex x, Vertex y, TieBreak tie = TieBreak::Forward) const {
        return *shortest_path(x, y, all_labels_, tie);
    }

    /// Shortest directed sigma-path from y to x; `shortest` reports whether it
    /// realises the unrestricted distance. sigma must lie strictly in (0, 1).
    SigmaPathResult sigma_path(Vertex x, Vertex y, const Rational& sigma, const Weight& lambda,
                               TieBreak tie = TieBreak::Forward) const;

    /// Every simple directed path from y to x of length <= max_len within the
    /// label mask. Throws CapExceeded past `cap` paths.
    std::vector<DirectedPath> all_paths_up_to(Vertex x, Vertex y, std::size_t max_len, const LabelMask& mask,
                                              std::size_t cap = 100'000) const;
    std::vector<DirectedPath> all_paths_up_to(Vertex x, Vertex y, std::size_t max_len) const {
        return all_paths_up_to(x, y, max_len, all_labels_);
    }

    /// True iff consecutive (vertex, label) pairs are edges of the graph with the recorded kinds.
    bool is_path(const DirectedPath& p) const;

    bool strongly_connected() const;

private:
    const CosetSystem* cs_;
    std::vector<std::uint32_t> labels_;
    LabelMask all_labels_;
    std::vector<QBGEdge> edges_;
    std::vector<std::vector<QBGEdge>> out_;
    std::vector<std::vector<QBGEdge>> in_;
    Weight twice_rho_J_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<Vertex, std::string>, std::shared_ptr<const std::vector<int>>> cache_;
};

inline PQBG::PQBG(const CosetSystem& cs) : cs_(&cs) {
    const auto& rs = roots();
    const auto& g = group();
    const NodeMask J = cs.J();
    if (rs.num_positive_roots() > LabelMask().size())
        throw CapExceeded("root system too large for the label mask");

    Root sum = Root::zero(rs.rank());
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        if (rs.in_parabolic(k, J)) {
            sum += rs.root(k);
        } else {
            labels_.push_back(static_cast<std::uint32_t>(k));
            all_labels_.set(k);
        }
    }
    twice_rho_J_ = rs.to_weight(sum);

    const std::size_t nv = cs.size();
    out_.assign(nv, {});
    in_.assign(nv, {});
    for (Vertex v = 0; v < nv; ++v) {
        const ElementId w = cs.rep(v);
        const int lw = g.length(w);
        for (auto k : labels_) {
            const ElementId t = cs.project(g.multiply(w, g.reflection(k)));
            const int lt = g.length(t);
            const bool bruhat = lt == lw + 1;
            const bool quantum = lt == lw - static_cast<int>(twice_rho_gap(k)) + 1;
            if (bruhat && quantum) throw InvariantViolation("edge satisfies both Bruhat and quantum conditions");
            if (!bruhat && !quantum) continue;
            QBGEdge e{v, static_cast<Vertex>(*cs.rep_index(t)), k, bruhat ? EdgeKind::Bruhat : EdgeKind::Quantum};
            edges_.push_back(e);
            out_[v].push_back(e);
            in_[e.target].push_back(e);
        }
    }
    for (auto& list : out_)
        std::sort(list.begin(), list.end(), [](const QBGEdge& a, const QBGEdge& b) {
            return std::tie(a.target, a.label) < std::tie(b.target, b.label);
        });
    for (auto& list : in_)
        std::sort(list.begin(), list.end(), [](const QBGEdge& a, const QBGEdge& b) {
            return std::tie(a.source, a.label) < std::tie(b.source, b.label);
        });
}

inline std::shared_ptr<const std::vector<int>> PQBG::distances_to(Vertex x, const LabelMask& mask) const {
    auto key = std::make_pair(x, mask.to_string());
    {
        std::lock_guard lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    auto dist = std::make_shared<std::vector<int>>(num_vertices(), -1);
    std::deque<Vertex> queue{x};
    (*dist)[x] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (const auto& e : in_[v]) {
            if (!mask.test(e.label) || (*dist)[e.source] >= 0) continue;
            (*dist)[e.source] = (*dist)[v] + 1;
            queue.push_back(e.source);
        }
    }
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(dist));
    return it->second;
}

inline std::optional<DirectedPath> PQBG::shortest_path(Vertex x, Vertex y, const LabelMask& mask,
                                                       TieBreak tie) const {
    auto dist = distances_to(x, mask);
    if ((*dist)[y] < 0) return std::nullopt;
    // walk y -> x, always stepping to a neighbour one closer to x
    std::vector<Vertex> walk{y};
    std::vector<std::uint32_t> labels;
    std::vector<EdgeKind> kinds;
    Vertex cur = y;
    while (cur != x) {
        const auto& out = out_[cur];
        const QBGEdge* pick = nullptr;
        auto consider = [&](const QBGEdge& e) {
            if (pick == nullptr && mask.test(e.label) && (*dist)[e.target] == (*dist)[cur] - 1) pick = &e;
        };
        if (tie == TieBreak::Forward)
            for (const auto& e : out) consider(e);
        else
            for (auto it = out.rbegin(); it != out.rend(); ++it) consider(*it);
        if (pick == nullptr) throw InvariantViolation("BFS distances inconsistent with adjacency");
        walk.push_back(pick->target);
        labels.push_back(pick->label);
        kinds.push_back(pick->kind);
        cur = pick->target;
    }
    DirectedPath p;
    p.vertices.assign(walk.rbegin(), walk.rend());
    p.labels.assign(labels.rbegin(), labels.rend());
    p.kinds.assign(kinds.rbegin(), kinds.rend());
    return p;
}

inline SigmaPathResult PQBG::sigma_path(Vertex x, Vertex y, const Rational& sigma, const Weight& lambda,
                                        TieBreak tie) const {
    if (sigma <= Rational(0) || sigma >= Rational(1))
        throw InvalidInput("sigma must lie strictly between 0 and 1, got " + sigma.str());
    SigmaPathResult r;
    r.path = shortest_path(x, y, admissible_labels(sigma, lambda), tie);
    r.shortest = r.path && static_cast<int>(r.path->length()) == directed_distance(x, y);
    return r;
}

inline std::vector<DirectedPath> PQBG::all_paths_up_to(Vertex x, Vertex y, std::size_t max_len,
                                                       const LabelMask& mask, std::size_t cap) const {
    std::vector<DirectedPath> found;
    std::vector<Vertex> walk{y};
    std::vector<const QBGEdge*> used;
    std::vector<char> on_walk(num_vertices(), 0);
    on_walk[y] = 1;

    auto emit = [&] {
        DirectedPath p;
        p.vertices.assign(walk.rbegin(), walk.rend());
        for (auto it = used.rbegin(); it != used.rend(); ++it) {
            p.labels.push_back((*it)->label);
            p.kinds.push_back((*it)->kind);
        }
        found.push_back(std::move(p));
        if (found.size() > cap) throw CapExceeded("all_paths_up_to exceeded " + std::to_string(cap) + " paths");
    };
    auto dfs = [&](auto&& self, Vertex cur) -> void {
        if (cur == x) {
            emit();
            return;
        }
        if (used.size() == max_len) return;
        for (const auto& e : out_[cur]) {
            if (!mask.test(e.label) || on_walk[e.target]) continue;
            on_walk[e.target] = 1;
            walk.push_back(e.target);
            used.push_back(&e);
            self(self, e.target);
            used.pop_back();
            walk.pop_back();
            on_walk[e.target] = 0;
        }
    };
    dfs(dfs, y);
    return found;
}

inline bool PQBG::is_path(const DirectedPath& p) const {
    if (p.vertices.size() != p.labels.size() + 1 || p.kinds.size() != p.labels.size()) return false;
    for (std::size_t k = 1; k < p.vertices.size(); ++k) {
        auto e = edge(p.vertices[k], p.labels[k - 1]);
        if (!e || e->target != p.vertices[k - 1] || e->kind != p.kinds[k - 1]) return false;
    }
    return true;
}

inline bool PQBG::strongly_connected() const {
    for (Vertex x = 0; x < num_vertices(); ++x) {
        auto d = distances_to(x);
        for (int v : *d)
            if (v < 0) return false;
    }
    return true;
}

/// wt(d): sum of beta^v over the quantum steps of the path.
inline Coroot path_weight(const RootSystem& rs, const DirectedPath& p) {
    Coroot wt = Coroot::zero(rs.rank());
    for (std::size_t k = 0; k < p.labels.size(); ++k)
        if (p.kinds[k] == EdgeKind::Quantum) wt += rs.coroot(p.labels[k]);
    return wt;
}

/// Graphviz rendering: solid arrows for Bruhat edges, dashed for quantum edges;
/// each edge carries "b<k> (root coords) [<Lambda, beta^v>]".
inline void write_dot(std::ostream& os, const PQBG& g, const Weight& lambda) {
    const auto& rs = g.roots();
    os << "digraph pqbg {\n";
    os << "  // type " << rs.type().name() << ", J = " << format_nodes(g.cosets().J(), rs.rank()) << "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        os << "  v" << v << " [label=\"" << format_word(g.group(), g.element(v)) << "\"];\n";
    for (const auto& e : g.edges()) {
        os << "  v" << e.source << " -> v" << e.target << " [label=\"b" << e.label + 1 << " " << rs.root(e.label)
           << " [" << pair(lambda, rs.coroot(e.label)) << "]\"";
        if (e.kind == EdgeKind::Quantum) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
}

}  // namespace qbruhat
