#pragma once

// Finite Weyl group enumeration, minimal coset representatives W^J and the
// projection w -> floor(w)_J.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qbruhat/cartan.hpp"

namespace qbruhat {

using ElementId = std::uint32_t;

struct WeylElement {
    ElementId id = 0;
    int length = 0;
    /// Simple reflection indices (0-based), discovered by BFS; not ShortLex.
    std::vector<int> reduced_word;
    /// Action on fundamental-weight coordinates, row-major rank x rank.
    IntVec action;
};

struct GroupLimits {
    /// Hard limit on |W_0|; larger groups are refused.
    std::uint64_t max_order = 50'000;
    /// Orders above this are accepted but flagged as large.
    std::uint64_t warn_order = 10'000;
};

namespace detail {

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (Int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace detail

/**
 * The finite Weyl group W_0, enumerated by breadth-first search from the
 * identity. Element ids are dense and follow discovery order, so lengths are
 * nondecreasing in id and the identity is id 0.
 */
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& rs, GroupLimits limits = {}) : rs_(&rs) {
        const std::uint64_t order = weyl_group_order(rs.type());
        if (order > limits.max_order)
            throw CapExceeded("Weyl group of " + rs.type().name() + " has order " + std::to_string(order) +
                              ", above the enumeration cap " + std::to_string(limits.max_order));
        large_ = order > limits.warn_order;
        enumerate();
        if (elements_.size() != order)
            throw InvariantViolation("Weyl group enumeration produced " + std::to_string(elements_.size()) +
                                     " elements, expected " + std::to_string(order));
    }

    const RootSystem& roots() const { return *rs_; }
    std::size_t size() const { return elements_.size(); }
    bool large() const { return large_; }
    const WeylElement& element(ElementId id) const { return elements_[id]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    int length(ElementId id) const { return elements_[id].length; }
    ElementId identity() const { return 0; }
    ElementId longest() const { return static_cast<ElementId>(elements_.size() - 1); }

    ElementId right_simple(ElementId w, int i) const { return right_[w * rank() + i]; }
    ElementId left_simple(int i, ElementId w) const { return left_[w * rank() + i]; }

    ElementId multiply(ElementId a, ElementId b) const {
        for (int i : elements_[b].reduced_word) a = right_simple(a, i);
        return a;
    }
    ElementId inverse(ElementId w) const { return inverse_[w]; }

    ElementId from_word(std::span<const int> word) const {
        ElementId w = identity();
        for (int i : word) {
            if (i < 0 || i >= rank()) throw InvalidInput("generator index out of range: " + std::to_string(i + 1));
            w = right_simple(w, i);
        }
        return w;
    }

    /// The reflection r_beta for the positive root with index k.
    ElementId reflection(std::size_t k) const { return reflection_[k]; }

    /// Signed root numbering: r < N is positive root r, r >= N is -(root r-N).
    std::size_t num_signed_roots() const { return 2 * rs_->num_positive_roots(); }
    std::size_t act_on_root(ElementId w, std::size_t signed_root) const {
        return root_image_[w * num_signed_roots() + signed_root];
    }
    bool is_positive_signed(std::size_t r) const { return r < rs_->num_positive_roots(); }

    Weight act(ElementId w, const Weight& x) const {
        const int n = rank();
        const auto& m = elements_[w].action;
        Weight out = Weight::zero(n);
        for (int r = 0; r < n; ++r) {
            Int s = 0;
            for (int c = 0; c < n; ++c) s = detail::checked_add(s, detail::checked_mul(m[r * n + c], x[c]));
            out[r] = s;
        }
        return out;
    }

    /// Applies w to a root given in simple-root coordinates.
    Root act(ElementId w, const Root& beta) const {
        Root r = beta;
        const auto& word = elements_[w].reduced_word;
        for (auto it = word.rbegin(); it != word.rend(); ++it) r = rs_->reflect(r, rs_->simple_root_index(*it));
        return r;
    }

    /// Finds the element acting on weights by the given matrix, if any.
    std::optional<ElementId> find(const IntVec& action) const {
        auto it = by_action_.find(action);
        if (it == by_action_.end()) return std::nullopt;
        return it->second;
    }

private:
    int rank() const { return rs_->rank(); }

    void enumerate();

    const RootSystem* rs_;
    bool large_ = false;
    std::vector<WeylElement> elements_;
    std::unordered_map<IntVec, ElementId, detail::IntVecHash> by_action_;
    std::vector<ElementId> right_;
    std::vector<ElementId> left_;
    std::vector<ElementId> inverse_;
    std::vector<ElementId> reflection_;
    std::vector<std::uint16_t> root_image_;
};

inline void WeylGroup::enumerate() {
    const int n = rank();
    const std::size_t nn = static_cast<std::size_t>(n) * n;

    // simple reflection matrices: (s_i x)_k = x_k - x_i <alpha_i, alpha_k^v>
    std::vector<IntVec> simple(static_cast<std::size_t>(n), IntVec(nn, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            simple[i][k * n + k] += 1;
            simple[i][k * n + i] -= rs_->cartan(i, k);
        }
    auto matmul = [&](const IntVec& a, const IntVec& b) {
        IntVec c(nn, 0);
        for (int r = 0; r < n; ++r)
            for (int k = 0; k < n; ++k) {
                Int v = a[r * n + k];
                if (v == 0) continue;
                for (int col = 0; col < n; ++col) c[r * n + col] += v * b[k * n + col];
            }
        return c;
    };

    IntVec ident(nn, 0);
    for (int i = 0; i < n; ++i) ident[i * n + i] = 1;
    elements_.push_back(WeylElement{0, 0, {}, ident});
    by_action_.emplace(ident, 0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (int i = 0; i < n; ++i) {
            IntVec m = matmul(elements_[head].action, simple[i]);
            if (by_action_.count(m)) continue;
            WeylElement e;
            e.id = static_cast<ElementId>(elements_.size());
            e.length = elements_[head].length + 1;
            e.reduced_word = elements_[head].reduced_word;
            e.reduced_word.push_back(i);
            e.action = std::move(m);
            by_action_.emplace(e.action, e.id);
            elements_.push_back(std::move(e));
        }
    }

    const std::size_t total = elements_.size();
    right_.assign(total * n, 0);
    left_.assign(total * n, 0);
    for (std::size_t w = 0; w < total; ++w)
        for (int i = 0; i < n; ++i) {
            right_[w * n + i] = by_action_.at(matmul(elements_[w].action, simple[i]));
            left_[w * n + i] = by_action_.at(matmul(simple[i], elements_[w].action));
        }
    inverse_.assign(total, 0);
    for (std::size_t w = 0; w < total; ++w) {
        ElementId x = identity();
        const auto& word = elements_[w].reduced_word;
        for (auto it = word.rbegin(); it != word.rend(); ++it) x = right_simple(x, *it);
        inverse_[w] = x;
    }

    // roots as weights, for the signed root action table
    const std::size_t np = rs_->num_positive_roots();
    std::unordered_map<IntVec, std::size_t, detail::IntVecHash> root_by_weight;
    std::vector<Weight> root_weights(2 * np);
    for (std::size_t k = 0; k < np; ++k) {
        root_weights[k] = rs_->to_weight(rs_->root(k));
        root_weights[np + k] = -root_weights[k];
        root_by_weight.emplace(root_weights[k].coords, k);
        root_by_weight.emplace(root_weights[np + k].coords, np + k);
    }
    root_image_.assign(total * 2 * np, 0);
    for (std::size_t w = 0; w < total; ++w) {
        int inversions = 0;
        for (std::size_t r = 0; r < 2 * np; ++r) {
            auto img = root_by_weight.at(act(static_cast<ElementId>(w), root_weights[r]).coords);
            root_image_[w * 2 * np + r] = static_cast<std::uint16_t>(img);
            if (r < np && img >= np) ++inversions;
        }
        if (inversions != elements_[w].length)
            throw InvariantViolation("BFS depth disagrees with inversion count");
    }

    reflection_.assign(np, 0);
    for (std::size_t k = 0; k < np; ++k) {
        const Weight bw = root_weights[k];
        const Coroot& bc = rs_->coroot(k);
        IntVec m = ident;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m[r * n + c] -= bw[r] * bc[c];
        reflection_[k] = by_action_.at(m);
    }
}

// ---------------------------------------------------------------------------

/**
 * Minimal-length coset representatives W^J for W_0 / W_{0,J} and the
 * canonical projection. Representatives are numbered densely ("rep ids") in
 * increasing element id.
 */
class CosetSystem {
public:
    CosetSystem(const WeylGroup& group, NodeMask J) : group_(&group), J_(J) {
        const auto& rs = group.roots();
        const std::size_t total = group.size();
        proj_.assign(total, 0);
        rep_of_element_.assign(total, -1);
        for (ElementId w = 0; w < total; ++w) {
            if (is_minimal(w)) {
                rep_of_element_[w] = static_cast<int>(reps_.size());
                reps_.push_back(w);
            }
        }
        for (ElementId w = 0; w < total; ++w) {
            ElementId x = w;
            bool moved = true;
            while (moved) {
                moved = false;
                for (int j = 0; j < rs.rank(); ++j) {
                    if (!has_node(J, j)) continue;
                    if (!group.is_positive_signed(group.act_on_root(x, rs.simple_root_index(j)))) {
                        x = group.right_simple(x, j);
                        moved = true;
                    }
                }
            }
            proj_[w] = x;
        }
        std::size_t parabolic = 0;
        for (ElementId w = 0; w < total; ++w)
            if (proj_[w] == group.identity()) ++parabolic;
        parabolic_order_ = parabolic;
        if (reps_.size() * parabolic_order_ != total)
            throw InvariantViolation("coset count times parabolic order differs from |W_0|");
    }

    const WeylGroup& group() const { return *group_; }
    NodeMask J() const { return J_; }
    std::size_t size() const { return reps_.size(); }
    std::size_t parabolic_order() const { return parabolic_order_; }

    const std::vector<ElementId>& reps() const { return reps_; }
    ElementId rep(std::size_t rep_id) const { return reps_[rep_id]; }

    /// floor(w)_J as an element id.
    ElementId project(ElementId w) const { return proj_[w]; }
    /// floor(w)_J as a rep id.
    std::size_t project_index(ElementId w) const { return static_cast<std::size_t>(rep_of_element_[proj_[w]]); }

    bool is_rep(ElementId w) const { return rep_of_element_[w] >= 0; }
    std::optional<std::size_t> rep_index(ElementId w) const {
        if (rep_of_element_[w] < 0) return std::nullopt;
        return static_cast<std::size_t>(rep_of_element_[w]);
    }

private:
    bool is_minimal(ElementId w) const {
        const auto& rs = group_->roots();
        for (int j = 0; j < rs.rank(); ++j)
            if (has_node(J_, j) && !group_->is_positive_signed(group_->act_on_root(w, rs.simple_root_index(j))))
                return false;
        return true;
    }

    const WeylGroup* group_;
    NodeMask J_;
    std::vector<ElementId> reps_;
    std::vector<ElementId> proj_;
    std::vector<int> rep_of_element_;
    std::size_t parabolic_order_ = 0;
};

// ---------------------------------------------------------------------------
// Reduced-word text form: "s1 s2 s1", "e" for the identity.

inline std::string format_word(const WeylGroup& g, ElementId w) {
    const auto& word = g.element(w).reduced_word;
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " s" : "s") + std::to_string(word[i] + 1);
    return s;
}

enum class WordCheck { Any, Reduced };

/// Accepts "e", "w0", or generators written as "s2", "r2" or "2", separated by spaces.
/// With WordCheck::Reduced the word must be a reduced expression.
inline ElementId parse_word(const WeylGroup& g, std::string_view text, WordCheck check = WordCheck::Any) {
    std::istringstream in{std::string(text)};
    std::string tok;
    std::vector<int> word;
    bool any = false;
    while (in >> tok) {
        any = true;
        if (tok == "e") continue;
        if (tok == "w0") {
            const auto& lw = g.element(g.longest()).reduced_word;
            word.insert(word.end(), lw.begin(), lw.end());
            continue;
        }
        std::string_view digits = tok;
        if (!digits.empty() && (digits[0] == 's' || digits[0] == 'r')) digits.remove_prefix(1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InvalidInput("bad generator '" + tok + "' in word '" + std::string(text) + "'");
        word.push_back(std::stoi(std::string(digits)) - 1);
    }
    if (!any) throw InvalidInput("empty Weyl group word");
    const ElementId w = g.from_word(word);
    if (check == WordCheck::Reduced && static_cast<std::size_t>(g.length(w)) != word.size())
        throw InvalidInput("'" + std::string(text) + "' is not a reduced word");
    return w;
}

}  // namespace qbruhat
