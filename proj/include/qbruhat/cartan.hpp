#pragma once

// Finite root systems of simple type, exact integer pairings, and the
// level-zero shape data (Lambda, J) derived from a dominant weight.
//
// Coordinates:
//   Root    - simple-root basis  (alpha_1 .. alpha_n)
//   Coroot  - simple-coroot basis (alpha_1^v .. alpha_n^v)
//   Weight  - fundamental-weight basis (omega_1 .. omega_n)
// so <Weight, Coroot> is a plain dot product. Index 0 internally is node 1
// of the Dynkin diagram (Kac numbering); user-facing output is 1-based.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbruhat/error.hpp"
#include "qbruhat/rational.hpp"

namespace qbruhat {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

/// Bitmask over Dynkin nodes (bit j set = node j+1).
using NodeMask = std::uint32_t;

inline bool has_node(NodeMask m, int j) { return (m >> j) & 1U; }

/// Integer vector tagged with the basis it is expressed in.
template <class Tag>
struct LatticeVector {
    IntVec coords;

    LatticeVector() = default;
    explicit LatticeVector(IntVec c) : coords(std::move(c)) {}
    static LatticeVector zero(int rank) { return LatticeVector(IntVec(static_cast<std::size_t>(rank), 0)); }

    int rank() const { return static_cast<int>(coords.size()); }
    Int operator[](std::size_t i) const { return coords[i]; }
    Int& operator[](std::size_t i) { return coords[i]; }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](Int v) { return v == 0; });
    }

    LatticeVector& operator+=(const LatticeVector& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = detail::checked_add(coords[i], o.coords[i]);
        return *this;
    }
    LatticeVector& operator-=(const LatticeVector& o) {
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = detail::checked_sub(coords[i], o.coords[i]);
        return *this;
    }
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator*(Int k, LatticeVector a) {
        for (auto& c : a.coords) c = detail::checked_mul(k, c);
        return a;
    }
    LatticeVector operator-() const { return Int{-1} * *this; }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) { return a.coords <=> b.coords; }

    friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
        os << '(';
        for (std::size_t i = 0; i < v.coords.size(); ++i) os << (i ? "," : "") << v.coords[i];
        return os << ')';
    }
};

struct RootTag {};
struct CorootTag {};
struct WeightTag {};

using Root = LatticeVector<RootTag>;
using Coroot = LatticeVector<CorootTag>;
using Weight = LatticeVector<WeightTag>;

/// <w, c> for a weight in the omega-basis and a coroot in the alpha^v-basis.
inline Int pair(const Weight& w, const Coroot& c) {
    Int s = 0;
    for (std::size_t i = 0; i < w.coords.size(); ++i)
        s = detail::checked_add(s, detail::checked_mul(w.coords[i], c.coords[i]));
    return s;
}

// ---------------------------------------------------------------------------

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct FiniteType {
    Family family = Family::A;
    int rank = 1;

    bool valid() const {
        switch (family) {
            case Family::A: return rank >= 1 && rank <= 8;
            case Family::B:
            case Family::C: return rank >= 2 && rank <= 8;
            case Family::D: return rank >= 4 && rank <= 8;
            case Family::E: return rank >= 6 && rank <= 8;
            case Family::F: return rank == 4;
            case Family::G: return rank == 2;
        }
        return false;
    }

    std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

    /// Parses "A2", "c3", "E8" ...; throws InvalidInput on unknown or invalid types.
    static FiniteType parse(std::string_view text) {
        if (text.size() < 2) throw InvalidInput("bad Cartan type '" + std::string(text) + "'");
        char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
        if (f < 'A' || f > 'G') throw InvalidInput("unknown Cartan family '" + std::string(1, text[0]) + "'");
        int r = 0;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9') throw InvalidInput("bad Cartan type '" + std::string(text) + "'");
            r = r * 10 + (c - '0');
            if (r > 100) break;
        }
        FiniteType t{static_cast<Family>(f), r};
        if (!t.valid()) throw InvalidInput("invalid rank for type '" + std::string(text) + "'");
        return t;
    }

    friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

/// Order of the Weyl group from the classical closed formulas.
inline std::uint64_t weyl_group_order(FiniteType t) {
    auto fact = [](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    switch (t.family) {
        case Family::A: return fact(t.rank + 1);
        case Family::B:
        case Family::C: return (std::uint64_t{1} << t.rank) * fact(t.rank);
        case Family::D: return (std::uint64_t{1} << (t.rank - 1)) * fact(t.rank);
        case Family::E: return t.rank == 6 ? 51840ULL : t.rank == 7 ? 2903040ULL : 696729600ULL;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

namespace detail {

/// Symmetric Gram matrix (alpha_i, alpha_j) in the Kac Table Aff 1 numbering.
inline std::vector<IntVec> gram_matrix(FiniteType t) {
    const int n = t.rank;
    std::vector<IntVec> b(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
    auto link = [&](int i, int j, Int v) { b[i][j] = b[j][i] = v; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::B:  // alpha_n short
            for (int i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 4 : 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
            break;
        case Family::C:  // alpha_n long
            for (int i = 0; i < n; ++i) b[i][i] = i + 1 < n ? 2 : 4;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            break;
        case Family::D:
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case Family::E: {
            for (int i = 0; i < n; ++i) b[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            // branch node: 3 for E6/E7, 5 for E8 (1-based)
            int branch = n == 8 ? 4 : 2;
            link(branch, n - 1, -1);
            break;
        }
        case Family::F:  // 1 - 2 => 3 - 4
            b[0][0] = b[1][1] = 4;
            b[2][2] = b[3][3] = 2;
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            break;
        case Family::G:  // alpha_1 long, alpha_2 short
            b[0][0] = 6;
            b[1][1] = 2;
            link(0, 1, -3);
            break;
    }
    return b;
}

}  // namespace detail

/**
 * Positive roots, coroots, the Cartan matrix, theta and rho of a finite
 * root system. Immutable after construction.
 */
class RootSystem {
public:
    explicit RootSystem(FiniteType t) : type_(t) {
        if (!t.valid()) throw InvalidInput("invalid rank for family " + std::string(1, static_cast<char>(t.family)));
        gram_ = detail::gram_matrix(t);
        const int n = t.rank;
        cartan_.assign(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[j][j];
        build_positive_roots();
    }

    const FiniteType& type() const { return type_; }
    int rank() const { return type_.rank; }

    /// cartan(i, j) = <alpha_i, alpha_j^v>.
    Int cartan(int i, int j) const { return cartan_[i][j]; }
    const std::vector<IntVec>& cartan_matrix() const { return cartan_; }

    /// (alpha_i, alpha_j) in the normalisation where the shortest root has square length 2.
    Int gram(int i, int j) const { return gram_[i][j]; }

    std::size_t num_positive_roots() const { return roots_.size(); }
    const std::vector<Root>& positive_roots() const { return roots_; }
    const std::vector<Coroot>& positive_coroots() const { return coroots_; }
    const Root& root(std::size_t k) const { return roots_[k]; }
    const Coroot& coroot(std::size_t k) const { return coroots_[k]; }
    Int height(std::size_t k) const { return std::accumulate(roots_[k].coords.begin(), roots_[k].coords.end(), Int{0}); }

    std::size_t highest_root() const { return theta_; }
    /// rho = sum of fundamental weights.
    Weight rho() const { return Weight(IntVec(static_cast<std::size_t>(rank()), 1)); }

    /// Index of the simple root alpha_j among the positive roots.
    std::size_t simple_root_index(int j) const { return simple_index_[static_cast<std::size_t>(j)]; }

    /// Index of a positive root, or nullopt if `r` is not a positive root.
    std::optional<std::size_t> positive_index(const Root& r) const {
        auto it = index_.find(r.coords);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Signed lookup: (index, +1) for positive roots, (index, -1) for negatives.
    std::optional<std::pair<std::size_t, int>> signed_index(const Root& r) const {
        if (auto k = positive_index(r)) return std::make_pair(*k, 1);
        if (auto k = positive_index(-r)) return std::make_pair(*k, -1);
        return std::nullopt;
    }

    Int norm2(const Root& r) const {
        Int s = 0;
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) s += r[i] * gram_[i][j] * r[j];
        return s;
    }

    Coroot to_coroot(const Root& r) const {
        Int len = norm2(r);
        if (len <= 0) throw InvalidInput("coroot of the zero vector");
        Coroot c = Coroot::zero(rank());
        for (int i = 0; i < rank(); ++i) {
            Int num = r[i] * gram_[i][i];
            if (num % len != 0) throw InvariantViolation("non-integral coroot coordinate");
            c[i] = num / len;
        }
        return c;
    }

    Weight to_weight(const Root& r) const {
        Weight w = Weight::zero(rank());
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) w[j] = detail::checked_add(w[j], detail::checked_mul(r[i], cartan_[i][j]));
        return w;
    }

    /// Expresses a weight in the simple-root basis (exact, generally fractional).
    std::vector<Rational> weight_to_root_coords(const Weight& w) const;

    Int pair(const Root& r, const Coroot& c) const { return qbruhat::pair(to_weight(r), c); }

    /// w - <w, beta^v> beta for the positive root with index k.
    Weight reflect(const Weight& w, std::size_t k) const {
        Int p = qbruhat::pair(w, coroots_[k]);
        if (p == 0) return w;
        return w - p * to_weight(roots_[k]);
    }

    Root reflect(const Root& r, std::size_t k) const {
        Int p = pair(r, coroots_[k]);
        if (p == 0) return r;
        return r - p * roots_[k];
    }

    /// Positive roots whose support lies inside J.
    std::vector<std::size_t> parabolic_roots(NodeMask J) const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < roots_.size(); ++k)
            if (in_parabolic(k, J)) out.push_back(k);
        return out;
    }
    bool in_parabolic(std::size_t k, NodeMask J) const {
        for (int i = 0; i < rank(); ++i)
            if (roots_[k][i] != 0 && !has_node(J, i)) return false;
        return true;
    }

private:
    void build_positive_roots();

    FiniteType type_;
    std::vector<IntVec> gram_;
    std::vector<IntVec> cartan_;
    std::vector<Root> roots_;
    std::vector<Coroot> coroots_;
    std::vector<std::size_t> simple_index_;
    std::map<IntVec, std::size_t> index_;
    std::size_t theta_ = 0;
};

inline void RootSystem::build_positive_roots() {
    // Layer by height using root strings: for a root beta of height h and a
    // simple alpha_i, beta + alpha_i is a root iff p - <beta, alpha_i^v> > 0
    // where p is the largest integer with beta - p alpha_i a root.
    const int n = rank();
    std::map<IntVec, bool> seen;
    std::vector<Root> layer;
    for (int i = 0; i < n; ++i) {
        Root a = Root::zero(n);
        a[i] = 1;
        layer.push_back(a);
        seen[a.coords] = true;
    }
    std::vector<Root> all;
    while (!layer.empty()) {
        std::vector<Root> next;
        for (const auto& beta : layer) {
            all.push_back(beta);
            Weight bw = to_weight(beta);
            for (int i = 0; i < n; ++i) {
                Int p = 0;
                Root down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!seen.count(down.coords)) break;
                    ++p;
                }
                if (p - bw[i] > 0) {
                    Root up = beta;
                    up[i] += 1;
                    if (!seen.count(up.coords)) {
                        seen[up.coords] = true;
                        next.push_back(up);
                    }
                }
            }
        }
        layer = std::move(next);
    }
    // height ascending, then lexicographically descending coordinates
    std::stable_sort(all.begin(), all.end(), [](const Root& a, const Root& b) {
        Int ha = std::accumulate(a.coords.begin(), a.coords.end(), Int{0});
        Int hb = std::accumulate(b.coords.begin(), b.coords.end(), Int{0});
        if (ha != hb) return ha < hb;
        return a.coords > b.coords;
    });
    roots_ = std::move(all);
    coroots_.clear();
    for (std::size_t k = 0; k < roots_.size(); ++k) {
        index_[roots_[k].coords] = k;
        coroots_.push_back(to_coroot(roots_[k]));
    }
    simple_index_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Root a = Root::zero(n);
        a[i] = 1;
        simple_index_[static_cast<std::size_t>(i)] = index_.at(a.coords);
    }
    theta_ = roots_.size() - 1;
    if (roots_.size() >= 2 && height(roots_.size() - 2) == height(theta_))
        throw InvariantViolation("highest root is not unique");
}

inline std::vector<Rational> RootSystem::weight_to_root_coords(const Weight& w) const {
    // Solve x^T C = w^T, i.e. C^T x = w, by Gauss-Jordan over Q.
    const int n = rank();
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m[r][c] = Rational(cartan_[c][r]);
        m[r][n] = Rational(w[r]);
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (m[piv][col].is_zero()) ++piv;
        std::swap(m[piv], m[col]);
        Rational inv = Rational(1) / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<Rational> out(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) out[r] = m[r][n];
    return out;
}

// ---------------------------------------------------------------------------

/**
 * A level-zero dominant weight lambda = sum m_i varpi_i, its classical part
 * Lambda = cl(lambda) and the parabolic set J = { j : <Lambda, alpha_j^v> = 0 }.
 */
struct LevelZeroShape {
    IntVec multiplicities;
    Weight classical;
    NodeMask parabolic = 0;

    /// gcd of the multiplicities; the delta-coefficients of W.lambda lie in gcd * Z.
    Int delta_lattice() const {
        Int g = 0;
        for (Int m : multiplicities) g = std::gcd(g, m);
        return g;
    }

    /// Largest <Lambda, beta^v> over all positive roots.
    Int max_pairing(const RootSystem& rs) const {
        Int best = 0;
        for (const auto& c : rs.positive_coroots()) best = std::max(best, pair(classical, c));
        return best;
    }
};

inline LevelZeroShape compute_shape(const RootSystem& rs, std::span<const Int> multiplicities) {
    if (static_cast<int>(multiplicities.size()) != rs.rank())
        throw InvalidInput("expected " + std::to_string(rs.rank()) + " multiplicities, got " +
                           std::to_string(multiplicities.size()));
    bool any = false;
    for (Int m : multiplicities) {
        if (m < 0) throw InvalidInput("multiplicities must be nonnegative");
        any = any || m > 0;
    }
    if (!any) throw InvalidInput("lambda = 0 is not an admissible shape");
    LevelZeroShape s;
    s.multiplicities.assign(multiplicities.begin(), multiplicities.end());
    s.classical = Weight(s.multiplicities);
    for (int j = 0; j < rs.rank(); ++j)
        if (s.classical[j] == 0) s.parabolic |= NodeMask{1} << j;
    return s;
}

/// Reflection of a weight through the positive root with index k.
inline Weight reflect_weight(const RootSystem& rs, const Weight& w, std::size_t k) { return rs.reflect(w, k); }

inline std::string format_nodes(NodeMask m, int rank) {
    std::string s = "{";
    bool first = true;
    for (int j = 0; j < rank; ++j) {
        if (!has_node(m, j)) continue;
        s += (first ? "" : ",") + std::to_string(j + 1);
        first = false;
    }
    return s + "}";
}

}  // namespace qbruhat
