#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fitails/brackets.hpp"
#include "fitails/group_ring.hpp"
#include "fitails/injections.hpp"
#include "fitails/integer_linalg.hpp"
#include "fitails/numeric.hpp"
#include "fitails/shuffle.hpp"
#include "fitails/xi.hpp"

namespace fitails {

// A basis morphism of FJ(source, target): a level d >= max(source, target),
// an injection f: [target] -> [d], and a product of bracket-ordered blocks
// partitioning [d] \ im f (all blocks of size >= 2, sorted by minima).
class FJBasisElement {
  public:
    FJBasisElement(int source, int target, int level, Injection f,
                   std::vector<BracketBlock> blocks)
        : source_(source), target_(target), level_(level), f_(std::move(f)),
          blocks_(std::move(blocks)) {
        if (level_ < source_ || level_ < target_)
            throw std::invalid_argument("FJBasisElement: level below source or target");
        if (f_.domain_size() != target_ || f_.codomain_size() != level_)
            throw std::invalid_argument("FJBasisElement: injection must map [target] into [level]");
        std::vector<bool> covered(static_cast<std::size_t>(level_), false);
        for (std::int32_t v : f_.images()) covered[static_cast<std::size_t>(v - 1)] = true;
        std::int32_t prev_min = 0;
        for (const auto& block : blocks_) {
            detail::validate_block(block);
            if (block.size() < 2) throw std::invalid_argument("FJBasisElement: block of size < 2");
            if (block[0] <= prev_min)
                throw std::invalid_argument("FJBasisElement: blocks not sorted by minima");
            prev_min = block[0];
            for (std::int32_t v : block) {
                if (v < 1 || v > level_ || covered[static_cast<std::size_t>(v - 1)])
                    throw std::invalid_argument("FJBasisElement: blocks must partition [level] \\ im f");
                covered[static_cast<std::size_t>(v - 1)] = true;
            }
        }
        for (bool b : covered)
            if (!b) throw std::invalid_argument("FJBasisElement: blocks must partition [level] \\ im f");
    }

    static FJBasisElement identity(int ell) {
        return FJBasisElement(ell, ell, ell, Injection::identity(ell), {});
    }

    int source() const { return source_; }
    int target() const { return target_; }
    int level() const { return level_; }
    const Injection& f() const { return f_; }
    const std::vector<BracketBlock>& blocks() const { return blocks_; }

    // The signed word sum in ZS_level: the one-line word of f concatenated
    // with the expansion of the bracket product.
    GroupRingElement word_expansion() const {
        GroupRingElement out(level_);
        for (auto& t : detail::expand_blocks(blocks_)) {
            std::vector<std::int32_t> word = f_.images();
            word.insert(word.end(), t.word.begin(), t.word.end());
            out.add(Permutation(std::move(word)), t.sign);
        }
        return out;
    }

    friend bool operator==(const FJBasisElement& a, const FJBasisElement& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.level_ == b.level_ &&
               a.f_ == b.f_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const FJBasisElement& a, const FJBasisElement& b) {
        if (a.level_ != b.level_) return a.level_ < b.level_;
        if (!(a.f_ == b.f_)) return a.f_ < b.f_;
        return a.blocks_ < b.blocks_;
    }

    // e.g. "d=4 f=[3,1] blocks=[[2,4]]"
    std::string to_string() const {
        std::string s = "d=" + std::to_string(level_) + " f=" + f_.to_string() + " blocks=[";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += ',';
            s += '[';
            for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(blocks_[i][j]);
            }
            s += ']';
        }
        return s + "]";
    }

  private:
    int source_, target_, level_;
    Injection f_;
    std::vector<BracketBlock> blocks_;
};

// All basis elements of FJ(source, target) with level <= max_level; the count
// at level d is |FI(target,d)| * derangements(d - target).
inline std::vector<FJBasisElement> fj_basis(int source, int target, int max_level) {
    std::vector<FJBasisElement> out;
    for (int d = std::max(source, target); d <= max_level; ++d) {
        for (const auto& f : enumerate_injections(target, d)) {
            std::vector<std::int32_t> complement;
            std::vector<bool> used(static_cast<std::size_t>(d), false);
            for (std::int32_t v : f.images()) used[static_cast<std::size_t>(v - 1)] = true;
            for (std::int32_t v = 1; v <= d; ++v)
                if (!used[static_cast<std::size_t>(v - 1)]) complement.push_back(v);
            for (auto& blocks : bracket_partitions(complement))
                out.emplace_back(source, target, d, f, std::move(blocks));
        }
    }
    return out;
}

// u_{ell,d} evaluated in degree n: the word 1..ell prefixed to the shuffle of
// (ell+1)..d with x_1..x_{n-d}; C(n-ell, d-ell) terms, all with coefficient 1.
inline XiVector u_map(int ell, int d, int n) {
    if (ell < 0 || ell > d || d > n) throw std::invalid_argument("u_map: need 0 <= ell <= d <= n");
    std::vector<std::int32_t> fixed_tail, reals;
    for (std::int32_t v = ell + 1; v <= d; ++v) fixed_tail.push_back(v);
    for (std::int32_t v = d + 1; v <= n; ++v) reals.push_back(v);
    XiVector out(d, n);
    for (const auto& body : shuffle(fixed_tail, reals)) {
        std::vector<std::int32_t> ranks;
        ranks.reserve(static_cast<std::size_t>(n));
        for (std::int32_t v = 1; v <= ell; ++v) ranks.push_back(v);
        ranks.insert(ranks.end(), body.begin(), body.end());
        out.add(XiWord(d, std::move(ranks)), 1);
    }
    return out;
}

// The image of xi_{n,source} under the morphism named by b, as an element of
// Xi(target)_n: invert the word expansion, apply it to xi_{level,target},
// extend by the trailing real letters, and precompose with u_{source,level}.
inline XiVector evaluate_at_level(const FJBasisElement& b, int n) {
    if (n < b.level()) throw std::invalid_argument("evaluate_at_level: n below level");
    const int d = b.level(), m = b.target(), ell = b.source();

    GroupRingElement inverted = invert(b.word_expansion());
    XiVector at_level = apply_group_ring(inverted, XiVector::xi(d, m));

    // extend to degree n: each word gains x_{d-m+1} ... x_{n-m}, ranks d+1..n
    XiVector extended(m, n);
    for (const auto& [ranks, c] : at_level.terms()) {
        std::vector<std::int32_t> word = ranks;
        for (std::int32_t v = d + 1; v <= n; ++v) word.push_back(v);
        extended.add(XiWord(m, std::move(word)), c);
    }

    if (ell == d) return extended;

    // precompose with u_{ell,d}: each shuffle term w = sigma . xi_{n,d}
    // contributes sigma . extended
    XiVector out(m, n);
    const XiVector u = u_map(ell, d, n);
    for (const auto& [uranks, uc] : u.terms()) {
        XiVector part = act(Injection(n, uranks), extended);
        part *= uc;
        out += part;
    }
    return out;
}

// A truncated hom space FJ_{<=d}(ell,m) as a lattice in ZS_d: the coordinates
// of each basis-element evaluation at degree d with respect to xi_{d,m}.
struct TruncatedHomSpace {
    int ell = 0, m = 0, d = 0;
    std::vector<FJBasisElement> basis;
    std::vector<GroupRingElement> lattice;

    int count() const { return static_cast<int>(lattice.size()); }

    // d! x count matrix, columns the lattice elements over the lexicographic
    // permutation basis of ZS_d.
    IntMatrix coordinate_matrix() const {
        auto perms = enumerate_permutations(d);
        std::map<Permutation, int> index;
        for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<int>(i));
        IntMatrix mat(static_cast<int>(perms.size()), count());
        for (int j = 0; j < count(); ++j)
            for (const auto& [p, c] : lattice[static_cast<std::size_t>(j)].terms())
                mat.at(index.at(p), j) = c;
        return mat;
    }

    int lattice_rank() const { return count() == 0 ? 0 : rank(coordinate_matrix()); }
};

inline TruncatedHomSpace truncated_hom(int ell, int m, int d) {
    TruncatedHomSpace out;
    out.ell = ell;
    out.m = m;
    out.d = d;
    if (d < ell || d < m) return out;  // the restricted module is zero
    out.basis = fj_basis(ell, m, d);
    for (const auto& b : out.basis)
        out.lattice.push_back(group_ring_coords(evaluate_at_level(b, d)));
    return out;
}

// Integer membership of v in the column lattice of the space.
inline bool lattice_contains(const TruncatedHomSpace& space, const GroupRingElement& v) {
    if (v.size() != space.d) throw std::invalid_argument("lattice_contains: size mismatch");
    if (v.is_zero()) return true;
    if (space.count() == 0) return false;
    auto perms = enumerate_permutations(space.d);
    std::map<Permutation, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<int>(i));
    std::vector<Int> rhs(perms.size());
    for (const auto& [p, c] : v.terms()) rhs[static_cast<std::size_t>(index.at(p))] = c;
    return solve(space.coordinate_matrix(), rhs).has_value();
}

inline bool lattice_equal(const TruncatedHomSpace& a, const std::vector<GroupRingElement>& gens) {
    for (const auto& g : gens)
        if (!lattice_contains(a, g)) return false;
    TruncatedHomSpace b;
    b.ell = a.ell;
    b.m = a.m;
    b.d = a.d;
    b.lattice = gens;
    for (const auto& g : a.lattice)
        if (!lattice_contains(b, g)) return false;
    return true;
}

// A finitely supported element of FJ(source, target).
class FJMorphism {
  public:
    FJMorphism(int source, int target) : source_(source), target_(target) {}

    static FJMorphism from_basis(const FJBasisElement& b, const Int& c = 1) {
        FJMorphism f(b.source(), b.target());
        f.add(b, c);
        return f;
    }

    static FJMorphism identity(int ell) { return from_basis(FJBasisElement::identity(ell)); }

    int source() const { return source_; }
    int target() const { return target_; }
    const std::map<FJBasisElement, Int>& coefficients() const { return coeffs_; }
    int max_level() const {
        int d = std::max(source_, target_);
        for (const auto& [b, c] : coeffs_) d = std::max(d, b.level());
        return d;
    }

    void add(const FJBasisElement& b, const Int& c) {
        if (b.source() != source_ || b.target() != target_)
            throw std::invalid_argument("FJMorphism: basis element of other hom space");
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    XiVector evaluate(int n) const {
        XiVector out(target_, n);
        for (const auto& [b, c] : coeffs_) {
            XiVector part = evaluate_at_level(b, n);
            part *= c;
            out += part;
        }
        return out;
    }

    // The element sigma_n of ZS_n with sigma_n . xi_{n,target} = evaluate(n).
    GroupRingElement coordinate(int n) const { return group_ring_coords(evaluate(n)); }

  private:
    int source_, target_;
    std::map<FJBasisElement, Int> coeffs_;
};

// The degree-n coordinate of the composite g o f. The outer coordinate is the
// left factor of the group-ring product; kOuterCoordinateOnLeft records the
// order fixed by the bootstrap test against direct evaluation.
inline constexpr bool kOuterCoordinateOnLeft = true;

inline GroupRingElement compose(const FJMorphism& g, const FJMorphism& f, int n) {
    if (f.target() != g.source()) throw std::invalid_argument("compose: middle object mismatch");
    if (n < f.max_level() || n < g.max_level())
        throw std::invalid_argument("compose: n below a level involved");
    static_assert(kOuterCoordinateOnLeft);
    return g.coordinate(n) * f.coordinate(n);
}

// The truncated category ring Q_d: entry (ell, m) is FJ_{<=d}(ell, m) inside
// ZS_d, row = source, column = target.
struct QRing {
    int degree = 0;
    std::vector<std::vector<TruncatedHomSpace>> entries;  // [ell][m]

    const TruncatedHomSpace& entry(int ell, int m) const {
        return entries[static_cast<std::size_t>(ell)][static_cast<std::size_t>(m)];
    }

    int total_rank() const {
        int r = 0;
        for (const auto& row : entries)
            for (const auto& e : row) r += e.lattice_rank();
        return r;
    }
};

inline QRing q_ring(int d) {
    QRing q;
    q.degree = d;
    q.entries.resize(static_cast<std::size_t>(d) + 1);
    for (int ell = 0; ell <= d; ++ell) {
        q.entries[static_cast<std::size_t>(ell)].reserve(static_cast<std::size_t>(d) + 1);
        for (int m = 0; m <= d; ++m)
            q.entries[static_cast<std::size_t>(ell)].push_back(truncated_hom(ell, m, d));
    }
    return q;
}

// Structure constants of one composable product: the coordinates of
// (gen j of (m,p)) o (gen i of (ell,m)) in the lattice of entry (ell,p).
struct QRingProduct {
    int ell, m, p;
    int left_index, right_index;   // i over (ell,m), j over (m,p)
    std::vector<Int> coordinates;  // over the generators of (ell,p)
};

inline std::vector<QRingProduct> q_ring_products(const QRing& q) {
    std::vector<QRingProduct> out;
    for (int ell = 0; ell <= q.degree; ++ell)
        for (int m = 0; m <= q.degree; ++m)
            for (int p = 0; p <= q.degree; ++p) {
                const auto& left = q.entry(ell, m);
                const auto& right = q.entry(m, p);
                const auto& target = q.entry(ell, p);
                if (left.count() == 0 || right.count() == 0) continue;
                auto perms = enumerate_permutations(q.degree);
                std::map<Permutation, int> index;
                for (std::size_t i = 0; i < perms.size(); ++i)
                    index.emplace(perms[i], static_cast<int>(i));
                IntMatrix tmat = target.coordinate_matrix();
                for (int i = 0; i < left.count(); ++i)
                    for (int j = 0; j < right.count(); ++j) {
                        GroupRingElement prod =
                            right.lattice[static_cast<std::size_t>(j)] *
                            left.lattice[static_cast<std::size_t>(i)];
                        std::vector<Int> rhs(perms.size());
                        for (const auto& [pm, c] : prod.terms())
                            rhs[static_cast<std::size_t>(index.at(pm))] = c;
                        auto sol = solve(tmat, rhs);
                        if (!sol)
                            throw std::logic_error("q_ring_products: product left the lattice");
                        out.push_back(QRingProduct{ell, m, p, i, j, std::move(*sol)});
                    }
            }
    return out;
}

}  // namespace fitails
