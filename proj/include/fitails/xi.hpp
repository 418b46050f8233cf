#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fitails/group_ring.hpp"
#include "fitails/injections.hpp"
#include "fitails/integer_linalg.hpp"
#include "fitails/numeric.hpp"

namespace fitails {

// A basis word of Xi(ell)_n. Letters are stored as alphabet ranks in [n]:
// rank j <= ell is the fixed letter j, rank ell+i is the real letter x_i.
// The rank vector is a permutation of [n], so the word 1...ell x_1...x_{n-ell}
// is the identity.
class XiWord {
  public:
    XiWord(int ell, std::vector<std::int32_t> ranks) : ell_(ell), ranks_(std::move(ranks)) {
        const int n = static_cast<int>(ranks_.size());
        if (ell_ < 0 || ell_ > n) throw std::invalid_argument("XiWord: bad ell");
        std::vector<bool> seen(ranks_.size(), false);
        for (std::int32_t r : ranks_) {
            if (r < 1 || r > n || seen[static_cast<std::size_t>(r - 1)])
                throw std::invalid_argument("XiWord: letters must each appear exactly once");
            seen[static_cast<std::size_t>(r - 1)] = true;
        }
    }

    static XiWord xi(int n, int ell) {  // the word 1...ell x_1...x_{n-ell}
        if (n < ell) throw std::invalid_argument("XiWord::xi: n < ell");
        std::vector<std::int32_t> r(static_cast<std::size_t>(n));
        std::iota(r.begin(), r.end(), 1);
        return XiWord(ell, std::move(r));
    }

    int ell() const { return ell_; }
    int n() const { return static_cast<int>(ranks_.size()); }
    const std::vector<std::int32_t>& ranks() const { return ranks_; }

    // The unique permutation with sigma . xi_{n,ell} = this word (the action is
    // precomposition, so sigma's one-line form is exactly the rank vector).
    Permutation coordinate() const { return Permutation(ranks_); }

    friend bool operator==(const XiWord& a, const XiWord& b) {
        return a.ell_ == b.ell_ && a.ranks_ == b.ranks_;
    }
    friend bool operator<(const XiWord& a, const XiWord& b) {
        if (a.ranks_.size() != b.ranks_.size()) return a.ranks_.size() < b.ranks_.size();
        if (a.ell_ != b.ell_) return a.ell_ < b.ell_;
        return a.ranks_ < b.ranks_;
    }

    // Fixed letters print as numbers, real letters as x1, x2, ...; multi-digit
    // indices are parenthesized: (10), x(12).
    std::string to_string() const {
        std::string s;
        for (std::int32_t r : ranks_) {
            if (r <= ell_) {
                s += r > 9 ? "(" + std::to_string(r) + ")" : std::to_string(r);
            } else {
                const std::int32_t i = r - ell_;
                s += i > 9 ? "x(" + std::to_string(i) + ")" : "x" + std::to_string(i);
            }
        }
        return s.empty() ? "()" : s;
    }

  private:
    int ell_;
    std::vector<std::int32_t> ranks_;
};

// A Z-linear combination of Xi(ell)_n basis words.
class XiVector {
  public:
    XiVector(int ell, int n) : ell_(ell), n_(n) {
        if (ell < 0 || n < 0) throw std::invalid_argument("XiVector: negative size");
    }

    static XiVector basis_vector(const XiWord& w) {
        XiVector v(w.ell(), w.n());
        v.add(w, 1);
        return v;
    }

    static XiVector xi(int n, int ell) { return basis_vector(XiWord::xi(n, ell)); }

    int ell() const { return ell_; }
    int n() const { return n_; }
    const std::map<std::vector<std::int32_t>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const XiWord& w, const Int& c) {
        if (w.ell() != ell_ || w.n() != n_)
            throw std::invalid_argument("XiVector: word from a different module");
        add_ranks(w.ranks(), c);
    }

    Int coefficient(const XiWord& w) const {
        auto it = terms_.find(w.ranks());
        return it == terms_.end() ? Int(0) : it->second;
    }

    XiVector& operator+=(const XiVector& o) {
        if (o.ell_ != ell_ || o.n_ != n_) throw std::invalid_argument("XiVector: size mismatch");
        for (const auto& [r, c] : o.terms_) add_ranks(r, c);
        return *this;
    }
    friend XiVector operator+(XiVector a, const XiVector& b) {
        a += b;
        return a;
    }
    friend XiVector operator-(XiVector a, const XiVector& b) {
        if (a.ell_ != b.ell_ || a.n_ != b.n_) throw std::invalid_argument("XiVector: size mismatch");
        for (const auto& [r, c] : b.terms_) a.add_ranks(r, -c);
        return a;
    }
    XiVector& operator*=(const Int& s) {
        if (s == 0) terms_.clear();
        else
            for (auto& [r, c] : terms_) c *= s;
        return *this;
    }

    friend bool operator==(const XiVector& a, const XiVector& b) {
        return a.ell_ == b.ell_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [r, c] : terms_) {
            Int a = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) s += "-";
                first = false;
            } else {
                s += c < 0 ? " - " : " + ";
            }
            if (a != 1) s += a.str() + "*";
            s += XiWord(ell_, r).to_string();
        }
        return s;
    }

  private:
    void add_ranks(const std::vector<std::int32_t>& r, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(r, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int ell_, n_;
    std::map<std::vector<std::int32_t>, Int> terms_;
};

// All basis words of Xi(ell)_n in lexicographic rank order; n! words for
// n >= ell, none otherwise.
inline std::vector<XiWord> xi_basis(int ell, int n) {
    std::vector<XiWord> out;
    if (ell < 0 || n < 0 || n < ell) return out;
    std::vector<std::int32_t> r(static_cast<std::size_t>(n));
    std::iota(r.begin(), r.end(), 1);
    do {
        out.emplace_back(ell, r);
    } while (std::next_permutation(r.begin(), r.end()));
    return out;
}

namespace detail {

// Precompose a rank word with an injection and standardize: positions are the
// images of [m] -> [n]; a surviving word keeps its fixed letters (all of
// 1..n_fixed must survive) and relabels real letters by their order.
inline std::optional<std::vector<std::int32_t>> precompose_standardize(
    const std::vector<std::int32_t>& ranks, const std::vector<std::int32_t>& positions,
    int n_fixed) {
    std::vector<std::int32_t> picked;
    picked.reserve(positions.size());
    int fixed_seen = 0;
    for (std::int32_t p : positions) {
        std::int32_t r = ranks[static_cast<std::size_t>(p - 1)];
        if (r <= n_fixed) ++fixed_seen;
        picked.push_back(r);
    }
    if (fixed_seen < n_fixed) return std::nullopt;

    std::vector<std::int32_t> reals;
    for (std::int32_t r : picked)
        if (r > n_fixed) reals.push_back(r);
    std::sort(reals.begin(), reals.end());
    for (std::int32_t& r : picked) {
        if (r > n_fixed) {
            auto it = std::lower_bound(reals.begin(), reals.end(), r);
            r = static_cast<std::int32_t>(n_fixed + (it - reals.begin()) + 1);
        }
    }
    return picked;
}

}  // namespace detail

// The contravariant action: f: [m] -> [n] sends a word w in Xi(ell)_n to the
// standardization of w o f, or to zero when a fixed letter is lost.
inline XiVector act(const Injection& f, const XiVector& v) {
    if (f.codomain_size() != v.n())
        throw std::invalid_argument("act: injection codomain does not match degree");
    XiVector out(v.ell(), f.domain_size());
    for (const auto& [ranks, c] : v.terms()) {
        auto w = detail::precompose_standardize(ranks, f.images(), v.ell());
        if (w) out.add(XiWord(v.ell(), std::move(*w)), c);
    }
    return out;
}

inline XiVector act(const Injection& f, const XiWord& w) {
    return act(f, XiVector::basis_vector(w));
}

// The unique e in ZS_n with e . xi_{n,ell} = v.
inline GroupRingElement group_ring_coords(const XiVector& v) {
    GroupRingElement e(v.n());
    for (const auto& [ranks, c] : v.terms()) e.add(Permutation(ranks), c);
    return e;
}

// sigma . w = w o sigma, extended linearly in both arguments.
inline XiVector apply_group_ring(const GroupRingElement& e, const XiVector& v) {
    if (e.size() != v.n()) throw std::invalid_argument("apply_group_ring: size mismatch");
    XiVector out(v.ell(), v.n());
    for (const auto& [p, c] : e.terms()) {
        XiVector part = act(p.as_injection(), v);
        part *= c;
        out += part;
    }
    return out;
}

// Basis of the kernel D_n of all face maps delta_i: Xi(0)_n -> Xi(0)_{n-1},
// as a saturated lattice; its rank is the derangement number of n.
inline std::vector<XiVector> d_kernel(int n) {
    auto basis = xi_basis(0, n);
    auto target = xi_basis(0, n - 1);  // empty for n = 0
    std::map<std::vector<std::int32_t>, int> target_index;
    for (std::size_t i = 0; i < target.size(); ++i) target_index[target[i].ranks()] = static_cast<int>(i);

    const int block = static_cast<int>(target.size());
    IntMatrix m(n * block, static_cast<int>(basis.size()));
    for (int col = 0; col < static_cast<int>(basis.size()); ++col)
        for (int i = 1; i <= n; ++i) {
            XiVector image = act(delta(i, n), basis[static_cast<std::size_t>(col)]);
            for (const auto& [r, c] : image.terms())
                m.at((i - 1) * block + target_index.at(r), col) += c;
        }

    std::vector<XiVector> out;
    for (const auto& vec : kernel_saturated(m)) {
        XiVector v(0, n);
        for (std::size_t i = 0; i < vec.size(); ++i)
            if (vec[i] != 0) v.add(basis[i], vec[i]);
        out.push_back(std::move(v));
    }
    return out;
}

// Parses the compact word syntax, e.g. "2x11x2" in Xi(2)_4; real letters are
// 'x' plus one digit, with parentheses for larger indices.
inline XiWord parse_xi_word(const std::string& s, int ell) {
    std::vector<std::int32_t> ranks;
    std::size_t p = 0;
    auto read_number = [&](const char* what) -> std::int32_t {
        if (p < s.size() && s[p] == '(') {
            std::size_t q = ++p;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            if (q == p || q >= s.size() || s[q] != ')')
                throw std::invalid_argument(std::string("parse_xi_word: bad ") + what);
            std::int32_t v = static_cast<std::int32_t>(std::stol(s.substr(p, q - p)));
            p = q + 1;
            return v;
        }
        if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
            throw std::invalid_argument(std::string("parse_xi_word: bad ") + what);
        return s[p++] - '0';
    };
    while (p < s.size()) {
        if (s[p] == 'x') {
            ++p;
            ranks.push_back(ell + read_number("real index"));
        } else {
            std::int32_t v = read_number("fixed letter");
            if (v > ell) throw std::invalid_argument("parse_xi_word: fixed letter above ell");
            ranks.push_back(v);
        }
    }
    return XiWord(ell, std::move(ranks));
}

}  // namespace fitails
