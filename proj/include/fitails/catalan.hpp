#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fitails/injections.hpp"
#include "fitails/integer_linalg.hpp"
#include "fitails/numeric.hpp"
#include "fitails/xi.hpp"

namespace fitails {

// A strictly increasing c: [ell] -> [n] with c(i) >= 2i.
class CatalanFunction {
  public:
    CatalanFunction(int n, std::vector<std::int32_t> values)
        : n_(n), values_(std::move(values)) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] < 2 * static_cast<std::int32_t>(i + 1) || values_[i] > n_)
                throw std::invalid_argument("CatalanFunction: c(i) must satisfy 2i <= c(i) <= n");
            if (i > 0 && values_[i] <= values_[i - 1])
                throw std::invalid_argument("CatalanFunction: not strictly increasing");
        }
    }

    int ell() const { return static_cast<int>(values_.size()); }
    int n() const { return n_; }
    const std::vector<std::int32_t>& values() const { return values_; }

    friend bool operator==(const CatalanFunction& a, const CatalanFunction& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }
    friend bool operator<(const CatalanFunction& a, const CatalanFunction& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        if (a.values_.size() != b.values_.size()) return a.values_.size() < b.values_.size();
        return a.values_ < b.values_;
    }

  private:
    int n_;
    std::vector<std::int32_t> values_;
};

// All Catalan functions [ell] -> [n], lexicographic; there are
// C(n,ell) - C(n,ell-1) of them.
inline std::vector<CatalanFunction> catalan_set(int ell, int n) {
    std::vector<CatalanFunction> out;
    if (ell < 0 || n < 0) return out;
    std::vector<std::int32_t> cur;
    auto rec = [&](auto&& self, std::int32_t next_min) -> void {
        if (static_cast<int>(cur.size()) == ell) {
            out.emplace_back(n, cur);
            return;
        }
        const std::int32_t i = static_cast<std::int32_t>(cur.size()) + 1;
        for (std::int32_t v = std::max(next_min, 2 * i); v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// A Catalan-basis template: a word of length k using every value of c once
// plus real letters x_1..x_{k-ell}. Stored as ranks in [k], rank j <= ell
// meaning the letter c(j), mirroring XiWord through the relabeling c.
class CBElement {
  public:
    CBElement(CatalanFunction c, std::vector<std::int32_t> word_ranks)
        : c_(std::move(c)), ranks_(std::move(word_ranks)) {
        const int k = static_cast<int>(ranks_.size());
        if (c_.ell() > k) throw std::invalid_argument("CBElement: word too short for c");
        std::vector<bool> seen(ranks_.size(), false);
        for (std::int32_t r : ranks_) {
            if (r < 1 || r > k || seen[static_cast<std::size_t>(r - 1)])
                throw std::invalid_argument("CBElement: letters must each appear exactly once");
            seen[static_cast<std::size_t>(r - 1)] = true;
        }
    }

    int k() const { return static_cast<int>(ranks_.size()); }
    int n() const { return c_.n(); }
    int ell() const { return c_.ell(); }
    const CatalanFunction& c() const { return c_; }
    const std::vector<std::int32_t>& ranks() const { return ranks_; }

    XiWord as_xi_word() const { return XiWord(ell(), ranks_); }

    friend bool operator==(const CBElement& a, const CBElement& b) {
        return a.c_ == b.c_ && a.ranks_ == b.ranks_;
    }
    friend bool operator<(const CBElement& a, const CBElement& b) {
        if (!(a.c_ == b.c_)) return a.c_ < b.c_;
        return a.ranks_ < b.ranks_;
    }

    // Mirrors the Xi word syntax with c values in place of fixed letters,
    // e.g. x152x2.
    std::string to_string() const {
        std::string s;
        for (std::int32_t r : ranks_) {
            if (r <= ell()) {
                std::int32_t v = c_.values()[static_cast<std::size_t>(r - 1)];
                s += v > 9 ? "(" + std::to_string(v) + ")" : std::to_string(v);
            } else {
                const std::int32_t i = r - ell();
                s += i > 9 ? "x(" + std::to_string(i) + ")" : "x" + std::to_string(i);
            }
        }
        return s.empty() ? "()" : s;
    }

  private:
    CatalanFunction c_;
    std::vector<std::int32_t> ranks_;
};

// CB_ell(k,n) in canonical order: c lexicographic, then word ranks
// lexicographic; k! * |Catalan(ell,n)| elements.
inline std::vector<CBElement> cb_level_basis(int ell, int k, int n) {
    std::vector<CBElement> out;
    if (ell > k) return out;
    for (const auto& c : catalan_set(ell, n)) {
        std::vector<std::int32_t> r(static_cast<std::size_t>(k));
        std::iota(r.begin(), r.end(), 1);
        do {
            out.emplace_back(c, r);
        } while (std::next_permutation(r.begin(), r.end()));
    }
    return out;
}

// CB(k,n): all levels (empty above min(k, n/2)).
inline std::vector<CBElement> cb_basis(int k, int n) {
    std::vector<CBElement> out;
    for (int ell = 0; ell <= k; ++ell)
        for (auto& e : cb_level_basis(ell, k, n)) out.push_back(std::move(e));
    return out;
}

// CB'(k,n): levels ell <= min(k, n-k); always |FI(k,n)| elements.
inline std::vector<CBElement> cb_prime_basis(int k, int n) {
    std::vector<CBElement> out;
    for (int ell = 0; ell <= std::min(k, n - k); ++ell)
        for (auto& e : cb_level_basis(ell, k, n)) out.push_back(std::move(e));
    return out;
}

// f matches pi when f agrees with pi on positions holding values of c, and
// takes the real positions in the same relative order as the x indices.
inline bool matches(const Injection& f, const CBElement& pi) {
    if (f.domain_size() != pi.k() || f.codomain_size() != pi.n())
        throw std::invalid_argument("matches: size mismatch");
    const auto& ranks = pi.ranks();
    const auto& cvals = pi.c().values();
    const int ell = pi.ell();
    for (int i = 0; i < pi.k(); ++i) {
        if (ranks[static_cast<std::size_t>(i)] <= ell &&
            f.images()[static_cast<std::size_t>(i)] !=
                cvals[static_cast<std::size_t>(ranks[static_cast<std::size_t>(i)] - 1)])
            return false;
    }
    for (int i = 0; i < pi.k(); ++i) {
        if (ranks[static_cast<std::size_t>(i)] <= ell) continue;
        for (int j = i + 1; j < pi.k(); ++j) {
            if (ranks[static_cast<std::size_t>(j)] <= ell) continue;
            const bool f_less = f.images()[static_cast<std::size_t>(i)] <
                                f.images()[static_cast<std::size_t>(j)];
            const bool x_less = ranks[static_cast<std::size_t>(i)] <
                                ranks[static_cast<std::size_t>(j)];
            if (f_less != x_less) return false;
        }
    }
    return true;
}

// The FI^op action on CB elements through the relabeling isomorphism with Xi:
// precompose and standardize per c-summand; zero when a c value is lost.
inline std::optional<CBElement> cb_act(const Injection& g, const CBElement& pi) {
    if (g.codomain_size() != pi.k()) throw std::invalid_argument("cb_act: size mismatch");
    auto w = detail::precompose_standardize(pi.ranks(), g.images(), pi.ell());
    if (!w) return std::nullopt;
    return CBElement(pi.c(), std::move(*w));
}

// The matching matrix: rows FI(k,n) lexicographic, columns CB'(k,n) canonical,
// entry 1 exactly on matching pairs. Square of size n!/(n-k)!.
inline IntMatrix chi_matrix(int k, int n) {
    auto fs = enumerate_injections(k, n);
    auto pis = cb_prime_basis(k, n);
    IntMatrix m(static_cast<int>(fs.size()), static_cast<int>(pis.size()));
    for (int i = 0; i < static_cast<int>(fs.size()); ++i)
        for (int j = 0; j < static_cast<int>(pis.size()); ++j)
            if (matches(fs[static_cast<std::size_t>(i)], pis[static_cast<std::size_t>(j)]))
                m.at(i, j) = 1;
    return m;
}

// chi of a single injection as a 0/1 combination of CB' elements.
inline std::map<CBElement, Int> chi(const Injection& f) {
    std::map<CBElement, Int> out;
    for (const auto& pi : cb_prime_basis(f.domain_size(), f.codomain_size()))
        if (matches(f, pi)) out.emplace(pi, 1);
    return out;
}

// Exact inverse of the matching matrix; defined in the full-basis regime.
inline IntMatrix chi_inverse(int k, int n) {
    if (n < 2 * k - 1)
        throw std::invalid_argument("chi_inverse: requires n >= 2k-1 (outside stable range)");
    return inverse_unimodular(chi_matrix(k, n));
}

// The pi-column of the inverse matrix as a formal combination of injections.
// The inverse is indexed with rows over CB'(k,n) and columns over FI(k,n),
// so that chi followed by chi_inverse_column is the identity on injections.
inline std::map<Injection, Int> chi_inverse_column(const CBElement& pi) {
    const int k = pi.k(), n = pi.n();
    IntMatrix inv = chi_inverse(k, n);
    auto fs = enumerate_injections(k, n);
    auto pis = cb_prime_basis(k, n);
    auto it = std::find(pis.begin(), pis.end(), pi);
    if (it == pis.end()) throw std::invalid_argument("chi_inverse_column: not a CB' element");
    const int row = static_cast<int>(it - pis.begin());
    std::map<Injection, Int> out;
    for (int j = 0; j < static_cast<int>(fs.size()); ++j)
        if (inv.at(row, j) != 0) out.emplace(fs[static_cast<std::size_t>(j)], inv.at(row, j));
    return out;
}

}  // namespace fitails
