#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fitails {

// An injection [k] -> [n], stored as the 1-based image tuple (f(1),...,f(k)).
class Injection {
  public:
    Injection(int codomain_size, std::vector<std::int32_t> images)
        : cod_(codomain_size), im_(std::move(images)) {
        validate();
    }

    static Injection identity(int n) {
        std::vector<std::int32_t> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return Injection(n, std::move(im));
    }

    int domain_size() const { return static_cast<int>(im_.size()); }
    int codomain_size() const { return cod_; }
    const std::vector<std::int32_t>& images() const { return im_; }
    std::int32_t operator()(int i) const { return im_[static_cast<std::size_t>(i - 1)]; }

    bool is_monotone() const { return std::is_sorted(im_.begin(), im_.end()); }

    friend bool operator==(const Injection& a, const Injection& b) {
        return a.cod_ == b.cod_ && a.im_ == b.im_;
    }
    friend bool operator<(const Injection& a, const Injection& b) {
        if (a.im_.size() != b.im_.size()) return a.im_.size() < b.im_.size();
        if (a.cod_ != b.cod_) return a.cod_ < b.cod_;
        return a.im_ < b.im_;
    }

    // Bracketed comma list of images, e.g. [3,1] for f(1)=3, f(2)=1.
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < im_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(im_[i]);
        }
        return s + "]";
    }

  private:
    void validate() const {
        if (cod_ < 0) throw std::invalid_argument("Injection: negative codomain");
        if (static_cast<int>(im_.size()) > cod_)
            throw std::invalid_argument("Injection: domain larger than codomain");
        std::vector<bool> seen(static_cast<std::size_t>(cod_), false);
        for (std::int32_t v : im_) {
            if (v < 1 || v > cod_)
                throw std::invalid_argument("Injection: image out of range");
            if (seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("Injection: images not distinct");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    int cod_;
    std::vector<std::int32_t> im_;
};

// A bijection [n] -> [n] in one-line notation.
class Permutation {
  public:
    explicit Permutation(std::vector<std::int32_t> images) : im_(std::move(images)) {
        const int n = static_cast<int>(im_.size());
        std::vector<bool> seen(im_.size(), false);
        for (std::int32_t v : im_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("Permutation: not a bijection");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<std::int32_t> im(static_cast<std::size_t>(n));
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    int size() const { return static_cast<int>(im_.size()); }
    const std::vector<std::int32_t>& images() const { return im_; }
    std::int32_t operator()(int i) const { return im_[static_cast<std::size_t>(i - 1)]; }

    Permutation inverse() const {
        std::vector<std::int32_t> inv(im_.size());
        for (std::size_t i = 0; i < im_.size(); ++i)
            inv[static_cast<std::size_t>(im_[i] - 1)] = static_cast<std::int32_t>(i + 1);
        return Permutation(std::move(inv));
    }

    Injection as_injection() const { return Injection(size(), im_); }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.im_ == b.im_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        if (a.im_.size() != b.im_.size()) return a.im_.size() < b.im_.size();
        return a.im_ < b.im_;
    }

    // One-line notation; letters above 9 are parenthesized: 12(10).
    std::string to_string() const {
        std::string s;
        for (std::int32_t v : im_) {
            if (v > 9) s += "(" + std::to_string(v) + ")";
            else s += std::to_string(v);
        }
        return s;
    }

  private:
    std::vector<std::int32_t> im_;
};

// (outer o inner)(i) = outer(inner(i)).
inline Permutation compose_perm(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size())
        throw std::invalid_argument("compose_perm: size mismatch");
    std::vector<std::int32_t> im(static_cast<std::size_t>(inner.size()));
    for (int i = 1; i <= inner.size(); ++i)
        im[static_cast<std::size_t>(i - 1)] = outer(inner(i));
    return Permutation(std::move(im));
}

// Applies f then g: the composite g o f as a map [a] -> [c].
inline Injection compose(const Injection& f, const Injection& g) {
    if (f.codomain_size() != g.domain_size())
        throw std::invalid_argument("compose: codomain of f differs from domain of g");
    std::vector<std::int32_t> im(static_cast<std::size_t>(f.domain_size()));
    for (int i = 1; i <= f.domain_size(); ++i)
        im[static_cast<std::size_t>(i - 1)] = g(f(i));
    return Injection(g.codomain_size(), std::move(im));
}

// The monotone injection [n-1] -> [n] whose image omits i.
inline Injection delta(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("delta: index out of range");
    std::vector<std::int32_t> im;
    im.reserve(static_cast<std::size_t>(n - 1));
    for (int v = 1; v <= n; ++v)
        if (v != i) im.push_back(v);
    return Injection(n, std::move(im));
}

// Unique factorization f = h o sigma with h monotone and sigma a permutation.
inline std::pair<Permutation, Injection> oi_decompose(const Injection& f) {
    std::vector<std::int32_t> sorted = f.images();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::int32_t> sigma(f.images().size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), f.images()[i]);
        sigma[i] = static_cast<std::int32_t>(it - sorted.begin() + 1);
    }
    return {Permutation(std::move(sigma)), Injection(f.codomain_size(), std::move(sorted))};
}

// All injections [k] -> [n] in lexicographic order of image tuples;
// empty when k > n, the single empty injection when k = 0.
inline std::vector<Injection> enumerate_injections(int k, int n) {
    std::vector<Injection> out;
    if (k < 0 || n < 0 || k > n) return out;
    std::vector<std::int32_t> cur;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.emplace_back(n, cur);
            return;
        }
        for (std::int32_t v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v - 1)]) continue;
            used[static_cast<std::size_t>(v - 1)] = true;
            cur.push_back(v);
            self(self);
            cur.pop_back();
            used[static_cast<std::size_t>(v - 1)] = false;
        }
    };
    rec(rec);
    return out;
}

inline std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<std::int32_t> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

// Parses the bracketed image list syntax, e.g. "[3,1]".
inline Injection parse_injection(const std::string& text, int codomain_size) {
    std::size_t p = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("parse_injection: " + msg + " in '" + text + "'");
    };
    if (p >= text.size() || text[p] != '[') fail("expected '['");
    ++p;
    std::vector<std::int32_t> im;
    if (p < text.size() && text[p] == ']') {
        ++p;
    } else {
        while (true) {
            std::size_t q = p;
            while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
            if (q == p) fail("expected digit");
            im.push_back(static_cast<std::int32_t>(std::stol(text.substr(p, q - p))));
            p = q;
            if (p < text.size() && text[p] == ',') {
                ++p;
                continue;
            }
            if (p < text.size() && text[p] == ']') {
                ++p;
                break;
            }
            fail("expected ',' or ']'");
        }
    }
    if (p != text.size()) fail("trailing characters");
    return Injection(codomain_size, std::move(im));
}

}  // namespace fitails
