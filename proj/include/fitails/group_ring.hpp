#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fitails/injections.hpp"
#include "fitails/numeric.hpp"

namespace fitails {

// An element of the integral group ring Z S_n. Zero coefficients are never
// stored; all permutations share the same size.
class GroupRingElement {
  public:
    explicit GroupRingElement(int n) : n_(n) {}

    static GroupRingElement identity(int n) {
        GroupRingElement e(n);
        e.add(Permutation::identity(n), 1);
        return e;
    }

    int size() const { return n_; }
    const std::map<Permutation, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    void add(const Permutation& p, const Int& c) {
        if (p.size() != n_) throw std::invalid_argument("GroupRingElement: size mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(const Permutation& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? Int(0) : it->second;
    }

    GroupRingElement& operator+=(const GroupRingElement& other) {
        for (const auto& [p, c] : other.terms_) add(p, c);
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
        a += b;
        return a;
    }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
        for (const auto& [p, c] : b.terms_) a.add(p, -c);
        return a;
    }
    GroupRingElement& operator*=(const Int& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [p, c] : terms_) c *= s;
        return *this;
    }

    // Group ring product; permutations multiply by function composition,
    // (ab)(i) = a(b(i)).
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("GroupRingElement: size mismatch");
        GroupRingElement out(a.n_);
        for (const auto& [p, c] : a.terms_)
            for (const auto& [q, d] : b.terms_) out.add(compose_perm(p, q), c * d);
        return out;
    }

    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // Signed sum of one-line permutations, terms in lexicographic order,
    // e.g. "123 - 213 - 312 + 321".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            Int a = c < 0 ? Int(-c) : c;
            if (first) {
                if (c < 0) s += "-";
                first = false;
            } else {
                s += c < 0 ? " - " : " + ";
            }
            if (a != 1) s += a.str() + "*";
            s += p.to_string();
        }
        return s;
    }

  private:
    int n_;
    std::map<Permutation, Int> terms_;
};

// Term-by-term inversion of permutations, coefficients unchanged; involutive.
inline GroupRingElement invert(const GroupRingElement& e) {
    GroupRingElement out(e.size());
    for (const auto& [p, c] : e.terms()) out.add(p.inverse(), c);
    return out;
}

namespace detail {

// One-line word with optional parentheses for letters above 9, e.g. "12(10)".
inline std::vector<std::int32_t> parse_one_line_word(const std::string& s, std::size_t& p) {
    std::vector<std::int32_t> im;
    while (p < s.size()) {
        char ch = s[p];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            im.push_back(ch - '0');
            ++p;
        } else if (ch == '(') {
            std::size_t q = ++p;
            while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
            if (q == p || q >= s.size() || s[q] != ')')
                throw std::invalid_argument("parse: bad parenthesized letter");
            im.push_back(static_cast<std::int32_t>(std::stol(s.substr(p, q - p))));
            p = q + 1;
        } else {
            break;
        }
    }
    return im;
}

inline void skip_spaces(const std::string& s, std::size_t& p) {
    while (p < s.size() && s[p] == ' ') ++p;
}

// "<sign>? <int>* ..." prefix of a term; defaults to +1.
inline Int parse_signed_coefficient(const std::string& s, std::size_t& p) {
    Int sign = 1;
    skip_spaces(s, p);
    if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        if (s[p] == '-') sign = -1;
        ++p;
        skip_spaces(s, p);
    }
    std::size_t q = p;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q < s.size() && s[q] == '*') {
        Int mag(s.substr(p, q - p));
        p = q + 1;
        return sign * mag;
    }
    return sign;
}

}  // namespace detail

// Parses the to_string format back, e.g. "123 - 213 - 231 + 321".
inline GroupRingElement parse_group_ring(const std::string& s, int n) {
    GroupRingElement out(n);
    std::size_t p = 0;
    detail::skip_spaces(s, p);
    if (s.substr(p) == "0") return out;
    while (p < s.size()) {
        Int c = detail::parse_signed_coefficient(s, p);
        auto im = detail::parse_one_line_word(s, p);
        if (static_cast<int>(im.size()) != n)
            throw std::invalid_argument("parse_group_ring: wrong word length in '" + s + "'");
        out.add(Permutation(std::move(im)), c);
        detail::skip_spaces(s, p);
    }
    return out;
}

}  // namespace fitails
