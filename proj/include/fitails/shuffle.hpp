#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fitails {

// All interleavings of two words over disjoint letters, preserving the
// internal order of each; C(|a|+|b|, |a|) words, each appearing once.
template <typename T>
std::vector<std::vector<T>> shuffle(const std::vector<T>& a, const std::vector<T>& b) {
    for (const T& x : a)
        if (std::find(b.begin(), b.end(), x) != b.end())
            throw std::invalid_argument("shuffle: words share a letter");

    std::vector<std::vector<T>> out;
    std::vector<T> cur;
    cur.reserve(a.size() + b.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == a.size() && j == b.size()) {
            out.push_back(cur);
            return;
        }
        if (i < a.size()) {
            cur.push_back(a[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < b.size()) {
            cur.push_back(b[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace fitails
