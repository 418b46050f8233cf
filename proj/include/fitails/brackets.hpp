#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fitails/group_ring.hpp"
#include "fitails/numeric.hpp"

namespace fitails {

// A bracket ordering (s1,...,sr) stands for the left-nested Lie bracket
// [[...[[s1,s2],s3],...],sr] with s1 the minimum of the block.
using BracketBlock = std::vector<std::int32_t>;

namespace detail {

inline void validate_block(const BracketBlock& block) {
    if (block.empty()) throw std::invalid_argument("bracket block: empty");
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (block[i] < 1) throw std::invalid_argument("bracket block: letters must be positive");
        for (std::size_t j = i + 1; j < block.size(); ++j)
            if (block[i] == block[j])
                throw std::invalid_argument("bracket block: repeated letter");
        if (i > 0 && block[i] < block[0])
            throw std::invalid_argument("bracket block: first letter is not the minimum");
    }
}

struct SignedWord {
    int sign;  // +1 or -1
    std::vector<std::int32_t> word;
};

// [[...[s1,s2],...],sr] expands to 2^(r-1) signed words via [A,s] = As - sA.
inline std::vector<SignedWord> expand_block(const BracketBlock& block) {
    std::vector<SignedWord> cur{{1, {block[0]}}};
    for (std::size_t i = 1; i < block.size(); ++i) {
        std::vector<SignedWord> next;
        next.reserve(cur.size() * 2);
        for (const auto& t : cur) {
            SignedWord right{t.sign, t.word};
            right.word.push_back(block[i]);
            next.push_back(std::move(right));
            SignedWord left{-t.sign, {block[i]}};
            left.word.insert(left.word.end(), t.word.begin(), t.word.end());
            next.push_back(std::move(left));
        }
        cur = std::move(next);
    }
    return cur;
}

// Blockwise concatenation of the expansions, signs multiplying.
inline std::vector<SignedWord> expand_blocks(const std::vector<BracketBlock>& blocks) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        validate_block(blocks[i]);
        if (i > 0 && blocks[i][0] <= blocks[i - 1][0])
            throw std::invalid_argument("bracket blocks: not sorted by minima");
    }
    std::vector<SignedWord> cur{{1, {}}};
    for (const auto& block : blocks) {
        auto parts = expand_block(block);
        std::vector<SignedWord> next;
        next.reserve(cur.size() * parts.size());
        for (const auto& t : cur)
            for (const auto& p : parts) {
                SignedWord w{t.sign * p.sign, t.word};
                w.word.insert(w.word.end(), p.word.begin(), p.word.end());
                next.push_back(std::move(w));
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace detail

// Expands a product of iterated Lie brackets whose blocks partition [n]
// (all block sizes >= 2) into a signed sum of one-line permutation words.
inline GroupRingElement expand_bracket_product(const std::vector<BracketBlock>& blocks) {
    std::int32_t n = 0;
    for (const auto& block : blocks) {
        if (block.size() < 2)
            throw std::invalid_argument("expand_bracket_product: block of size < 2");
        n += static_cast<std::int32_t>(block.size());
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& block : blocks)
        for (std::int32_t v : block) {
            if (v < 1 || v > n)
                throw std::invalid_argument("expand_bracket_product: blocks do not partition [n]");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    for (bool b : seen)
        if (!b) throw std::invalid_argument("expand_bracket_product: blocks do not partition [n]");

    GroupRingElement out(n);
    for (auto& t : detail::expand_blocks(blocks)) out.add(Permutation(std::move(t.word)), t.sign);
    return out;
}

// All ways to partition `elements` into bracket-ordered blocks of size >= 2,
// blocks sorted by minima. Yields derangements(|elements|) block lists.
inline std::vector<std::vector<BracketBlock>> bracket_partitions(
    std::vector<std::int32_t> elements) {
    std::sort(elements.begin(), elements.end());
    std::vector<std::vector<BracketBlock>> out;
    std::vector<BracketBlock> cur;

    auto rec = [&](auto&& self, std::vector<std::int32_t> rest) -> void {
        if (rest.empty()) {
            out.push_back(cur);
            return;
        }
        const std::int32_t head = rest.front();
        std::vector<std::int32_t> pool(rest.begin() + 1, rest.end());
        const std::size_t m = pool.size();
        // choose the rest of head's block as a nonempty subset of pool
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
            std::vector<std::int32_t> tail, remaining;
            for (std::size_t i = 0; i < m; ++i)
                ((mask >> i) & 1 ? tail : remaining).push_back(pool[i]);
            std::sort(tail.begin(), tail.end());
            do {
                BracketBlock block{head};
                block.insert(block.end(), tail.begin(), tail.end());
                cur.push_back(std::move(block));
                self(self, remaining);
                cur.pop_back();
            } while (std::next_permutation(tail.begin(), tail.end()));
        }
    };
    if (elements.size() > 24)
        throw std::invalid_argument("bracket_partitions: set too large");
    rec(rec, elements);
    return out;
}

}  // namespace fitails
