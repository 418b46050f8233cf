#pragma once

#include <future>
#include <stdexcept>
#include <string>
#include <vector>

#include "fitails/integer_linalg.hpp"
#include "fitails/numeric.hpp"
#include "fitails/presentation.hpp"

namespace fitails {

// The tail data of a presented FI-module: presentation degree d, the tail
// invariants A_0..A_d, and the degree from which the closed form is valid.
struct TailProfile {
    int presentation_degree = 0;
    std::vector<AbelianGroup> invariants;  // A_0 .. A_d
    int stable_from = 0;                   // max(2d-1, 0)
};

// A_ell = coker of Xi(ell) evaluated at the presentation matrix, ell = 0..d.
inline TailProfile tail_invariants(const FIPresentation& z) {
    TailProfile out;
    out.presentation_degree = z.degree();
    out.stable_from = std::max(2 * out.presentation_degree - 1, 0);
    std::vector<std::future<AbelianGroup>> jobs;
    for (int ell = 0; ell <= out.presentation_degree; ++ell)
        jobs.push_back(std::async(std::launch::async,
                                  [&z, ell] { return cokernel(evaluate_xi(z, ell)); }));
    for (auto& j : jobs) out.invariants.push_back(j.get());
    return out;
}

// M_n = (+)_ell A_ell^(C(n,ell) - C(n,ell-1)) for n in the stable range.
inline AbelianGroup evaluate_tail(const TailProfile& profile, long long n) {
    if (n < profile.stable_from)
        throw std::invalid_argument("evaluate_tail: n = " + std::to_string(n) +
                                    " is below the stable range (requires n >= " +
                                    std::to_string(profile.stable_from) + ")");
    std::vector<std::pair<AbelianGroup, Int>> parts;
    for (int ell = 0; ell <= profile.presentation_degree; ++ell) {
        Int mult = binomial(n, ell) - binomial(n, ell - 1);
        parts.emplace_back(profile.invariants[static_cast<std::size_t>(ell)], mult);
    }
    return AbelianGroup::direct_sum(parts);
}

// Largest ell with A_ell nonzero, or -1 when the tail vanishes.
inline int effective_poly_degree(const TailProfile& profile) {
    for (int ell = profile.presentation_degree; ell >= 0; --ell)
        if (!profile.invariants[static_cast<std::size_t>(ell)].is_trivial()) return ell;
    return -1;
}

struct OracleReport {
    long long n = 0;
    bool asserted = false;  // n within the stable range
    AbelianGroup predicted;
    AbelianGroup actual;
    bool equal = false;
};

inline constexpr std::size_t kDefaultMatrixCellCap = 2'000'000;

// Compares the closed form against a direct cokernel of the degree-n
// presentation matrix. Below the stable range both groups are reported but
// no verdict is asserted.
inline OracleReport oracle_check(const FIPresentation& z, long long n,
                                 std::size_t max_matrix_cells = kDefaultMatrixCellCap) {
    TailProfile profile = tail_invariants(z);
    OracleReport rep;
    rep.n = n;
    rep.asserted = n >= profile.stable_from;

    Int cells = 0;
    Int rows = 0, cols = 0;
    for (int a : z.generator_degrees()) rows += falling_factorial(n, a);
    for (int b : z.relation_degrees()) cols += falling_factorial(n, b);
    cells = rows * cols;
    if (cells > Int(max_matrix_cells))
        throw std::invalid_argument("oracle_check: matrix size " + rows.str() + "x" + cols.str() +
                                    " exceeds the cell cap " + std::to_string(max_matrix_cells));

    rep.actual = cokernel(presentation_matrix_at(z, static_cast<int>(n)));
    if (rep.asserted) {
        rep.predicted = evaluate_tail(profile, n);
        rep.equal = rep.predicted == rep.actual;
    } else {
        std::vector<std::pair<AbelianGroup, Int>> parts;
        for (int ell = 0; ell <= profile.presentation_degree; ++ell)
            parts.emplace_back(profile.invariants[static_cast<std::size_t>(ell)],
                               std::max(binomial(n, ell) - binomial(n, ell - 1), Int(0)));
        rep.predicted = AbelianGroup::direct_sum(parts);
        rep.equal = rep.predicted == rep.actual;
    }
    return rep;
}

}  // namespace fitails
