#pragma once

// JSON views of the public types; only the CLI and tests need this header.

#include <string>

#include <json.hpp>

#include "fitails/fj.hpp"
#include "fitails/integer_linalg.hpp"
#include "fitails/presentation.hpp"
#include "fitails/tails.hpp"

namespace fitails {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const AbelianGroup& g) {
    ordered_json torsion = ordered_json::array();
    for (const Int& d : g.invariant_factors())
        torsion.push_back(to_long_checked(d, "torsion factor"));
    return ordered_json{{"free_rank", g.free_rank()}, {"torsion", std::move(torsion)}};
}

inline ordered_json to_json(const TailProfile& p) {
    ordered_json invs = ordered_json::array();
    for (const auto& g : p.invariants) invs.push_back(to_json(g));
    return ordered_json{{"d", p.presentation_degree},
                        {"stable_from", p.stable_from},
                        {"invariants", std::move(invs)},
                        {"poly_degree", effective_poly_degree(p)}};
}

inline ordered_json to_json(const OracleReport& r, int stable_from) {
    return ordered_json{{"n", r.n},
                        {"stable_from", stable_from},
                        {"asserted", r.asserted},
                        {"predicted", to_json(r.predicted)},
                        {"actual", to_json(r.actual)},
                        {"equal", r.equal}};
}

inline ordered_json matrix_to_json(const IntMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_long_checked(m.at(i, j), "matrix entry"));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json to_json(const FJBasisElement& b) {
    ordered_json blocks = ordered_json::array();
    for (const auto& block : b.blocks()) {
        ordered_json bl = ordered_json::array();
        for (auto v : block) bl.push_back(v);
        blocks.push_back(std::move(bl));
    }
    return ordered_json{{"level", b.level()},
                        {"f", b.f().to_string()},
                        {"blocks", std::move(blocks)},
                        {"print", b.to_string()}};
}

inline ordered_json to_json(const QRing& q) {
    ordered_json entries = ordered_json::array();
    for (int ell = 0; ell <= q.degree; ++ell)
        for (int m = 0; m <= q.degree; ++m) {
            const auto& e = q.entry(ell, m);
            ordered_json gens = ordered_json::array();
            for (const auto& g : e.lattice) gens.push_back(g.to_string());
            entries.push_back(ordered_json{{"source", ell},
                                           {"target", m},
                                           {"rank", e.lattice_rank()},
                                           {"generators", std::move(gens)}});
        }
    ordered_json products = ordered_json::array();
    for (const auto& p : q_ring_products(q)) {
        ordered_json coords = ordered_json::array();
        for (const Int& c : p.coordinates) coords.push_back(to_long_checked(c, "coordinate"));
        products.push_back(ordered_json{{"source", p.ell},
                                        {"mid", p.m},
                                        {"target", p.p},
                                        {"left", p.left_index},
                                        {"right", p.right_index},
                                        {"coordinates", std::move(coords)}});
    }
    return ordered_json{{"degree", q.degree},
                        {"total_rank", q.total_rank()},
                        {"entries", std::move(entries)},
                        {"products", std::move(products)}};
}

}  // namespace fitails
