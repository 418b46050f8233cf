#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fitails/injections.hpp"
#include "fitails/integer_linalg.hpp"
#include "fitails/numeric.hpp"
#include "fitails/xi.hpp"

namespace fitails {

class parse_error : public std::runtime_error {
  public:
    parse_error(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// A presentation matrix of an FI-module: generator degrees a_i, relation
// degrees b_j, and entries that are Z-combinations of injections [a_i]->[b_j].
class FIPresentation {
  public:
    using Entry = std::map<Injection, Int>;

    FIPresentation(std::vector<int> generator_degrees, std::vector<int> relation_degrees)
        : gens_(std::move(generator_degrees)), rels_(std::move(relation_degrees)) {
        for (int a : gens_)
            if (a < 0) throw std::invalid_argument("FIPresentation: negative degree");
        for (int b : rels_)
            if (b < 0) throw std::invalid_argument("FIPresentation: negative degree");
        entries_.assign(gens_.size() * std::max<std::size_t>(rels_.size(), 1), Entry{});
    }

    int generator_count() const { return static_cast<int>(gens_.size()); }
    int relation_count() const { return static_cast<int>(rels_.size()); }
    const std::vector<int>& generator_degrees() const { return gens_; }
    const std::vector<int>& relation_degrees() const { return rels_; }

    // max over all generator and relation degrees; 0 for an empty presentation
    int degree() const {
        int d = 0;
        for (int a : gens_) d = std::max(d, a);
        for (int b : rels_) d = std::max(d, b);
        return d;
    }

    const Entry& entry(int i, int j) const { return entries_[index(i, j)]; }

    void add_term(int i, int j, const Injection& f, const Int& c) {
        if (f.domain_size() != gens_[static_cast<std::size_t>(i)] ||
            f.codomain_size() != rels_[static_cast<std::size_t>(j)])
            throw std::invalid_argument("FIPresentation: injection degrees do not match entry");
        if (c == 0) return;
        Entry& e = entries_[index(i, j)];
        auto [it, inserted] = e.emplace(f, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) e.erase(it);
        }
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "generators:";
        for (int a : gens_) os << ' ' << a;
        os << "\nrelations:";
        for (int b : rels_) os << ' ' << b;
        os << '\n';
        for (int i = 0; i < generator_count(); ++i)
            for (int j = 0; j < relation_count(); ++j) {
                const Entry& e = entry(i, j);
                if (e.empty()) continue;
                os << "entry " << i + 1 << ' ' << j + 1 << ':';
                for (const auto& [f, c] : e) {
                    os << ' ';
                    if (c >= 0) os << '+';
                    os << c.str() << '*' << f.to_string();
                }
                os << '\n';
            }
        return os.str();
    }

  private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * std::max<std::size_t>(rels_.size(), 1) +
               static_cast<std::size_t>(j);
    }

    std::vector<int> gens_;
    std::vector<int> rels_;
    std::vector<Entry> entries_;
};

namespace detail {

inline std::vector<int> parse_degree_list(const std::string& body, int line) {
    std::vector<int> out;
    std::istringstream is(body);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument("");
            out.push_back(v);
        } catch (...) {
            throw parse_error(line, "bad degree '" + tok + "'");
        }
    }
    return out;
}

}  // namespace detail

// File format:
//   generators: a1 a2 ... ag
//   relations:  b1 b2 ... br
//   entry i j: <signed integer>*[im1,...] <signed integer>*[...] ...
// '#' starts a comment line; omitted entries are zero.
inline FIPresentation parse_presentation(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;

    std::vector<int> gens, rels;
    bool have_gens = false, have_rels = false;
    std::vector<std::tuple<int, int, int, std::string>> entry_lines;  // line, i, j, body
    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);

        auto colon = line.find(':');
        if (colon == std::string::npos) throw parse_error(line_no, "expected ':'");
        std::string head = line.substr(0, colon);
        while (!head.empty() && (head.back() == ' ' || head.back() == '\t')) head.pop_back();
        std::string body = line.substr(colon + 1);

        if (head == "generators") {
            if (have_gens) throw parse_error(line_no, "duplicate generators line");
            gens = detail::parse_degree_list(body, line_no);
            have_gens = true;
        } else if (head == "relations") {
            if (have_rels) throw parse_error(line_no, "duplicate relations line");
            rels = detail::parse_degree_list(body, line_no);
            have_rels = true;
        } else if (head.rfind("entry", 0) == 0) {
            std::istringstream hs(head.substr(5));
            int i = 0, j = 0;
            if (!(hs >> i >> j)) throw parse_error(line_no, "expected 'entry i j:'");
            std::string extra;
            if (hs >> extra) throw parse_error(line_no, "trailing tokens after entry indices");
            entry_lines.emplace_back(line_no, i, j, body);
        } else {
            throw parse_error(line_no, "unknown directive '" + head + "'");
        }
    }
    if (!have_gens) throw parse_error(line_no, "missing generators line");
    if (!have_rels) throw parse_error(line_no, "missing relations line");

    FIPresentation p(gens, rels);
    std::vector<bool> declared(gens.size() * std::max<std::size_t>(rels.size(), 1), false);
    for (const auto& [ln, i, j, body] : entry_lines) {
        if (i < 1 || i > p.generator_count()) throw parse_error(ln, "generator index out of range");
        if (j < 1 || j > p.relation_count()) throw parse_error(ln, "relation index out of range");
        std::size_t flat = static_cast<std::size_t>(i - 1) * std::max<std::size_t>(rels.size(), 1) +
                           static_cast<std::size_t>(j - 1);
        if (declared[flat]) throw parse_error(ln, "duplicate entry declaration");
        declared[flat] = true;

        std::istringstream ts(body);
        std::string term;
        while (ts >> term) {
            auto star = term.find('*');
            if (star == std::string::npos)
                throw parse_error(ln, "expected <coefficient>*[images] in '" + term + "'");
            std::string coef = term.substr(0, star);
            if (!coef.empty() && coef[0] == '+') coef.erase(0, 1);
            if (coef.empty() || coef.find_first_not_of("-0123456789") != std::string::npos ||
                (coef[0] == '-' && coef.size() == 1))
                throw parse_error(ln, "bad coefficient in '" + term + "'");
            Int c(coef);
            Injection f = Injection::identity(0);
            try {
                f = parse_injection(term.substr(star + 1), rels[static_cast<std::size_t>(j - 1)]);
            } catch (const std::exception& e) {
                throw parse_error(ln, e.what());
            }
            if (f.domain_size() != gens[static_cast<std::size_t>(i - 1)])
                throw parse_error(ln, "injection arity does not match generator degree");
            p.add_term(i - 1, j - 1, f, c);
        }
    }
    return p;
}

// The block matrix of Xi(ell) evaluated at the entries of Z: rows indexed by
// the Xi(ell) bases of the generator degrees, columns by those of the
// relation degrees, block (i,j) the matrix of act(entry(i,j), -).
inline IntMatrix evaluate_xi(const FIPresentation& z, int ell) {
    std::vector<std::vector<XiWord>> row_bases, col_bases;
    std::vector<int> row_offsets, col_offsets;
    int total_rows = 0, total_cols = 0;
    for (int a : z.generator_degrees()) {
        row_offsets.push_back(total_rows);
        row_bases.push_back(xi_basis(ell, a));
        total_rows += static_cast<int>(row_bases.back().size());
    }
    for (int b : z.relation_degrees()) {
        col_offsets.push_back(total_cols);
        col_bases.push_back(xi_basis(ell, b));
        total_cols += static_cast<int>(col_bases.back().size());
    }

    IntMatrix out(total_rows, total_cols);
    for (int i = 0; i < z.generator_count(); ++i) {
        std::map<std::vector<std::int32_t>, int> row_index;
        for (std::size_t r = 0; r < row_bases[static_cast<std::size_t>(i)].size(); ++r)
            row_index[row_bases[static_cast<std::size_t>(i)][r].ranks()] = static_cast<int>(r);
        for (int j = 0; j < z.relation_count(); ++j) {
            const auto& entry = z.entry(i, j);
            if (entry.empty()) continue;
            const auto& cols = col_bases[static_cast<std::size_t>(j)];
            for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
                for (const auto& [f, coeff] : entry) {
                    XiVector image = act(f, XiVector::basis_vector(cols[cidx]));
                    for (const auto& [r, c] : image.terms())
                        out.at(row_offsets[static_cast<std::size_t>(i)] + row_index.at(r),
                               col_offsets[static_cast<std::size_t>(j)] + static_cast<int>(cidx)) +=
                            coeff * c;
                }
        }
    }
    return out;
}

// Labels for the rows/columns of evaluate_xi in the same order.
inline std::vector<std::string> xi_row_labels(const FIPresentation& z, int ell) {
    std::vector<std::string> out;
    for (int a : z.generator_degrees())
        for (const auto& w : xi_basis(ell, a)) out.push_back(w.to_string());
    return out;
}
inline std::vector<std::string> xi_col_labels(const FIPresentation& z, int ell) {
    std::vector<std::string> out;
    for (int b : z.relation_degrees())
        for (const auto& w : xi_basis(ell, b)) out.push_back(w.to_string());
    return out;
}

// The degree-n presentation matrix: rows over the disjoint union of the
// FI(a_i, n), columns over the FI(b_j, n); a term c*f in entry (i,j) sends
// the column of g in FI(b_j,n) to c at the row of g o f. The cokernel is M_n.
inline IntMatrix presentation_matrix_at(const FIPresentation& z, int n) {
    std::vector<std::vector<Injection>> row_sets, col_sets;
    std::vector<int> row_offsets, col_offsets;
    int total_rows = 0, total_cols = 0;
    for (int a : z.generator_degrees()) {
        row_offsets.push_back(total_rows);
        row_sets.push_back(enumerate_injections(a, n));
        total_rows += static_cast<int>(row_sets.back().size());
    }
    for (int b : z.relation_degrees()) {
        col_offsets.push_back(total_cols);
        col_sets.push_back(enumerate_injections(b, n));
        total_cols += static_cast<int>(col_sets.back().size());
    }

    IntMatrix out(total_rows, total_cols);
    for (int i = 0; i < z.generator_count(); ++i) {
        std::map<Injection, int> row_index;
        for (std::size_t r = 0; r < row_sets[static_cast<std::size_t>(i)].size(); ++r)
            row_index.emplace(row_sets[static_cast<std::size_t>(i)][r], static_cast<int>(r));
        for (int j = 0; j < z.relation_count(); ++j) {
            const auto& entry = z.entry(i, j);
            if (entry.empty()) continue;
            const auto& cols = col_sets[static_cast<std::size_t>(j)];
            for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
                for (const auto& [f, coeff] : entry)
                    out.at(row_offsets[static_cast<std::size_t>(i)] +
                               row_index.at(compose(f, cols[cidx])),
                           col_offsets[static_cast<std::size_t>(j)] + static_cast<int>(cidx)) +=
                        coeff;
        }
    }
    return out;
}

}  // namespace fitails
