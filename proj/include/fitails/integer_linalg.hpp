#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fitails/numeric.hpp"

namespace fitails {

// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
        a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t cell_count() const { return a_.size(); }

    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("IntMatrix: size mismatch in product");
        IntMatrix out(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const Int& v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols_; ++j) {
                    const Int& w = y.at(k, j);
                    if (w != 0) out.at(i, j) += v * w;
                }
            }
        return out;
    }

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

namespace detail {

struct OverflowSignal {};

template <typename T>
struct Arith {
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T neg(const T& a) { return -a; }
    static T quot(const T& a, const T& b) { return a / b; }
};

template <>
struct Arith<long long> {
    static long long add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static long long sub(long long a, long long b) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
        return r;
    }
    static long long neg(long long a) {
        if (a == LLONG_MIN) throw OverflowSignal{};
        return -a;
    }
    static long long quot(long long a, long long b) {
        if (b == -1 && a == LLONG_MIN) throw OverflowSignal{};
        return a / b;
    }
};

// Row/column elimination to Smith form. Transform accumulators are optional;
// the invariant a = u * input * v is maintained whenever they are present.
template <typename T>
class SmithEngine {
  public:
    SmithEngine(int rows, int cols, std::vector<T> data, bool with_transforms)
        : r_(rows), c_(cols), a_(std::move(data)), with_uv_(with_transforms) {
        if (with_uv_) {
            u_.assign(static_cast<std::size_t>(r_) * r_, T(0));
            v_.assign(static_cast<std::size_t>(c_) * c_, T(0));
            for (int i = 0; i < r_; ++i) u_[static_cast<std::size_t>(i) * r_ + i] = T(1);
            for (int j = 0; j < c_; ++j) v_[static_cast<std::size_t>(j) * c_ + j] = T(1);
        }
    }

    void run() {
        const int steps = std::min(r_, c_);
        for (int t = 0; t < steps; ++t) {
            if (!select_pivot(t)) break;
            for (;;) {
                bool clean = clear_column(t);
                clean = clear_row(t) && clean;
                if (!clean) {
                    select_pivot(t);  // entries moved; re-center on the smallest
                    continue;
                }
                if (fix_divisibility(t)) break;
                select_pivot(t);
            }
            if (a(t, t) < T(0)) negate_row(t);
        }
    }

    T& a(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const std::vector<T>& matrix() const { return a_; }
    const std::vector<T>& u() const { return u_; }
    const std::vector<T>& v() const { return v_; }

    std::vector<T> diagonal() const {
        std::vector<T> d;
        for (int t = 0; t < std::min(r_, c_); ++t) {
            const T& x = a_[static_cast<std::size_t>(t) * c_ + t];
            if (x == T(0)) break;
            d.push_back(x);
        }
        return d;
    }

  private:
    using A = Arith<T>;

    static T abs_of(const T& x) { return x < T(0) ? A::neg(x) : x; }

    // Nearest quotient, |a - q*b| <= |b|/2.
    static T round_quot(const T& a, const T& b) {
        T q = A::quot(a, b);
        T r = A::sub(a, A::mul(q, b));
        if (r == T(0)) return q;
        T ar = abs_of(r), ab = abs_of(b);
        if (ar > A::sub(ab, ar)) q = A::add(q, (r < T(0)) == (b < T(0)) ? T(1) : A::neg(T(1)));
        return q;
    }

    // Minimal absolute value, ties broken by least fill (Markowitz count).
    bool select_pivot(int t) {
        std::vector<long long> row_nnz(static_cast<std::size_t>(r_ - t), 0);
        std::vector<long long> col_nnz(static_cast<std::size_t>(c_ - t), 0);
        for (int i = t; i < r_; ++i)
            for (int j = t; j < c_; ++j)
                if (a(i, j) != T(0)) {
                    ++row_nnz[static_cast<std::size_t>(i - t)];
                    ++col_nnz[static_cast<std::size_t>(j - t)];
                }
        int bi = -1, bj = -1;
        T best{};
        long long best_fill = 0;
        for (int i = t; i < r_; ++i)
            for (int j = t; j < c_; ++j) {
                const T& x = a(i, j);
                if (x == T(0)) continue;
                T ax = abs_of(x);
                long long fill = (row_nnz[static_cast<std::size_t>(i - t)] - 1) *
                                 (col_nnz[static_cast<std::size_t>(j - t)] - 1);
                if (bi < 0 || ax < best || (ax == best && fill < best_fill)) {
                    bi = i;
                    bj = j;
                    best = ax;
                    best_fill = fill;
                }
            }
        if (bi < 0) return false;
        if (bi != t) swap_rows(bi, t);
        if (bj != t) swap_cols(bj, t);
        return true;
    }

    bool clear_column(int t) {
        bool clean = true;
        for (int i = t + 1; i < r_; ++i) {
            while (a(i, t) != T(0)) {
                T q = round_quot(a(i, t), a(t, t));
                if (q != T(0)) row_axpy(i, t, q);
                if (a(i, t) != T(0)) {
                    swap_rows(i, t);
                    clean = false;
                }
            }
        }
        return clean;
    }

    bool clear_row(int t) {
        bool clean = true;
        for (int j = t + 1; j < c_; ++j) {
            while (a(t, j) != T(0)) {
                T q = round_quot(a(t, j), a(t, t));
                if (q != T(0)) col_axpy(j, t, q);
                if (a(t, j) != T(0)) {
                    swap_cols(j, t);
                    clean = false;
                }
            }
        }
        return clean;
    }

    // true when the pivot divides the whole remaining submatrix
    bool fix_divisibility(int t) {
        const T& p = a(t, t);
        if (p == T(1) || p == A::neg(T(1))) return true;
        for (int i = t + 1; i < r_; ++i)
            for (int j = t + 1; j < c_; ++j)
                if (A::sub(a(i, j), A::mul(A::quot(a(i, j), p), p)) != T(0)) {
                    row_add(t, i);
                    return false;
                }
        return true;
    }

    // row i -= q * row t
    void row_axpy(int i, int t, const T& q) {
        T* ri = &a_[static_cast<std::size_t>(i) * c_];
        T* rt = &a_[static_cast<std::size_t>(t) * c_];
        for (int k = 0; k < c_; ++k)
            if (rt[k] != T(0)) ri[k] = A::sub(ri[k], A::mul(q, rt[k]));
        if (with_uv_) {
            T* ui = &u_[static_cast<std::size_t>(i) * r_];
            T* ut = &u_[static_cast<std::size_t>(t) * r_];
            for (int k = 0; k < r_; ++k)
                if (ut[k] != T(0)) ui[k] = A::sub(ui[k], A::mul(q, ut[k]));
        }
    }

    void row_add(int dst, int src) {
        T* rd = &a_[static_cast<std::size_t>(dst) * c_];
        T* rs = &a_[static_cast<std::size_t>(src) * c_];
        for (int k = 0; k < c_; ++k)
            if (rs[k] != T(0)) rd[k] = A::add(rd[k], rs[k]);
        if (with_uv_) {
            T* ud = &u_[static_cast<std::size_t>(dst) * r_];
            T* us = &u_[static_cast<std::size_t>(src) * r_];
            for (int k = 0; k < r_; ++k)
                if (us[k] != T(0)) ud[k] = A::add(ud[k], us[k]);
        }
    }

    // col j -= q * col t
    void col_axpy(int j, int t, const T& q) {
        for (int i = 0; i < r_; ++i) {
            const T& x = a_[static_cast<std::size_t>(i) * c_ + t];
            if (x != T(0)) {
                T& y = a_[static_cast<std::size_t>(i) * c_ + j];
                y = A::sub(y, A::mul(q, x));
            }
        }
        if (with_uv_) {
            for (int i = 0; i < c_; ++i) {
                const T& x = v_[static_cast<std::size_t>(i) * c_ + t];
                if (x != T(0)) {
                    T& y = v_[static_cast<std::size_t>(i) * c_ + j];
                    y = A::sub(y, A::mul(q, x));
                }
            }
        }
    }

    void swap_rows(int i, int j) {
        for (int k = 0; k < c_; ++k)
            std::swap(a_[static_cast<std::size_t>(i) * c_ + k],
                      a_[static_cast<std::size_t>(j) * c_ + k]);
        if (with_uv_)
            for (int k = 0; k < r_; ++k)
                std::swap(u_[static_cast<std::size_t>(i) * r_ + k],
                          u_[static_cast<std::size_t>(j) * r_ + k]);
    }

    void swap_cols(int i, int j) {
        for (int k = 0; k < r_; ++k)
            std::swap(a_[static_cast<std::size_t>(k) * c_ + i],
                      a_[static_cast<std::size_t>(k) * c_ + j]);
        if (with_uv_)
            for (int k = 0; k < c_; ++k)
                std::swap(v_[static_cast<std::size_t>(k) * c_ + i],
                          v_[static_cast<std::size_t>(k) * c_ + j]);
    }

    void negate_row(int t) {
        for (int k = 0; k < c_; ++k) {
            T& x = a_[static_cast<std::size_t>(t) * c_ + k];
            if (x != T(0)) x = A::neg(x);
        }
        if (with_uv_)
            for (int k = 0; k < r_; ++k) {
                T& x = u_[static_cast<std::size_t>(t) * r_ + k];
                if (x != T(0)) x = A::neg(x);
            }
    }

    int r_, c_;
    std::vector<T> a_;
    std::vector<T> u_, v_;
    bool with_uv_;
};

inline std::optional<std::vector<long long>> to_int64(const IntMatrix& m) {
    std::vector<long long> out;
    out.reserve(m.cell_count());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Int& v = m.at(i, j);
            if (v > LLONG_MAX || v < LLONG_MIN) return std::nullopt;
            out.push_back(static_cast<long long>(v));
        }
    return out;
}

}  // namespace detail

struct SmithDecomposition {
    IntMatrix u, d, v;  // u * input * v = d
};

// U*M*V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    std::vector<Int> data;
    data.reserve(m.cell_count());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) data.push_back(m.at(i, j));
    detail::SmithEngine<Int> eng(m.rows(), m.cols(), std::move(data), true);
    eng.run();
    SmithDecomposition out{IntMatrix(m.rows(), m.rows()), IntMatrix(m.rows(), m.cols()),
                           IntMatrix(m.cols(), m.cols())};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.d.at(i, j) = eng.matrix()[static_cast<std::size_t>(i) * m.cols() + j];
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
            out.u.at(i, j) = eng.u()[static_cast<std::size_t>(i) * m.rows() + j];
    for (int i = 0; i < m.cols(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.v.at(i, j) = eng.v()[static_cast<std::size_t>(i) * m.cols() + j];
    return out;
}

// The nonzero diagonal of the Smith form (positive, divisibility chain).
// Runs in 64-bit arithmetic when possible, falling back to big integers.
inline std::vector<Int> smith_diagonal(const IntMatrix& m) {
    if (auto small = detail::to_int64(m)) {
        try {
            detail::SmithEngine<long long> eng(m.rows(), m.cols(), std::move(*small), false);
            eng.run();
            std::vector<Int> d;
            for (long long x : eng.diagonal()) d.emplace_back(x);
            return d;
        } catch (const detail::OverflowSignal&) {
            // retry below at full precision
        }
    }
    std::vector<Int> data;
    data.reserve(m.cell_count());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) data.push_back(m.at(i, j));
    detail::SmithEngine<Int> eng(m.rows(), m.cols(), std::move(data), false);
    eng.run();
    return eng.diagonal();
}

inline int rank(const IntMatrix& m) { return static_cast<int>(smith_diagonal(m).size()); }

inline bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    auto d = smith_diagonal(m);
    if (static_cast<int>(d.size()) != m.rows()) return false;
    for (const Int& x : d)
        if (x != 1) return false;
    return true;
}

// Basis of the kernel lattice {v in Z^cols : M v = 0}; saturated because the
// trailing columns of the unimodular V span it exactly.
inline std::vector<std::vector<Int>> kernel_saturated(const IntMatrix& m) {
    auto snf = smith_normal_form(m);
    int rk = 0;
    while (rk < std::min(m.rows(), m.cols()) && snf.d.at(rk, rk) != 0) ++rk;
    std::vector<std::vector<Int>> out;
    for (int j = rk; j < m.cols(); ++j) {
        std::vector<Int> col(static_cast<std::size_t>(m.cols()));
        for (int i = 0; i < m.cols(); ++i) col[static_cast<std::size_t>(i)] = snf.v.at(i, j);
        out.push_back(std::move(col));
    }
    return out;
}

// Integer solution of M x = rhs, if one exists.
inline std::optional<std::vector<Int>> solve(const IntMatrix& m, const std::vector<Int>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw std::invalid_argument("solve: bad rhs size");
    auto snf = smith_normal_form(m);
    std::vector<Int> ub(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        Int s = 0;
        for (int j = 0; j < m.rows(); ++j)
            if (snf.u.at(i, j) != 0) s += snf.u.at(i, j) * rhs[static_cast<std::size_t>(j)];
        ub[static_cast<std::size_t>(i)] = s;
    }
    std::vector<Int> y(static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        const Int& d = i < m.cols() ? snf.d.at(i, i) : Int(0);
        Int& b = ub[static_cast<std::size_t>(i)];
        if (d == 0) {
            if (b != 0) return std::nullopt;
        } else {
            if (b % d != 0) return std::nullopt;
            y[static_cast<std::size_t>(i)] = b / d;
        }
    }
    std::vector<Int> x(static_cast<std::size_t>(m.cols()));
    for (int i = 0; i < m.cols(); ++i) {
        Int s = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (snf.v.at(i, j) != 0 && y[static_cast<std::size_t>(j)] != 0)
                s += snf.v.at(i, j) * y[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = s;
    }
    return x;
}

// Exact inverse of a unimodular matrix, all arithmetic in Z.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse_unimodular: not square");
    auto snf = smith_normal_form(m);
    for (int i = 0; i < m.rows(); ++i)
        if (snf.d.at(i, i) != 1) throw std::invalid_argument("inverse_unimodular: |det| != 1");
    return snf.v * snf.u;
}

// Finitely generated abelian group in invariant-factor normal form.
class AbelianGroup {
  public:
    AbelianGroup() : free_rank_(0) {}
    AbelianGroup(long long free_rank, std::vector<Int> factors)
        : free_rank_(free_rank), factors_(std::move(factors)) {
        if (free_rank_ < 0) throw std::invalid_argument("AbelianGroup: negative rank");
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (factors_[i] < 2) throw std::invalid_argument("AbelianGroup: factor < 2");
            if (i > 0 && factors_[i] % factors_[i - 1] != 0)
                throw std::invalid_argument("AbelianGroup: broken divisibility chain");
        }
    }

    static AbelianGroup free(long long r) { return AbelianGroup(r, {}); }

    long long free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
    }

    // Human form: Z^r (+) Z/d1 (+) Z/d2 ...
    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        if (free_rank_ == 1) s = "Z";
        else if (free_rank_ > 1) s = "Z^" + std::to_string(free_rank_);
        for (const Int& d : factors_) {
            if (!s.empty()) s += " (+) ";
            s += "Z/" + d.str();
        }
        return s;
    }

    // Direct sum of (group, multiplicity) pairs, renormalized to a single
    // invariant-factor chain via prime-power exponents.
    static AbelianGroup direct_sum(const std::vector<std::pair<AbelianGroup, Int>>& parts) {
        Int free_total = 0;
        std::map<Int, std::vector<std::pair<int, Int>>> primes;  // p -> [(exp, count)]
        for (const auto& [g, mult] : parts) {
            if (mult < 0) throw std::invalid_argument("direct_sum: negative multiplicity");
            if (mult == 0) continue;
            free_total += mult * g.free_rank();
            for (const Int& d : g.invariant_factors())
                for (const auto& [p, e] : factorize(d)) primes[p].emplace_back(e, mult);
        }
        std::size_t chain_len = 0;
        for (auto& [p, es] : primes) {
            std::sort(es.begin(), es.end(), std::greater<>());
            Int total = 0;
            for (const auto& [e, cnt] : es) total += cnt;
            chain_len = std::max(chain_len,
                                 static_cast<std::size_t>(to_long_checked(total, "direct_sum")));
        }
        std::vector<Int> chain(chain_len, Int(1));  // chain[0] = largest factor
        for (const auto& [p, es] : primes) {
            std::size_t pos = 0;
            for (const auto& [e, cnt] : es) {
                Int pe = 1;
                for (int i = 0; i < e; ++i) pe *= p;
                long long c = to_long_checked(cnt, "direct_sum");
                for (long long i = 0; i < c; ++i) chain[pos++] *= pe;
            }
        }
        std::reverse(chain.begin(), chain.end());
        return AbelianGroup(to_long_checked(free_total, "direct_sum"), std::move(chain));
    }

  private:
    static std::vector<std::pair<Int, int>> factorize(Int n) {
        std::vector<std::pair<Int, int>> out;
        auto take = [&](const Int& p) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e) out.emplace_back(p, e);
        };
        take(2);
        Int p = 3;
        while (p * p <= n) {
            take(p);
            p += 2;
            if (p > 20000000)
                throw std::invalid_argument("AbelianGroup: torsion factor too large to normalize");
        }
        if (n > 1) out.emplace_back(n, 1);
        return out;
    }

    long long free_rank_;
    std::vector<Int> factors_;
};

// Z^rows modulo the column span: rows index the codomain basis.
inline AbelianGroup cokernel(const IntMatrix& m) {
    auto d = smith_diagonal(m);
    std::vector<Int> factors;
    for (const Int& x : d)
        if (x > 1) factors.push_back(x);
    return AbelianGroup(m.rows() - static_cast<long long>(d.size()), std::move(factors));
}

}  // namespace fitails
