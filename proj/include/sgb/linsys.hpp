#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sgb/division.hpp"
#include "sgb/errors.hpp"
#include "sgb/groebner.hpp"
#include "sgb/polyvec.hpp"

namespace sgb {

/// An r x s matrix over R[x_1..x_n], stored as r row vectors of rank s.
template <EuclideanDomain R>
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t nvars, std::size_t cols) : nvars_(nvars), cols_(cols) {}
    PolyMatrix(std::size_t nvars, std::size_t cols, std::vector<PolyVector<R>> rows)
        : nvars_(nvars), cols_(cols), rows_(std::move(rows)) {
        for (const auto& row : rows_) {
            if (row.nvars() != nvars_ || row.rank() != cols_)
                throw ShapeError("matrix row of shape " + shape_string(row.nvars(), row.rank()) +
                                 " in a matrix of shape " + shape_string(nvars_, cols_));
        }
    }

    /// entries[i][j] are rank-1 polynomials; all rows must have the same length.
    static PolyMatrix from_entries(std::size_t nvars, const std::vector<std::vector<Polynomial<R>>>& entries) {
        if (entries.empty()) throw std::invalid_argument("matrix has no rows");
        const std::size_t cols = entries.front().size();
        PolyMatrix m(nvars, cols);
        for (const auto& row : entries) {
            if (row.size() != cols) throw std::invalid_argument("matrix rows have different lengths");
            m.rows_.push_back(assemble(nvars, row));
        }
        return m;
    }

    /// The vector (p_1, ..., p_k) from polynomials.
    static PolyVector<R> assemble(std::size_t nvars, const std::vector<Polynomial<R>>& entries) {
        std::vector<TermVector<R>> ts;
        for (std::size_t j = 0; j < entries.size(); ++j) {
            const auto& p = entries[j];
            if (p.nvars() != nvars || p.rank() != 1)
                throw ShapeError("matrix entry of shape " + shape_string(p.nvars(), p.rank()) +
                                 " where a polynomial over " + std::to_string(nvars) + " variables is expected");
            for (const auto& t : p.terms()) ts.push_back({t.coeff, MonomialVector{t.mono.exps, j}});
        }
        return PolyVector<R>(nvars, entries.size(), std::move(ts));
    }

    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t nrows() const noexcept { return rows_.size(); }
    std::size_t ncols() const noexcept { return cols_; }
    const std::vector<PolyVector<R>>& rows() const noexcept { return rows_; }
    const PolyVector<R>& row(std::size_t i) const { return rows_.at(i); }
    Polynomial<R> entry(std::size_t i, std::size_t j) const { return rows_.at(i).component(j); }

    PolyMatrix transpose() const {
        std::vector<std::vector<Polynomial<R>>> t(cols_, std::vector<Polynomial<R>>(rows_.size(), Polynomial<R>(nvars_, 1)));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < cols_; ++j) t[j][i] = entry(i, j);
        }
        PolyMatrix out(nvars_, rows_.size());
        for (const auto& r : t) out.rows_.push_back(assemble(nvars_, r));
        return out;
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t nvars_ = 0;
    std::size_t cols_ = 0;
    std::vector<PolyVector<R>> rows_;
};

/// Components [from, from + count) of f as a vector of rank count.
template <EuclideanDomain R>
PolyVector<R> slice(const PolyVector<R>& f, std::size_t from, std::size_t count) {
    if (from + count > f.rank()) throw ShapeError("slice beyond the rank of the vector");
    std::vector<TermVector<R>> ts;
    for (const auto& t : f.terms()) {
        if (t.mono.comp >= from && t.mono.comp < from + count)
            ts.push_back({t.coeff, MonomialVector{t.mono.exps, t.mono.comp - from}});
    }
    return PolyVector<R>(f.nvars(), count, std::move(ts));
}

/// A * x for x in R[x]^s.
template <EuclideanDomain R>
PolyVector<R> apply(const PolyMatrix<R>& a, const PolyVector<R>& x) {
    if (x.rank() != a.ncols() || x.nvars() != a.nvars())
        throw ShapeError("cannot apply a matrix of shape " + shape_string(a.nvars(), a.ncols()) + " to a vector of shape " +
                         shape_string(x.nvars(), x.rank()));
    std::vector<Polynomial<R>> out;
    for (std::size_t i = 0; i < a.nrows(); ++i) {
        Polynomial<R> acc(a.nvars(), 1);
        for (std::size_t j = 0; j < a.ncols(); ++j) acc += multiply(x.component(j), a.entry(i, j));
        out.push_back(std::move(acc));
    }
    return PolyMatrix<R>::assemble(a.nvars(), out);
}

/// The row split of a Groebner normal form against a boundary column r:
///
///     B * *
///     0 v S
///     0 0 D
template <EuclideanDomain R>
struct GnfBlocks {
    std::size_t b_end = 0;  // rows [0, b_end) have a nonzero entry among the first r columns
    std::size_t v_end = 0;  // rows [b_end, v_end) lead in column r
    PolyMatrix<R> B;
    std::vector<Polynomial<R>> v;
    PolyMatrix<R> S;
    PolyMatrix<R> D;
};

template <EuclideanDomain R>
struct GnfResult {
    PolyMatrix<R> H;
    AdmissibleOrder order;

    /// Requires r < number of columns.
    GnfBlocks<R> split(std::size_t r) const {
        const std::size_t cols = H.ncols();
        if (r >= cols) throw std::out_of_range("split column " + std::to_string(r + 1) + " out of range");
        const std::size_t rest = cols - r - 1;
        GnfBlocks<R> out;
        out.B = PolyMatrix<R>(H.nvars(), r);
        out.S = PolyMatrix<R>(H.nvars(), rest);
        out.D = PolyMatrix<R>(H.nvars(), rest);
        std::vector<PolyVector<R>> b_rows, s_rows, d_rows;
        std::size_t i = 0;
        auto zero_prefix = [&](const PolyVector<R>& f, std::size_t upto) {
            for (const auto& t : f.terms()) {
                if (t.mono.comp < upto) return false;
            }
            return true;
        };
        for (; i < H.nrows() && !zero_prefix(H.row(i), r); ++i) b_rows.push_back(slice(H.row(i), 0, r));
        out.b_end = i;
        for (; i < H.nrows() && !zero_prefix(H.row(i), r + 1); ++i) {
            out.v.push_back(H.row(i).component(r));
            s_rows.push_back(slice(H.row(i), r + 1, rest));
        }
        out.v_end = i;
        for (; i < H.nrows(); ++i) d_rows.push_back(slice(H.row(i), r + 1, rest));
        out.B = PolyMatrix<R>(H.nvars(), r, std::move(b_rows));
        out.S = PolyMatrix<R>(H.nvars(), rest, std::move(s_rows));
        out.D = PolyMatrix<R>(H.nvars(), rest, std::move(d_rows));
        return out;
    }
};

/// Groebner normal form: the reduced strong Groebner basis of the row module,
/// rows strictly decreasing under <=_P. Zero rows are dropped first.
template <EuclideanDomain R>
GnfResult<R> gnf(const PolyMatrix<R>& a, const AdmissibleOrder& ord, GroebnerOptions<R> options = {}) {
    if (a.nrows() == 0 || a.ncols() == 0) throw std::invalid_argument("gnf: empty matrix");
    ord.check_shape(a.nvars(), a.ncols());
    std::vector<PolyVector<R>> rows;
    for (const auto& row : a.rows()) {
        if (!row.is_zero()) rows.push_back(row);
    }
    GnfResult<R> out{PolyMatrix<R>(a.nvars(), a.ncols()), ord};
    if (rows.empty()) return out;
    out.H = PolyMatrix<R>(a.nvars(), a.ncols(), reduced_strong_groebner(rows, ord, std::move(options)));
    return out;
}

/// The i-th step of H (0-based column): column i of the rows whose first
/// nonzero entry is in column i.
template <EuclideanDomain R>
std::vector<Polynomial<R>> fork_basis(const PolyMatrix<R>& h, std::size_t i) {
    if (i >= h.ncols()) throw std::out_of_range("fork_basis: column " + std::to_string(i + 1) + " out of range");
    std::vector<Polynomial<R>> out;
    for (const auto& row : h.rows()) {
        if (row.is_zero()) continue;
        std::size_t first = row.rank();
        for (const auto& t : row.terms()) first = std::min(first, t.mono.comp);
        if (first == i) out.push_back(row.component(i));
    }
    return out;
}

template <EuclideanDomain R>
struct NoSolution {
    std::vector<Polynomial<R>> colon_basis;  // reduced strong basis of (col(A) : b)
};

template <EuclideanDomain R>
struct Solution {
    PolyVector<R> particular;  // <=_P-minimal solution
    PolyMatrix<R> kernel;      // rows: reduced strong basis of ker(A)
};

template <EuclideanDomain R>
using SolveResult = std::variant<NoSolution<R>, Solution<R>>;

/// Monomial orders for the columns of the solve construction. Empty means lex
/// everywhere; s orders give <=_1..<=_s (with lex for <=_-1 and <=_0); s + 2
/// orders give <=_-1, <=_0, <=_1..<=_s.
inline AdmissibleOrder solve_order(std::size_t r, std::size_t s, const std::vector<MonomialOrder>& orders) {
    MonomialOrder minus1 = MonomialOrder::lex(), zero = MonomialOrder::lex();
    std::vector<MonomialOrder> tail(s, MonomialOrder::lex());
    if (orders.size() == s + 2) {
        minus1 = orders[0];
        zero = orders[1];
        tail.assign(orders.begin() + 2, orders.end());
    } else if (orders.size() == s) {
        tail = orders;
    } else if (!orders.empty()) {
        throw ShapeError("solve expects " + std::to_string(s) + " or " + std::to_string(s + 2) +
                         " column orders, got " + std::to_string(orders.size()));
    }
    std::vector<MonomialOrder> cols(r, minus1);
    cols.push_back(zero);
    cols.insert(cols.end(), tail.begin(), tail.end());
    return AdmissibleOrder::position_over_term(std::move(cols));
}

namespace detail {

template <EuclideanDomain R>
PolyVector<R> unit_row(std::size_t nvars, const std::vector<Polynomial<R>>& head, std::size_t width, std::size_t one_at) {
    std::vector<Polynomial<R>> entries = head;
    for (std::size_t j = 0; j < width; ++j) {
        entries.push_back(j == one_at ? Polynomial<R>::constant(nvars, 1, R(1L)) : Polynomial<R>(nvars, 1));
    }
    return PolyMatrix<R>::assemble(nvars, entries);
}

}  // namespace detail

/// Solves A z = b over R[x]. `b` has rank r (the row count of A).
template <EuclideanDomain R>
SolveResult<R> solve(const PolyMatrix<R>& a, const PolyVector<R>& b, const std::vector<MonomialOrder>& orders = {},
                     GroebnerOptions<R> options = {}) {
    const std::size_t r = a.nrows(), s = a.ncols(), n = a.nvars();
    if (r == 0 || s == 0) throw std::invalid_argument("solve: empty matrix");
    if (b.rank() != r || b.nvars() != n)
        throw ShapeError("right-hand side of shape " + shape_string(b.nvars(), b.rank()) + " for a matrix of shape " +
                         shape_string(n, r) + " x " + std::to_string(s));
    // A' = [ -b^T | I_{s+1} ; A^T | ]
    std::vector<PolyVector<R>> rows;
    std::vector<Polynomial<R>> head;
    for (std::size_t i = 0; i < r; ++i) head.push_back(-b.component(i));
    rows.push_back(detail::unit_row(n, head, s + 1, 0));
    for (std::size_t j = 0; j < s; ++j) {
        head.clear();
        for (std::size_t i = 0; i < r; ++i) head.push_back(a.entry(i, j));
        rows.push_back(detail::unit_row(n, head, s + 1, j + 1));
    }
    PolyMatrix<R> aprime(n, r + s + 1, std::move(rows));
    GnfResult<R> g = gnf(aprime, solve_order(r, s, orders), std::move(options));
    GnfBlocks<R> blocks = g.split(r);
    const Polynomial<R> one = Polynomial<R>::constant(n, 1, R(1L));
    if (blocks.v.size() == 1 && blocks.v.front() == one) {
        return Solution<R>{blocks.S.row(0), std::move(blocks.D)};
    }
    return NoSolution<R>{std::move(blocks.v)};
}

/// Rows of D: the reduced strong Groebner basis of ker(A) in Groebner normal
/// form. `orders` are <=_-1 followed by <=_1..<=_s, or <=_1..<=_s, or empty.
template <EuclideanDomain R>
PolyMatrix<R> kernel(const PolyMatrix<R>& a, const std::vector<MonomialOrder>& orders = {},
                     GroebnerOptions<R> options = {}) {
    const std::size_t r = a.nrows(), s = a.ncols(), n = a.nvars();
    if (r == 0 || s == 0) throw std::invalid_argument("kernel: empty matrix");
    MonomialOrder minus1 = MonomialOrder::lex();
    std::vector<MonomialOrder> tail(s, MonomialOrder::lex());
    if (orders.size() == s + 1) {
        minus1 = orders[0];
        tail.assign(orders.begin() + 1, orders.end());
    } else if (orders.size() == s) {
        tail = orders;
    } else if (!orders.empty()) {
        throw ShapeError("kernel expects " + std::to_string(s) + " or " + std::to_string(s + 1) +
                         " column orders, got " + std::to_string(orders.size()));
    }
    std::vector<MonomialOrder> cols(r, minus1);
    cols.insert(cols.end(), tail.begin(), tail.end());
    // [A^T | I_s]
    std::vector<PolyVector<R>> rows;
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Polynomial<R>> head;
        for (std::size_t i = 0; i < r; ++i) head.push_back(a.entry(i, j));
        rows.push_back(detail::unit_row(n, head, s, j));
    }
    GnfResult<R> g = gnf(PolyMatrix<R>(n, r + s, std::move(rows)),
                         AdmissibleOrder::position_over_term(std::move(cols)), std::move(options));
    std::vector<PolyVector<R>> d;
    for (const auto& row : g.H.rows()) {
        bool lower = true;
        for (const auto& t : row.terms()) lower = lower && t.mono.comp >= r;
        if (lower) d.push_back(slice(row, r, s));
    }
    return PolyMatrix<R>(n, s, std::move(d));
}

/// d in <d_1, ..., d_m>.
template <EuclideanDomain R>
bool ideal_member(const Polynomial<R>& d, const std::vector<Polynomial<R>>& generators) {
    if (generators.empty()) return d.is_zero();
    PolyMatrix<R> a = PolyMatrix<R>::from_entries(d.nvars(), {generators});
    return std::holds_alternative<Solution<R>>(solve(a, d));
}

/// Exact quotient p / d in R[x] by Euclidean division; throws if d does not
/// divide p.
template <EuclideanDomain R>
Polynomial<R> divide_exact(const Polynomial<R>& p, const Polynomial<R>& d, const AdmissibleOrder& ord = {}) {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    if (p.is_zero()) return Polynomial<R>(p.nvars(), 1);
    Expression<R> e = euclidean_divide(p, std::vector<Polynomial<R>>{d}, ord);
    if (!e.remainder.is_zero()) throw DomainError("divide_exact: nonzero remainder");
    std::vector<TermVector<R>> ts;
    for (const auto& st : e.steps) ts.push_back({st.coeff, MonomialVector{st.mono, 0}});
    return Polynomial<R>(p.nvars(), 1, std::move(ts));
}

template <EuclideanDomain R>
struct LcmGcd {
    Polynomial<R> lcm;
    Polynomial<R> gcd;
};

/// lcm from the kernel of [[1, -d1, 0], [1, 0, -d2]] (first fork), and
/// gcd = d1 * d2 / lcm. Both are normalized under lex.
template <EuclideanDomain R>
LcmGcd<R> lcm_gcd(const Polynomial<R>& d1, const Polynomial<R>& d2) {
    if (d1.is_zero() || d2.is_zero()) throw DomainError("lcm_gcd: zero argument");
    PolyVector<R>::check_same_shape(d1, d2);
    const std::size_t n = d1.nvars();
    const Polynomial<R> one = Polynomial<R>::constant(n, 1, R(1L));
    const Polynomial<R> zero(n, 1);
    PolyMatrix<R> a = PolyMatrix<R>::from_entries(n, {{one, -d1, zero}, {one, zero, -d2}});
    PolyMatrix<R> d = kernel(a);
    std::vector<Polynomial<R>> fork = fork_basis(d, 0);
    if (fork.empty()) throw std::logic_error("lcm_gcd: empty first fork");
    const AdmissibleOrder lex;
    Polynomial<R> l = fork.back();
    Polynomial<R> g = divide_exact(multiply(d1, d2), l, lex);
    g = g.scale(normalizing_unit(g.leading(lex).coeff));
    return {std::move(l), std::move(g)};
}

namespace detail {

template <EuclideanDomain R>
std::vector<std::vector<R>> constant_gnf(const std::vector<std::vector<R>>& m) {
    if (m.empty()) return {};
    const std::size_t cols = m.front().size();
    std::vector<std::vector<Polynomial<R>>> entries;
    for (const auto& row : m) {
        if (row.size() != cols) throw std::invalid_argument("matrix rows have different lengths");
        std::vector<Polynomial<R>> e;
        for (const auto& c : row) e.push_back(Polynomial<R>::constant(1, 1, c));
        entries.push_back(std::move(e));
    }
    if (cols == 0) return {};
    GnfResult<R> g = gnf(PolyMatrix<R>::from_entries(1, entries), AdmissibleOrder::pot_lex());
    std::vector<std::vector<R>> out;
    for (const auto& row : g.H.rows()) {
        std::vector<R> r;
        for (std::size_t j = 0; j < cols; ++j) r.push_back(row.coefficient(MonomialVector{Exponents{0}, j}));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace detail

/// Integer matrix as constants in Z[x_1]; the Groebner normal form is the
/// Hermite normal form with entries above pivots in (-p/2, p/2].
inline std::vector<std::vector<Integer>> hermite_normal_form(const std::vector<std::vector<Integer>>& m) {
    return detail::constant_gnf(m);
}

/// Reduced row echelon form over Q, zero rows dropped.
inline std::vector<std::vector<Rational>> row_reduce(const std::vector<std::vector<Rational>>& m) {
    return detail::constant_gnf(m);
}

}  // namespace sgb
