#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "sgb/errors.hpp"
#include "sgb/euclid.hpp"
#include "sgb/monomial.hpp"

namespace sgb {

template <EuclideanDomain R>
struct TermVector {
    R coeff;
    MonomialVector mono;

    friend bool operator==(const TermVector&, const TermVector&) = default;
};

/// s | t: the coefficient divides in R and the monomial vector divides.
template <EuclideanDomain R>
bool divides_term(const TermVector<R>& s, const TermVector<R>& t) {
    return divides_mono(s.mono, t.mono) && divides(s.coeff, t.coeff);
}

/// The term (q, x^gamma) with q*x^gamma*s = t.
template <EuclideanDomain R>
std::pair<R, Exponents> quotient_term(const TermVector<R>& t, const TermVector<R>& s) {
    if (!divides_term(s, t)) throw DomainError("quotient_term: term vector does not divide");
    return {divexact(t.coeff, s.coeff), quotient_mono(t.mono, s.mono)};
}

/// Leading data of a nonzero polynomial vector under an admissible order.
template <EuclideanDomain R>
struct Lead {
    MonomialVector mono;  // Deg(f) = Lm(f)
    R coeff;              // Lc(f)

    TermVector<R> term() const { return {coeff, mono}; }
};

/// Deg_delta(f) = (Deg(f), delta(Lc(f))).
struct DegDelta {
    MonomialVector deg;
    Grade grade;

    friend bool operator==(const DegDelta&, const DegDelta&) = default;
};

/// (alpha, i, d) is below (beta, j, e): x^alpha | x^beta, i = j and d <= e.
inline bool div_delta_leq(const DegDelta& a, const DegDelta& b) {
    return a.deg.comp == b.deg.comp && divides(a.deg.exps, b.deg.exps) && a.grade <= b.grade;
}

/// The minimal elements of a finite set under div_delta_leq (duplicates
/// collapse to one representative).
inline std::vector<DegDelta> min_elements(const std::vector<DegDelta>& set) {
    std::vector<DegDelta> out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < set.size() && minimal; ++j) {
            if (i == j) continue;
            if (div_delta_leq(set[j], set[i]) && !(set[j] == set[i])) minimal = false;
        }
        if (minimal && std::find(out.begin(), out.end(), set[i]) == out.end()) out.push_back(set[i]);
    }
    return out;
}

/// An element of R[x_1..x_n]^k, stored as a sparse map from monomial vectors
/// to nonzero coefficients. Storage order is the MonomialVector key order and
/// independent of any admissible order.
template <EuclideanDomain R>
class PolyVector {
public:
    using Term = TermVector<R>;

    PolyVector() = default;
    PolyVector(std::size_t nvars, std::size_t rank) : nvars_(nvars), rank_(rank) {}

    /// Sums duplicate monomials and drops zero coefficients.
    PolyVector(std::size_t nvars, std::size_t rank, std::vector<Term> terms) : nvars_(nvars), rank_(rank) {
        for (const auto& t : terms) check_term_shape(t.mono);
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
        for (auto& t : terms) {
            if (!terms_.empty() && terms_.back().mono == t.mono) {
                terms_.back().coeff += t.coeff;
                if (terms_.back().coeff.is_zero()) terms_.pop_back();
            } else if (!t.coeff.is_zero()) {
                terms_.push_back(std::move(t));
            }
        }
    }

    static PolyVector term(std::size_t nvars, std::size_t rank, R coeff, MonomialVector mono) {
        std::vector<Term> ts;
        ts.push_back({std::move(coeff), std::move(mono)});
        return PolyVector(nvars, rank, std::move(ts));
    }

    /// c * e_comp
    static PolyVector constant(std::size_t nvars, std::size_t rank, R coeff, std::size_t comp = 0) {
        return term(nvars, rank, std::move(coeff), MonomialVector{Exponents(nvars, 0), comp});
    }

    std::size_t nvars() const noexcept { return nvars_; }
    std::size_t rank() const noexcept { return rank_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    R coefficient(const MonomialVector& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const MonomialVector& key) { return t.mono < key; });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return R(0L);
    }

    /// Entry i as an element of R[x] (a rank-1 polynomial vector).
    PolyVector component(std::size_t comp) const {
        if (comp >= rank_) throw ShapeError("component " + std::to_string(comp + 1) + " out of range for rank " +
                                            std::to_string(rank_));
        PolyVector out(nvars_, 1);
        for (const auto& t : terms_) {
            if (t.mono.comp == comp) out.terms_.push_back({t.coeff, MonomialVector{t.mono.exps, 0}});
        }
        return out;
    }

    /// Only meaningful with an admissible order; throws on zero.
    Lead<R> leading(const AdmissibleOrder& ord) const {
        if (terms_.empty()) throw DomainError("leading term of the zero vector is undefined");
        const Term* best = &terms_.front();
        for (const auto& t : terms_) {
            if (ord.compare(t.mono, best->mono) > 0) best = &t;
        }
        return {best->mono, best->coeff};
    }

    PolyVector operator-() const {
        PolyVector out = *this;
        for (auto& t : out.terms_) t.coeff = -t.coeff;
        return out;
    }

    friend PolyVector operator+(const PolyVector& a, const PolyVector& b) { return combine(a, R(1L), {}, b); }
    friend PolyVector operator-(const PolyVector& a, const PolyVector& b) { return combine(a, R(-1L), {}, b); }
    PolyVector& operator+=(const PolyVector& o) { return *this = *this + o; }
    PolyVector& operator-=(const PolyVector& o) { return *this = *this - o; }

    /// c * x^gamma * f
    PolyVector scale_by_term(const R& c, const Exponents& gamma) const {
        if (!gamma.empty() && gamma.size() != nvars_) throw ShapeError("monomial has the wrong number of variables");
        PolyVector out(nvars_, rank_);
        if (c.is_zero()) return out;
        out.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            out.terms_.push_back({c * t.coeff, MonomialVector{gamma.empty() ? t.mono.exps : add_exps(t.mono.exps, gamma),
                                                              t.mono.comp}});
        }
        return out;
    }

    PolyVector scale(const R& c) const { return scale_by_term(c, {}); }

    /// a + c * x^gamma * b, in one merge pass. Lex key order is preserved under
    /// multiplication by a monomial, so the shifted b stays sorted.
    static PolyVector combine(const PolyVector& a, const R& c, const Exponents& gamma, const PolyVector& b) {
        check_same_shape(a, b);
        PolyVector out(a.nvars_, a.rank_);
        if (c.is_zero() || b.is_zero()) return a;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto shifted = [&](const Term& t) {
            return MonomialVector{gamma.empty() ? t.mono.exps : add_exps(t.mono.exps, gamma), t.mono.comp};
        };
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        MonomialVector mb;
        if (ib != b.terms_.end()) mb = shifted(*ib);
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono < mb)) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || mb < ia->mono) {
                out.terms_.push_back({c * ib->coeff, std::move(mb)});
                if (++ib != b.terms_.end()) mb = shifted(*ib);
            } else {
                R sum = ia->coeff + c * ib->coeff;
                if (!sum.is_zero()) out.terms_.push_back({std::move(sum), ia->mono});
                ++ia;
                if (++ib != b.terms_.end()) mb = shifted(*ib);
            }
        }
        return out;
    }

    friend bool operator==(const PolyVector& a, const PolyVector& b) {
        return a.nvars_ == b.nvars_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    /// Storage-key total order, for sorting sets of vectors into a canonical
    /// sequence independent of any admissible order.
    friend bool storage_less(const PolyVector& a, const PolyVector& b) {
        return std::lexicographical_compare(
            a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), [](const Term& s, const Term& t) {
                if (s.mono != t.mono) return s.mono < t.mono;
                return to_string(s.coeff) < to_string(t.coeff);
            });
    }

    static void check_same_shape(const PolyVector& a, const PolyVector& b) {
        if (a.nvars_ != b.nvars_ || a.rank_ != b.rank_)
            throw ShapeError("shape mismatch: " + shape_string(a.nvars_, a.rank_) + " vs " +
                             shape_string(b.nvars_, b.rank_));
    }

private:
    void check_term_shape(const MonomialVector& m) const {
        if (m.exps.size() != nvars_ || m.comp >= rank_)
            throw ShapeError("term over " + shape_string(m.exps.size(), m.comp + 1) + " in a vector of shape " +
                             shape_string(nvars_, rank_));
    }

    std::size_t nvars_ = 0;
    std::size_t rank_ = 1;
    std::vector<Term> terms_;
};

template <EuclideanDomain R>
using Polynomial = PolyVector<R>;  // rank 1

template <EuclideanDomain R>
DegDelta deg_delta(const Lead<R>& lead) {
    return {lead.mono, delta(lead.coeff)};
}

template <EuclideanDomain R>
DegDelta deg_delta(const PolyVector<R>& f, const AdmissibleOrder& ord) {
    return deg_delta(f.leading(ord));
}

/// p * f for a polynomial p (rank 1) and a polynomial vector f.
template <EuclideanDomain R>
PolyVector<R> multiply(const Polynomial<R>& p, const PolyVector<R>& f) {
    if (p.rank() != 1) throw ShapeError("multiplier must be a polynomial (rank 1)");
    if (p.nvars() != f.nvars()) throw ShapeError("multiplier over a different number of variables");
    std::vector<TermVector<R>> acc;
    acc.reserve(p.size() * f.size());
    for (const auto& s : p.terms()) {
        for (const auto& t : f.terms()) {
            acc.push_back({s.coeff * t.coeff, MonomialVector{add_exps(s.mono.exps, t.mono.exps), t.mono.comp}});
        }
    }
    return PolyVector<R>(f.nvars(), f.rank(), std::move(acc));
}

/// The total order <=_P: for p != q look at Lm(p - q) and compare the
/// hat_delta grades of the coefficients p and q have there.
template <EuclideanDomain R>
std::strong_ordering lep_compare(const PolyVector<R>& p, const PolyVector<R>& q, const AdmissibleOrder& ord) {
    PolyVector<R>::check_same_shape(p, q);
    const auto& a = p.terms();
    const auto& b = q.terms();
    const MonomialVector* top = nullptr;
    R ca(0L), cb(0L);
    auto consider = [&](const MonomialVector& m, const R& x, const R& y) {
        if (top == nullptr || ord.compare(m, *top) > 0) {
            top = &m;
            ca = x;
            cb = y;
        }
    };
    const R zero(0L);
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            consider(a[i].mono, a[i].coeff, zero);
            ++i;
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            consider(b[j].mono, zero, b[j].coeff);
            ++j;
        } else {
            if (!(a[i].coeff == b[j].coeff)) consider(a[i].mono, a[i].coeff, b[j].coeff);
            ++i;
            ++j;
        }
    }
    if (top == nullptr) return std::strong_ordering::equal;
    return hat_delta(ca) <=> hat_delta(cb);
}

template <EuclideanDomain R>
bool lep_less(const PolyVector<R>& p, const PolyVector<R>& q, const AdmissibleOrder& ord) {
    return lep_compare(p, q, ord) < 0;
}

/// Sorts strictly decreasing under <=_P.
template <EuclideanDomain R>
void sort_decreasing(std::vector<PolyVector<R>>& polys, const AdmissibleOrder& ord) {
    std::sort(polys.begin(), polys.end(),
              [&](const PolyVector<R>& a, const PolyVector<R>& b) { return lep_compare(a, b, ord) > 0; });
}

}  // namespace sgb
