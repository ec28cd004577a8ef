#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgb/errors.hpp"
#include "sgb/polyvec.hpp"

namespace sgb {

/// One summand a * x^gamma * G[index].
template <EuclideanDomain R>
struct ExpressionStep {
    R coeff;
    Exponents mono;
    std::size_t index;

    friend bool operator==(const ExpressionStep&, const ExpressionStep&) = default;
};

/// f = sum(steps) + remainder.
template <EuclideanDomain R>
struct Expression {
    std::vector<ExpressionStep<R>> steps;
    PolyVector<R> remainder;
};

/// A representation with zero remainder in which the first summand alone
/// reaches Lm(f).
template <EuclideanDomain R>
struct StrongStandardRep {
    std::vector<ExpressionStep<R>> steps;
};

template <EuclideanDomain R>
std::vector<Lead<R>> leads_of(const std::vector<PolyVector<R>>& divisors, const AdmissibleOrder& ord) {
    std::vector<Lead<R>> leads;
    leads.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.is_zero()) throw DomainError("divisor set contains the zero vector");
        leads.push_back(g.leading(ord));
    }
    return leads;
}

/// sum over steps of a * x^gamma * G[index].
template <EuclideanDomain R>
PolyVector<R> reconstruct(const std::vector<ExpressionStep<R>>& steps, const std::vector<PolyVector<R>>& divisors,
                          std::size_t nvars, std::size_t rank) {
    PolyVector<R> acc(nvars, rank);
    for (const auto& s : steps) {
        if (s.index >= divisors.size()) throw std::out_of_range("expression step refers to a missing divisor");
        acc = PolyVector<R>::combine(acc, s.coeff, s.mono, divisors[s.index]);
    }
    return acc;
}

namespace detail {

/// Index of the divisor with Deg_delta(g) below (lm, grade) that minimizes
/// (delta(Lc(g)), index).
template <EuclideanDomain R>
std::optional<std::size_t> pick_delta_divisor(const std::vector<Lead<R>>& leads, const MonomialVector& lm,
                                              const Grade& grade) {
    std::optional<std::size_t> best;
    Grade best_grade;
    for (std::size_t i = 0; i < leads.size(); ++i) {
        const auto& l = leads[i];
        if (l.mono.comp != lm.comp || !divides(l.mono.exps, lm.exps)) continue;
        Grade d = delta(l.coeff);
        if (d > grade) continue;
        if (!best || d < best_grade) {
            best = i;
            best_grade = std::move(d);
        }
    }
    return best;
}

template <EuclideanDomain R>
Expression<R> divide_with_leads(const PolyVector<R>& f, const std::vector<PolyVector<R>>& divisors,
                                const std::vector<Lead<R>>& leads, const AdmissibleOrder& ord) {
    Expression<R> e{{}, f};
    PolyVector<R>& r = e.remainder;
    while (!r.is_zero()) {
        Lead<R> lt = r.leading(ord);
        auto pick = pick_delta_divisor(leads, lt.mono, delta(lt.coeff));
        if (!pick) break;
        const Lead<R>& lg = leads[*pick];
        R q = min_quotient(lt.coeff, lg.coeff);
        Exponents gamma = quotient_mono(lt.mono, lg.mono);
        r = PolyVector<R>::combine(r, -q, gamma, divisors[*pick]);
        e.steps.push_back({std::move(q), std::move(gamma), *pick});
    }
    return e;
}

}  // namespace detail

/// Multivariate Euclidean division. While some g has Deg_delta(g) below
/// Deg_delta(r), subtract q * Lm(r)/Lm(g) * g where q is the canonical
/// quotient of Lc(r) by Lc(g). Among eligible divisors the one with the
/// smallest delta(Lc(g)) wins, ties broken by position in `divisors`.
template <EuclideanDomain R>
Expression<R> euclidean_divide(const PolyVector<R>& f, const std::vector<PolyVector<R>>& divisors,
                               const AdmissibleOrder& ord) {
    if (f.is_zero()) throw DomainError("euclidean_divide: zero dividend");
    for (const auto& g : divisors) PolyVector<R>::check_same_shape(f, g);
    auto leads = leads_of(divisors, ord);
    return detail::divide_with_leads(f, divisors, leads, ord);
}

/// Lm(x^gamma * g) from Lm(g).
inline MonomialVector shifted(const MonomialVector& m, const Exponents& gamma) {
    return {add_exps(m.exps, gamma), m.comp};
}

template <EuclideanDomain R>
bool check_euclidean(const PolyVector<R>& f, const std::vector<PolyVector<R>>& divisors, const Expression<R>& e,
                     const AdmissibleOrder& ord) {
    try {
        for (const auto& s : e.steps) {
            if (s.index >= divisors.size() || s.mono.size() != f.nvars()) return false;
        }
        PolyVector<R> sum = reconstruct(e.steps, divisors, f.nvars(), f.rank()) + e.remainder;
        if (!(sum == f)) return false;
        if (f.is_zero()) return e.steps.empty() && e.remainder.is_zero();
        auto leads = leads_of(divisors, ord);
        const MonomialVector lmf = f.leading(ord).mono;
        for (const auto& s : e.steps) {
            if (ord.compare(shifted(leads[s.index].mono, s.mono), lmf) > 0) return false;
        }
        if (e.remainder.is_zero()) return true;
        Lead<R> lr = e.remainder.leading(ord);
        return !detail::pick_delta_divisor(leads, lr.mono, delta(lr.coeff)).has_value();
    } catch (const ShapeError&) {
        return false;
    }
}

template <EuclideanDomain R>
bool check_strong_standard(const PolyVector<R>& f, const std::vector<PolyVector<R>>& divisors,
                           const StrongStandardRep<R>& rep, const AdmissibleOrder& ord) {
    if (f.is_zero() || rep.steps.empty()) return false;
    try {
        for (const auto& s : rep.steps) {
            if (s.index >= divisors.size() || s.mono.size() != f.nvars()) return false;
        }
        if (!(reconstruct(rep.steps, divisors, f.nvars(), f.rank()) == f)) return false;
        auto leads = leads_of(divisors, ord);
        const MonomialVector lmf = f.leading(ord).mono;
        if (ord.compare(shifted(leads[rep.steps[0].index].mono, rep.steps[0].mono), lmf) != 0) return false;
        for (std::size_t i = 1; i < rep.steps.size(); ++i) {
            const auto& s = rep.steps[i];
            if (ord.compare(shifted(leads[s.index].mono, s.mono), lmf) >= 0) return false;
        }
        return true;
    } catch (const ShapeError&) {
        return false;
    }
}

/// Substitutes strong standard representations of each G[i] by H into a
/// strong standard representation of f by G, giving one of f by H.
/// `by_h[i]` represents G[i].
template <EuclideanDomain R>
StrongStandardRep<R> compose(const StrongStandardRep<R>& f_by_g, const std::vector<StrongStandardRep<R>>& by_h) {
    StrongStandardRep<R> out;
    for (const auto& s : f_by_g.steps) {
        if (s.index >= by_h.size()) throw std::out_of_range("compose: missing representation");
        for (const auto& t : by_h[s.index].steps) {
            out.steps.push_back({s.coeff * t.coeff, add_exps(s.mono, t.mono), t.index});
        }
    }
    return out;
}

/// An Euclidean expression with remainder 0 whose steps form a strong
/// standard representation, if division produces one.
template <EuclideanDomain R>
std::optional<StrongStandardRep<R>> standard_rep_by_division(const PolyVector<R>& f,
                                                             const std::vector<PolyVector<R>>& divisors,
                                                             const AdmissibleOrder& ord) {
    if (f.is_zero()) return std::nullopt;
    Expression<R> e = euclidean_divide(f, divisors, ord);
    if (!e.remainder.is_zero()) return std::nullopt;
    StrongStandardRep<R> rep{std::move(e.steps)};
    if (!check_strong_standard(f, divisors, rep, ord)) return std::nullopt;
    return rep;
}

}  // namespace sgb
