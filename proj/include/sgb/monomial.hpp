#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sgb/errors.hpp"

namespace sgb {

using Exponent = std::uint32_t;
using Exponents = std::vector<Exponent>;

/// x^alpha e_i. Components are 0-based: component 0 is e_1.
///
/// The defaulted ordering (component, then exponents lexicographically) is
/// only a storage key; admissible comparisons go through AdmissibleOrder.
struct MonomialVector {
    Exponents exps;
    std::size_t comp = 0;

    std::size_t nvars() const noexcept { return exps.size(); }

    friend bool operator==(const MonomialVector&, const MonomialVector&) = default;
    friend std::strong_ordering operator<=>(const MonomialVector& a, const MonomialVector& b) {
        if (auto c = a.comp <=> b.comp; c != 0) return c;
        return a.exps <=> b.exps;
    }
};

inline bool divides(const Exponents& a, const Exponents& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

inline bool divides_mono(const MonomialVector& m1, const MonomialVector& m2) {
    if (m1.nvars() != m2.nvars()) throw ShapeError("monomial vectors over different numbers of variables");
    return m1.comp == m2.comp && divides(m1.exps, m2.exps);
}

/// The monomial x^gamma with x^gamma * m1 = m2.
inline Exponents quotient_mono(const MonomialVector& m2, const MonomialVector& m1) {
    if (!divides_mono(m1, m2)) throw DomainError("quotient_mono: monomial vector does not divide");
    Exponents gamma(m2.exps.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] = m2.exps[i] - m1.exps[i];
    return gamma;
}

inline Exponents lcm_exps(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline Exponents sub_exps(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        assert(a[i] >= b[i]);
        out[i] = a[i] - b[i];
    }
    return out;
}

inline Exponents add_exps(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) return false;
    }
    return true;
}

inline std::uint64_t total_degree(const Exponents& a) {
    return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

using IntMatrix = std::vector<std::vector<long long>>;

/// An admissible order on the monomials of R[x_1..x_n]: lex (x_1 > x_2 > ...)
/// or a matrix order alpha <= beta iff U*alpha <=_lex U*beta.
class MonomialOrder {
public:
    MonomialOrder() = default;

    static MonomialOrder lex() { return {}; }

    /// Requires trivial rational kernel and a positive first nonzero entry in
    /// every column.
    static MonomialOrder matrix(IntMatrix weights) {
        validate(weights);
        MonomialOrder o;
        o.weights_ = std::move(weights);
        return o;
    }

    bool is_lex() const noexcept { return !weights_.has_value(); }
    const IntMatrix& weights() const { return *weights_; }

    std::strong_ordering compare(const Exponents& a, const Exponents& b) const {
        if (!weights_) return a <=> b;
        const IntMatrix& u = *weights_;
        if (!u.empty() && u.front().size() != a.size())
            throw ShapeError("matrix order has " + std::to_string(u.front().size()) + " columns but monomial has " +
                             std::to_string(a.size()) + " variables");
        for (const auto& row : u) {
            __int128 s = 0;
            for (std::size_t j = 0; j < a.size(); ++j) {
                s += static_cast<__int128>(row[j]) * (static_cast<__int128>(a[j]) - static_cast<__int128>(b[j]));
            }
            if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

    static void validate(const IntMatrix& u) {
        if (u.empty()) throw std::invalid_argument("matrix order: empty weight matrix");
        const std::size_t n = u.front().size();
        for (const auto& row : u) {
            if (row.size() != n) throw std::invalid_argument("matrix order: ragged weight matrix");
        }
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& row : u) {
                if (row[j] == 0) continue;
                if (row[j] < 0)
                    throw std::invalid_argument("matrix order: first nonzero entry of column " + std::to_string(j + 1) +
                                                " is negative");
                break;
            }
        }
        if (rational_rank(u) != n) throw std::invalid_argument("matrix order: weight matrix has a nontrivial kernel");
    }

private:
    static std::size_t rational_rank(const IntMatrix& u) {
        std::vector<std::vector<mpq_class>> m;
        for (const auto& row : u) {
            std::vector<mpq_class> r;
            for (long long v : row) r.emplace_back(static_cast<long>(v));
            m.push_back(std::move(r));
        }
        const std::size_t cols = m.front().size();
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
            std::size_t p = rank;
            while (p < m.size() && sgn(m[p][c]) == 0) ++p;
            if (p == m.size()) continue;
            std::swap(m[p], m[rank]);
            for (std::size_t r = rank + 1; r < m.size(); ++r) {
                if (sgn(m[r][c]) == 0) continue;
                mpq_class f = m[r][c] / m[rank][c];
                for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
            }
            ++rank;
        }
        return rank;
    }

    std::optional<IntMatrix> weights_;
};

/// A position-over-term order on monomial vectors. Components are compared
/// first (a smaller position rank is larger; by default e_1 > e_2 > ...), then
/// the exponents with the monomial order attached to that component.
///
/// This covers the lexicographic position-over-term order, the matrix orders
/// <=_{U,pi}, and the per-column orders used for matrices.
class AdmissibleOrder {
public:
    AdmissibleOrder() : monomial_orders_{MonomialOrder::lex()} {}

    static AdmissibleOrder pot_lex() { return {}; }

    /// `perm` maps component i to its rank pi(i); empty means identity.
    static AdmissibleOrder matrix(IntMatrix weights, std::vector<std::size_t> perm = {}) {
        AdmissibleOrder o;
        o.monomial_orders_ = {MonomialOrder::matrix(std::move(weights))};
        o.set_perm(std::move(perm));
        return o;
    }

    static AdmissibleOrder uniform(MonomialOrder order, std::vector<std::size_t> perm = {}) {
        AdmissibleOrder o;
        o.monomial_orders_ = {std::move(order)};
        o.set_perm(std::move(perm));
        return o;
    }

    /// One monomial order per component.
    static AdmissibleOrder position_over_term(std::vector<MonomialOrder> per_component) {
        if (per_component.empty()) throw std::invalid_argument("position_over_term: no component orders");
        AdmissibleOrder o;
        o.monomial_orders_ = std::move(per_component);
        o.per_component_ = true;
        return o;
    }

    const MonomialOrder& component_order(std::size_t comp) const {
        if (!per_component_) return monomial_orders_.front();
        if (comp >= monomial_orders_.size())
            throw ShapeError("order defines " + std::to_string(monomial_orders_.size()) +
                             " component orders, component " + std::to_string(comp + 1) + " requested");
        return monomial_orders_[comp];
    }

    std::size_t rank_of(std::size_t comp) const {
        if (perm_.empty()) return comp;
        if (comp >= perm_.size())
            throw ShapeError("order permutation covers " + std::to_string(perm_.size()) + " components, component " +
                             std::to_string(comp + 1) + " requested");
        return perm_[comp];
    }

    bool has_identity_positions() const {
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            if (perm_[i] != i) return false;
        }
        return true;
    }

    const std::vector<std::size_t>& perm() const noexcept { return perm_; }
    const std::vector<MonomialOrder>& monomial_orders() const noexcept { return monomial_orders_; }
    bool per_component() const noexcept { return per_component_; }

    /// Throws ShapeError when the order cannot be applied to R[x]^k.
    void check_shape(std::size_t nvars, std::size_t rank) const {
        if (!perm_.empty() && perm_.size() != rank)
            throw ShapeError("order permutation has " + std::to_string(perm_.size()) + " entries, module has rank " +
                             std::to_string(rank));
        if (per_component_ && monomial_orders_.size() != rank)
            throw ShapeError("order has " + std::to_string(monomial_orders_.size()) +
                             " component orders, module has rank " + std::to_string(rank));
        for (const auto& mo : monomial_orders_) {
            if (!mo.is_lex() && mo.weights().front().size() != nvars)
                throw ShapeError("matrix order has " + std::to_string(mo.weights().front().size()) +
                                 " columns, ring has " + std::to_string(nvars) + " variables");
        }
    }

    std::strong_ordering compare(const MonomialVector& a, const MonomialVector& b) const {
        if (a.nvars() != b.nvars()) throw ShapeError("comparing monomial vectors over different numbers of variables");
        if (a.comp != b.comp) {
            // e_1 > e_2: the smaller rank is the larger monomial vector
            return rank_of(b.comp) <=> rank_of(a.comp);
        }
        return component_order(a.comp).compare(a.exps, b.exps);
    }

    bool less(const MonomialVector& a, const MonomialVector& b) const { return compare(a, b) < 0; }

    friend bool operator==(const AdmissibleOrder&, const AdmissibleOrder&) = default;

private:
    void set_perm(std::vector<std::size_t> perm) {
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t p : perm) {
            if (p >= perm.size() || seen[p])
                throw std::invalid_argument("order permutation is not a permutation of 1.." +
                                            std::to_string(perm.size()));
            seen[p] = true;
        }
        perm_ = std::move(perm);
    }

    std::vector<MonomialOrder> monomial_orders_;
    std::vector<std::size_t> perm_;
    bool per_component_ = false;
};

/// compare_mono from the library surface.
inline std::strong_ordering compare_mono(const AdmissibleOrder& ord, const MonomialVector& a,
                                         const MonomialVector& b) {
    return ord.compare(a, b);
}

}  // namespace sgb
