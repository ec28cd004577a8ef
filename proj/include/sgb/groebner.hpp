#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sgb/division.hpp"
#include "sgb/errors.hpp"
#include "sgb/polyvec.hpp"

namespace sgb {

// ---------------------------------------------------------------------------
// S-polynomial vectors

/// S-polynomial vector of the ordered pair (f, g). With Lt(f) = a x^alpha e_i
/// and Lt(g) = b x^beta e_j: zero when i != j, otherwise
/// x^beta' f - q x^alpha' g with q the canonical quotient of a by b.
/// Requires delta(a) >= delta(b) when i = j.
template <EuclideanDomain R>
PolyVector<R> spoly(const PolyVector<R>& f, const PolyVector<R>& g, const AdmissibleOrder& ord) {
    PolyVector<R>::check_same_shape(f, g);
    if (f.is_zero() || g.is_zero()) throw DomainError("spoly: zero argument");
    if (f == g) throw DomainError("spoly: arguments must differ");
    const Lead<R> lf = f.leading(ord);
    const Lead<R> lg = g.leading(ord);
    if (lf.mono.comp != lg.mono.comp) return PolyVector<R>(f.nvars(), f.rank());
    if (delta(lf.coeff) < delta(lg.coeff)) throw DomainError("spoly: delta(Lc(f)) < delta(Lc(g))");
    const Exponents join = lcm_exps(lf.mono.exps, lg.mono.exps);
    const Exponents alpha_shift = sub_exps(join, lg.mono.exps);
    const Exponents beta_shift = sub_exps(join, lf.mono.exps);
    const R q = min_quotient(lf.coeff, lg.coeff);
    return PolyVector<R>::combine(f.scale_by_term(R(1L), beta_shift), -q, alpha_shift, g);
}

/// S-polynomial vector of the set {f, g}: picks the orientation with the
/// larger delta (then hat_delta) leading coefficient first.
template <EuclideanDomain R>
PolyVector<R> spoly_of_set(const PolyVector<R>& f, const PolyVector<R>& g, const AdmissibleOrder& ord) {
    PolyVector<R>::check_same_shape(f, g);
    const Lead<R> lf = f.leading(ord);
    const Lead<R> lg = g.leading(ord);
    if (lf.mono.comp != lg.mono.comp) return PolyVector<R>(f.nvars(), f.rank());
    auto df = delta(lf.coeff);
    auto dg = delta(lg.coeff);
    bool forward = df != dg ? df > dg : hat_delta(lf.coeff) >= hat_delta(lg.coeff);
    return forward ? spoly(f, g, ord) : spoly(g, f, ord);
}

/// The coprime criterion: both vectors live in one common component, one of
/// the leading coefficients is a unit and the leading monomials are coprime.
/// The pair then has an S-polynomial vector with a strong standard
/// representation by {f, g} and needs no reduction.
template <EuclideanDomain R>
bool coprime_skip(const PolyVector<R>& f, const PolyVector<R>& g, const AdmissibleOrder& ord) {
    if (f.is_zero() || g.is_zero()) return false;
    const std::size_t comp = f.terms().front().mono.comp;
    auto in_comp = [comp](const PolyVector<R>& p) {
        return std::all_of(p.terms().begin(), p.terms().end(), [comp](const auto& t) { return t.mono.comp == comp; });
    };
    if (!in_comp(f) || !in_comp(g)) return false;
    const Lead<R> lf = f.leading(ord);
    const Lead<R> lg = g.leading(ord);
    if (!is_unit(lf.coeff) && !is_unit(lg.coeff)) return false;
    return coprime(lf.mono.exps, lg.mono.exps);
}

// ---------------------------------------------------------------------------
// Augmentation

enum class AugmentBranch {
    zero_spoly,      // the S-polynomial vector is 0
    lead_divisible,  // some Lt(g) divides Lt(h): reduce and adjoin the remainder
    delta_step,      // some Deg_delta(g) is below Deg_delta(h): one coefficient step
    adjoin,          // nothing applies: adjoin h
};

/// H = G + {added}. `certified` is the flag x of the augmentation step.
template <EuclideanDomain R>
struct AugmentOutcome {
    std::optional<PolyVector<R>> added;
    bool certified = false;
    AugmentBranch branch = AugmentBranch::zero_spoly;
    PolyVector<R> spoly;
};

template <EuclideanDomain R>
AugmentOutcome<R> augment(const std::vector<PolyVector<R>>& basis, std::size_t p, std::size_t q,
                          const AdmissibleOrder& ord) {
    if (p >= basis.size() || q >= basis.size() || p == q)
        throw std::out_of_range("augment: pair is not a two-element subset of the basis");
    AugmentOutcome<R> out;
    out.spoly = spoly_of_set(basis[p], basis[q], ord);
    const PolyVector<R>& h = out.spoly;
    if (h.is_zero()) {
        out.certified = true;
        out.branch = AugmentBranch::zero_spoly;
        return out;
    }
    const auto leads = leads_of(basis, ord);
    const Lead<R> lh = h.leading(ord);

    std::optional<std::size_t> exact;
    Grade exact_grade;
    for (std::size_t i = 0; i < leads.size(); ++i) {
        if (!divides_term(leads[i].term(), lh.term())) continue;
        Grade d = delta(leads[i].coeff);
        if (!exact || d < exact_grade) {
            exact = i;
            exact_grade = std::move(d);
        }
    }
    if (exact) {
        out.certified = true;
        out.branch = AugmentBranch::lead_divisible;
        auto [c, gamma] = quotient_term(lh.term(), leads[*exact].term());
        PolyVector<R> reduced = PolyVector<R>::combine(h, -c, gamma, basis[*exact]);
        if (!reduced.is_zero()) {
            Expression<R> e = detail::divide_with_leads(reduced, basis, leads, ord);
            if (!e.remainder.is_zero()) out.added = std::move(e.remainder);
        }
        return out;
    }
    if (auto pick = detail::pick_delta_divisor(leads, lh.mono, delta(lh.coeff))) {
        out.branch = AugmentBranch::delta_step;
        const Lead<R>& lg = leads[*pick];
        R c = min_quotient(lh.coeff, lg.coeff);
        out.added = PolyVector<R>::combine(h, -c, quotient_mono(lh.mono, lg.mono), basis[*pick]);
        return out;
    }
    out.branch = AugmentBranch::adjoin;
    out.added = h;
    return out;
}

// ---------------------------------------------------------------------------
// Normalization and soft reduction

template <EuclideanDomain R>
bool is_normalized(const PolyVector<R>& f, const AdmissibleOrder& ord) {
    return !f.is_zero() && is_normalized_scalar(f.leading(ord).coeff);
}

/// Replace basis[target] by basis[target] - q * (mono / Lm(basis[reducer])) * basis[reducer].
template <EuclideanDomain R>
struct SoftReduction {
    std::size_t target;
    std::size_t reducer;
    MonomialVector mono;
    R q;
    bool leading;
};

namespace detail {

template <EuclideanDomain R>
std::vector<const TermVector<R>*> terms_descending(const PolyVector<R>& f, const AdmissibleOrder& ord) {
    std::vector<const TermVector<R>*> ts;
    ts.reserve(f.size());
    for (const auto& t : f.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) { return ord.compare(a->mono, b->mono) > 0; });
    return ts;
}

/// How `reducer` softly reduces the term t of f (leading or not), if it does.
template <EuclideanDomain R>
std::optional<R> soft_quotient(const TermVector<R>& t, bool is_leading, const Lead<R>& reducer) {
    if (reducer.mono.comp != t.mono.comp || !divides(reducer.mono.exps, t.mono.exps)) return std::nullopt;
    if (is_leading) {
        if (!divides(reducer.coeff, t.coeff)) return std::nullopt;
        return divexact(t.coeff, reducer.coeff);
    }
    R q = min_quotient(t.coeff, reducer.coeff);
    if (!(hat_delta(t.coeff - q * reducer.coeff) < hat_delta(t.coeff))) return std::nullopt;
    return q;
}

/// Highest reducible term of basis[target]; among reducers, least delta(Lc), lowest index on ties.
template <EuclideanDomain R>
std::optional<SoftReduction<R>> find_soft_reduction_of(const std::vector<PolyVector<R>>& basis,
                                                       const std::vector<Lead<R>>& leads, std::size_t target,
                                                       const AdmissibleOrder& ord) {
    const auto ts = terms_descending(basis[target], ord);
    for (std::size_t k = 0; k < ts.size(); ++k) {
        std::optional<SoftReduction<R>> best;
        for (std::size_t h = 0; h < basis.size(); ++h) {
            if (h == target) continue;
            if (best && !(delta(leads[h].coeff) < delta(leads[best->reducer].coeff))) continue;
            if (auto q = soft_quotient(*ts[k], k == 0, leads[h]))
                best = SoftReduction<R>{target, h, ts[k]->mono, std::move(*q), k == 0};
        }
        if (best) return best;
    }
    return std::nullopt;
}

/// Does `reducer` softly reduce some term of f?
template <EuclideanDomain R>
bool softly_reduces(const PolyVector<R>& f, const Lead<R>& lead_f, const Lead<R>& reducer) {
    for (const auto& t : f.terms()) {
        if (soft_quotient(t, t.mono == lead_f.mono, reducer)) return true;
    }
    return false;
}

template <EuclideanDomain R>
PolyVector<R> apply_soft_reduction(const std::vector<PolyVector<R>>& basis, const std::vector<Lead<R>>& leads,
                                   const SoftReduction<R>& s) {
    return PolyVector<R>::combine(basis[s.target], -s.q, quotient_mono(s.mono, leads[s.reducer].mono),
                                  basis[s.reducer]);
}

template <EuclideanDomain R>
void check_basis_input(const std::vector<PolyVector<R>>& basis, const AdmissibleOrder& ord) {
    for (const auto& g : basis) {
        if (g.is_zero()) throw DomainError("basis contains the zero vector");
        PolyVector<R>::check_same_shape(basis.front(), g);
    }
    if (!basis.empty()) ord.check_shape(basis.front().nvars(), basis.front().rank());
}

}  // namespace detail

template <EuclideanDomain R>
std::optional<SoftReduction<R>> find_soft_reduction(const std::vector<PolyVector<R>>& basis,
                                                    const AdmissibleOrder& ord) {
    detail::check_basis_input(basis, ord);
    const auto leads = leads_of(basis, ord);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (auto s = detail::find_soft_reduction_of(basis, leads, i, ord)) return s;
    }
    return std::nullopt;
}

template <EuclideanDomain R>
bool is_softly_reduced(const std::vector<PolyVector<R>>& basis, const AdmissibleOrder& ord) {
    return !find_soft_reduction(basis, ord).has_value();
}

/// One soft reduction: the first reducible element (in the given order),
/// its first reducible term from the top, and the reducer of least delta(Lc).
/// The element is replaced by the result, or dropped when that is 0 or
/// already present.
template <EuclideanDomain R>
std::vector<PolyVector<R>> softly_reduce_step(const std::vector<PolyVector<R>>& basis, const AdmissibleOrder& ord) {
    auto s = find_soft_reduction(basis, ord);
    if (!s) throw DomainError("softly_reduce_step: the set is softly reduced");
    const auto leads = leads_of(basis, ord);
    PolyVector<R> r = detail::apply_soft_reduction(basis, leads, *s);
    std::vector<PolyVector<R>> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i != s->target) out.push_back(basis[i]);
    }
    if (!r.is_zero() && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    return out;
}

/// Multiplies the first non-normalized element by its normalizing unit.
template <EuclideanDomain R>
std::vector<PolyVector<R>> normalize_step(const std::vector<PolyVector<R>>& basis, const AdmissibleOrder& ord) {
    detail::check_basis_input(basis, ord);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (is_normalized(basis[i], ord)) continue;
        PolyVector<R> ug = basis[i].scale(normalizing_unit(basis[i].leading(ord).coeff));
        std::vector<PolyVector<R>> out;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (j != i) out.push_back(basis[j]);
        }
        if (std::find(out.begin(), out.end(), ug) == out.end()) out.push_back(std::move(ug));
        return out;
    }
    throw DomainError("normalize_step: the set is normalized");
}

// ---------------------------------------------------------------------------
// Completion

enum class TraceKind { normalize, soft_reduce, augment, coprime_skip };

template <EuclideanDomain R>
struct TraceEvent {
    TraceKind kind;
    std::vector<PolyVector<R>> inputs;     // pair members, or the rewritten element
    std::optional<PolyVector<R>> output;   // new element, if any
    AugmentBranch branch = AugmentBranch::zero_spoly;
    bool certified = false;
};

template <EuclideanDomain R>
struct GroebnerOptions {
    bool use_coprime_skip = true;
    std::function<void(const TraceEvent<R>&)> trace;
};

struct CompletionStats {
    std::size_t augmentations = 0;
    std::size_t certified_pairs = 0;
    std::size_t coprime_skips = 0;
    std::size_t soft_reductions = 0;
    std::size_t normalizations = 0;
};

/// Runs the completion loops. The basis is kept sorted ascending by <=_P;
/// that sequence is the canonical order for every choice the loops make.
///
/// Scheduling for the reduced variant: normalize if anything is not
/// normalized, else soft-reduce if anything is softly reducible, else augment
/// a pending pair. The pair augmented is the one whose leading monomials have
/// the least lcm, ties going to the pair of lower basis positions. Pairs
/// across components come first. A pair is pending from the moment its
/// younger member enters the basis until it is certified, and is dropped
/// when a member leaves the basis.
template <EuclideanDomain R>
class CompletionEngine {
public:
    explicit CompletionEngine(AdmissibleOrder ord, GroebnerOptions<R> options = {})
        : ord_(std::move(ord)), options_(std::move(options)) {}

    /// Augmentation only; the result is a strong Groebner basis containing F.
    std::vector<PolyVector<R>> strong(const std::vector<PolyVector<R>>& generators) {
        start(generators);
        while (augment_next()) {
        }
        return result();
    }

    /// The reduced strong Groebner basis of the module generated by F.
    std::vector<PolyVector<R>> reduced(const std::vector<PolyVector<R>>& generators) {
        start(generators);
        for (;;) {
            if (normalize_next()) continue;
            if (soft_reduce_next()) continue;
            if (augment_next()) continue;
            break;
        }
        return result();
    }

    const CompletionStats& stats() const noexcept { return stats_; }

private:
    struct Meta {
        std::uint64_t id;
        Lead<R> lead;
        bool clean;  // verified not softly reducible by the rest
    };

    void start(const std::vector<PolyVector<R>>& generators) {
        if (generators.empty()) throw std::invalid_argument("completion: empty generating set");
        detail::check_basis_input(generators, ord_);
        polys_.clear();
        meta_.clear();
        pairs_.clear();
        stats_ = {};
        std::vector<PolyVector<R>> sorted = generators;
        std::sort(sorted.begin(), sorted.end(),
                  [&](const auto& a, const auto& b) { return lep_compare(a, b, ord_) < 0; });
        for (auto& f : sorted) insert(std::move(f));
    }

    std::vector<PolyVector<R>> result() const {
        std::vector<PolyVector<R>> out(polys_.rbegin(), polys_.rend());
        return out;
    }

    std::optional<std::size_t> index_of(std::uint64_t id) const {
        for (std::size_t i = 0; i < meta_.size(); ++i) {
            if (meta_[i].id == id) return i;
        }
        return std::nullopt;
    }

    bool insert(PolyVector<R> f) {
        if (std::find(polys_.begin(), polys_.end(), f) != polys_.end()) return false;
        Lead<R> lead = f.leading(ord_);
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            if (meta_[i].clean && detail::softly_reduces(polys_[i], meta_[i].lead, lead)) meta_[i].clean = false;
        }
        const std::uint64_t id = next_id_++;
        for (const auto& m : meta_) pairs_.emplace_back(m.id, id);
        auto pos = std::lower_bound(polys_.begin(), polys_.end(), f,
                                    [&](const auto& a, const auto& b) { return lep_compare(a, b, ord_) < 0; });
        const auto at = static_cast<std::size_t>(pos - polys_.begin());
        polys_.insert(pos, std::move(f));
        meta_.insert(meta_.begin() + static_cast<std::ptrdiff_t>(at), Meta{id, std::move(lead), false});
        return true;
    }

    void erase(std::size_t i) {
        polys_.erase(polys_.begin() + static_cast<std::ptrdiff_t>(i));
        meta_.erase(meta_.begin() + static_cast<std::ptrdiff_t>(i));
    }

    void emit(TraceEvent<R> e) const {
        if (options_.trace) options_.trace(e);
    }

    bool normalize_next() {
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            if (is_normalized_scalar(meta_[i].lead.coeff)) continue;
            PolyVector<R> old = std::move(polys_[i]);
            PolyVector<R> ug = old.scale(normalizing_unit(meta_[i].lead.coeff));
            erase(i);
            ++stats_.normalizations;
            if (options_.trace) emit({TraceKind::normalize, {old}, ug});
            insert(std::move(ug));
            return true;
        }
        return false;
    }

    bool soft_reduce_next() {
        std::vector<Lead<R>> leads;
        for (std::size_t i = 0; i < polys_.size(); ++i) {
            if (meta_[i].clean) continue;
            if (leads.empty()) {
                leads.reserve(meta_.size());
                for (const auto& m : meta_) leads.push_back(m.lead);
            }
            auto s = detail::find_soft_reduction_of(polys_, leads, i, ord_);
            if (!s) {
                meta_[i].clean = true;
                continue;
            }
            PolyVector<R> r = detail::apply_soft_reduction(polys_, leads, *s);
            PolyVector<R> old = std::move(polys_[i]);
            erase(i);
            ++stats_.soft_reductions;
            if (options_.trace) {
                emit({TraceKind::soft_reduce, {old},
                      r.is_zero() ? std::nullopt : std::optional<PolyVector<R>>(r)});
            }
            if (!r.is_zero()) insert(std::move(r));
            return true;
        }
        return false;
    }

    bool augment_next() {
        std::erase_if(pairs_, [&](const auto& pr) { return !index_of(pr.first) || !index_of(pr.second); });
        if (pairs_.empty()) return false;
        std::vector<PairKey> keys;
        keys.reserve(pairs_.size());
        for (const auto& pr : pairs_) keys.push_back(pair_key(pr));
        std::size_t pick = 0;
        for (std::size_t k = 1; k < keys.size(); ++k) {
            if (key_less(keys[k], keys[pick])) pick = k;
        }
        const auto [a, b] = pairs_[pick];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(pick));
        const std::size_t ia = *index_of(a), ib = *index_of(b);
        if (options_.use_coprime_skip && coprime_skip(polys_[ia], polys_[ib], ord_)) {
            ++stats_.coprime_skips;
            ++stats_.certified_pairs;
            if (options_.trace) emit({TraceKind::coprime_skip, {polys_[ia], polys_[ib]}, std::nullopt});
            return true;
        }
        AugmentOutcome<R> out = augment(polys_, ia, ib, ord_);
        ++stats_.augmentations;
        if (options_.trace) {
            TraceEvent<R> e{TraceKind::augment, {polys_[ia], polys_[ib]}, out.added};
            e.branch = out.branch;
            e.certified = out.certified;
            emit(std::move(e));
        }
        if (out.certified) {
            ++stats_.certified_pairs;
        } else {
            pairs_.emplace_back(a, b);
        }
        if (out.added) insert(std::move(*out.added));
        return true;
    }

    struct PairKey {
        bool cross;
        MonomialVector lcm;
        std::size_t hi, lo;
    };

    PairKey pair_key(const std::pair<std::uint64_t, std::uint64_t>& pr) const {
        const std::size_t i = *index_of(pr.first), j = *index_of(pr.second);
        const MonomialVector& a = meta_[i].lead.mono;
        const MonomialVector& b = meta_[j].lead.mono;
        return {a.comp != b.comp, MonomialVector{lcm_exps(a.exps, b.exps), a.comp}, std::max(i, j), std::min(i, j)};
    }

    bool key_less(const PairKey& x, const PairKey& y) const {
        if (x.cross != y.cross) return x.cross;
        if (!x.cross) {
            const auto c = ord_.compare(x.lcm, y.lcm);
            if (c != 0) return c < 0;
        }
        return std::pair(x.hi, x.lo) < std::pair(y.hi, y.lo);
    }

    AdmissibleOrder ord_;
    GroebnerOptions<R> options_;
    std::vector<PolyVector<R>> polys_;
    std::vector<Meta> meta_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
    std::uint64_t next_id_ = 0;
    CompletionStats stats_;
};

/// A strong Groebner basis of <F>, sorted decreasing by <=_P.
template <EuclideanDomain R>
std::vector<PolyVector<R>> strong_groebner(const std::vector<PolyVector<R>>& generators, const AdmissibleOrder& ord,
                                           GroebnerOptions<R> options = {}) {
    return CompletionEngine<R>(ord, std::move(options)).strong(generators);
}

/// The reduced strong Groebner basis of <F>, sorted decreasing by <=_P.
template <EuclideanDomain R>
std::vector<PolyVector<R>> reduced_strong_groebner(const std::vector<PolyVector<R>>& generators,
                                                   const AdmissibleOrder& ord, GroebnerOptions<R> options = {}) {
    return CompletionEngine<R>(ord, std::move(options)).reduced(generators);
}

// ---------------------------------------------------------------------------
// Verification

/// Membership in <G> for a strong Groebner basis G.
template <EuclideanDomain R>
bool member(const PolyVector<R>& f, const std::vector<PolyVector<R>>& basis, const AdmissibleOrder& ord) {
    if (f.is_zero()) return true;
    if (basis.empty()) return false;
    return euclidean_divide(f, basis, ord).remainder.is_zero();
}

struct VerifyReport {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    std::size_t failing_samples = 0;
};

/// Random element sum a_i x^gamma_i g_i of <G> with small coefficients.
template <EuclideanDomain R, class Rng>
PolyVector<R> random_module_element(const std::vector<PolyVector<R>>& basis, Rng& rng, int max_terms = 3,
                                    Exponent max_degree = 2, long max_coeff = 5) {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    std::uniform_int_distribution<Exponent> expo(0, max_degree);
    const std::size_t n = basis.front().nvars();
    PolyVector<R> acc(n, basis.front().rank());
    for (int t = count(rng); t > 0; --t) {
        Exponents gamma(n);
        for (auto& e : gamma) e = expo(rng);
        long c = coeff(rng);
        if (c == 0) c = 1;
        acc = PolyVector<R>::combine(acc, R(c), gamma, basis[pick(rng)]);
    }
    return acc;
}

/// Checks that every pair of G has a zero S-polynomial vector or one that
/// Euclidean division writes as a strong standard representation, and that
/// `samples` random elements of <G> divide to remainder 0.
template <EuclideanDomain R>
VerifyReport verify_strong_gb_report(const std::vector<PolyVector<R>>& basis, const AdmissibleOrder& ord,
                                     std::size_t samples = 0, std::uint64_t seed = 0) {
    VerifyReport report;
    if (basis.empty()) return report;
    detail::check_basis_input(basis, ord);
    for (std::size_t i = 0; i < basis.size() && report.ok; ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i] == basis[j]) continue;
            PolyVector<R> h = spoly_of_set(basis[i], basis[j], ord);
            if (h.is_zero()) continue;
            if (!standard_rep_by_division(h, basis, ord)) {
                report.ok = false;
                report.failing_pair = std::make_pair(i, j);
                break;
            }
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        PolyVector<R> f = random_module_element(basis, rng);
        if (!member(f, basis, ord)) {
            ++report.failing_samples;
            report.ok = false;
        }
    }
    return report;
}

template <EuclideanDomain R>
bool verify_strong_gb(const std::vector<PolyVector<R>>& basis, const AdmissibleOrder& ord, std::size_t samples = 0,
                      std::uint64_t seed = 0) {
    return verify_strong_gb_report(basis, ord, samples, seed).ok;
}

/// Reducedness by definition: every element is normalized and no term of it
/// is reducible by the leading coefficients of the others whose leading
/// monomial divides it.
template <EuclideanDomain R>
bool is_reduced(const std::vector<PolyVector<R>>& basis, const AdmissibleOrder& ord) {
    detail::check_basis_input(basis, ord);
    const auto leads = leads_of(basis, ord);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!is_normalized_scalar(leads[i].coeff)) return false;
        for (const auto& t : basis[i].terms()) {
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (j == i || !divides_mono(leads[j].mono, t.mono)) continue;
                if (reducible_by(t.coeff, leads[j].coeff)) return false;
            }
        }
    }
    return true;
}

}  // namespace sgb
