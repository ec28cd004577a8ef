// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles/oracles.hpp"
#include "support/random.hpp"
#include "support/text.hpp"

using sgb::AdmissibleOrder;
using sgb::PolyMatrix;
using sgb::PolyVector;
using Q = sgb::Rational;
using Z = sgb::Integer;
using Clock = std::chrono::steady_clock;

namespace {

const AdmissibleOrder lex = AdmissibleOrder::pot_lex();

double slowest = 0;
std::size_t completions = 0;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Every completion goes through here so the per-run limit can be checked.
template <class R>
std::vector<PolyVector<R>> timed_rsgb(const std::vector<PolyVector<R>>& f, const AdmissibleOrder& ord,
                                      sgb::GroebnerOptions<R> opt = {}) {
    const auto t0 = Clock::now();
    auto g = sgb::reduced_strong_groebner(f, ord, std::move(opt));
    slowest = std::max(slowest, seconds_since(t0));
    ++completions;
    return g;
}

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s (%s) [%.2fs]\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
}

PolyMatrix<Z> rows_of(std::size_t cols, std::initializer_list<std::string_view> rows) {
    return PolyMatrix<Z>(2, cols, txt::vs(rows));
}

template <class R>
std::string show_rows(const std::vector<PolyVector<R>>& rows) {
    std::string out;
    for (const auto& r : rows) out += (out.empty() ? "" : "; ") + txt::show(r);
    return out;
}

/// Bounds for the random completion suites: n, k <= 3, degree 2..4,
/// coefficients in [-20, 20], binomial generators.
gen::Bounds random_bounds(gen::Rng& rng) {
    std::uniform_int_distribution<std::size_t> nk(1, 3);
    std::uniform_int_distribution<unsigned> deg(2, 4);
    gen::Bounds b;
    b.nvars = nk(rng);
    b.rank = nk(rng);
    b.degree = deg(rng);
    b.coeff = 20;
    b.terms = 2;
    return b;
}

/// Shuffle, scale by units, and add multiples of other generators.
template <class R>
std::vector<PolyVector<R>> disguise(gen::Rng& rng, std::vector<PolyVector<R>> f) {
    std::shuffle(f.begin(), f.end(), rng);
    for (auto& p : f) p = p.scale(gen::unit<R>(rng));
    if (f.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
        for (std::size_t round = 0; round < f.size(); ++round) {
            const std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            auto p = PolyVector<R>::combine(f[i], gen::scalar<R>(rng, 3), gen::exponents(rng, f[i].nvars(), 1), f[j]);
            if (!p.is_zero()) f[i] = std::move(p);
        }
    }
    // the combinations may have produced duplicates or zeros; neither changes the module
    std::vector<PolyVector<R>> out;
    for (auto& p : f) {
        if (!p.is_zero() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

struct Computed {
    std::vector<PolyVector<Z>> basis;
    AdmissibleOrder ord;
};
std::vector<Computed> computed_z;

template <class R>
bool uniqueness_round(gen::Rng& rng, std::string& why, std::vector<Computed>* keep) {
    const gen::Bounds b = random_bounds(rng);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    const auto ord = gen::order(rng, b.nvars, b.rank);
    auto f = gen::vectors<R>(rng, b, count(rng));
    auto g = timed_rsgb(f, ord);
    auto h = timed_rsgb(disguise(rng, f), ord);
    if constexpr (std::is_same_v<R, Z>) {
        if (keep) keep->push_back({g, ord});
    }
    if (g == h) return true;
    why = "F = {" + show_rows(f) + "}";
    return false;
}

}  // namespace

int main() {
    const auto start = Clock::now();

    report(1, "Groebner normal form of A' equals H", [] {
        auto a = rows_of(5, {"(-4*x^3, 1, 0, 0, 0)", "(10*y, 0, 1, 0, 0)", "(0, 0, 0, 1, 0)", "(4*x, 0, 0, 0, 1)"});
        auto h = rows_of(5, {"(2*x*y, 0, x, 0, -2*y)", "(4*x, 0, 0, 0, 1)", "(10*y, 0, 1, 0, 0)", "(0, 1, 0, 0, x^2)",
                             "(0, 0, 2*x, 0, -5*y)", "(0, 0, 0, 1, 0)"});
        const auto t0 = Clock::now();
        auto got = sgb::gnf(a, lex).H;
        const double dt = seconds_since(t0);
        return Outcome{got == h && dt < 1.0, "6x5, exact row order, " + std::to_string(dt) + "s"};
    });

    report(2, "solve([10y, 0, 4x], [4x^3])", [] {
        auto a = PolyMatrix<Z>::from_entries(2, {txt::vs({"10*y", "0", "4*x"})});
        const auto t0 = Clock::now();
        auto res = sgb::solve(a, txt::v("4*x^3"));
        const double dt = seconds_since(t0);
        auto* s = std::get_if<sgb::Solution<Z>>(&res);
        if (!s) return Outcome{false, "no solution reported"};
        const bool ok = s->particular == txt::v("(0, 0, x^2)") &&
                        s->kernel == PolyMatrix<Z>(2, 3, txt::vs({"(2*x, 0, -5*y)", "(0, 1, 0)"})) && dt < 1.0;
        return Outcome{ok, "particular " + txt::show(s->particular) + ", kernel " + show_rows(s->kernel.rows())};
    });

    report(3, "S-polynomial of the two-vector example", [] {
        auto h = sgb::spoly(txt::v("(10*x^2*y^2 + y, 0, x)"), txt::v("(4*x^3*y + x^2, 1, 0)"), lex);
        return Outcome{h == txt::v("(2*x^3*y^2 - 2*x^2*y + x*y, -2*y, x^2)"), txt::show(h)};
    });

    report(4, "one Euclidean division step", [] {
        auto f = txt::v("(10*x^2*y^2 + y, 0, x)");
        auto g = txt::v("(x - 2*y, 1, 0)");
        auto e = sgb::euclidean_divide(f, {g}, lex);
        if (e.steps.empty()) return Outcome{false, "no step taken"};
        auto r = PolyVector<Z>::combine(f, -e.steps[0].coeff, e.steps[0].mono, g);
        return Outcome{r == txt::v("(20*x*y^3 + y, -10*x*y^2, x)"), txt::show(r)};
    });

    report(5, "coprime-skip regression on {2x+1, 4y+1}", [] {
        const auto t0 = Clock::now();
        auto f = txt::vs({"2*x + 1", "4*y + 1"});
        const bool uncertified = !sgb::verify_strong_gb(f, lex);
        sgb::GroebnerOptions<Z> off;
        off.use_coprime_skip = false;
        auto strong = sgb::strong_groebner(f, lex, off);
        bool contains = true;
        for (const auto& p : f) contains = contains && std::find(strong.begin(), strong.end(), p) != strong.end();
        const bool enlarged = contains && strong.size() > f.size();
        auto reduced = timed_rsgb(f, lex, off);
        const bool changed = txt::as_set(reduced) != txt::as_set(f) && sgb::verify_strong_gb(reduced, lex, 100);
        std::size_t skips = 0;
        sgb::GroebnerOptions<Z> on;
        on.trace = [&](const sgb::TraceEvent<Z>& e) {
            if (e.kind == sgb::TraceKind::coprime_skip && txt::as_set(e.inputs) == txt::as_set(f)) ++skips;
        };
        auto reduced_on = timed_rsgb(f, lex, on);
        const bool not_skipped = !sgb::coprime_skip(f[0], f[1], lex) && skips == 0 && reduced_on == reduced;
        const double dt = seconds_since(t0);
        std::ostringstream d;
        d << "verify(F)=" << (uncertified ? "false" : "true") << "; augmentation basis has " << strong.size()
          << " elements and contains F; reduced basis {" << show_rows(reduced) << "} differs from F but has the same count "
          << reduced.size() << "; skips of this pair with skip enabled: " << skips;
        return Outcome{uncertified && enlarged && changed && not_skipped && dt < 1.0, d.str()};
    });

    report(6, "uniqueness under shuffle, unit scaling and added combinations", [] {
        gen::Rng rng(6006);
        std::size_t rounds = 0, bad = 0;
        std::string why;
        for (int i = 0; i < 200; ++i, ++rounds) bad += !uniqueness_round<Z>(rng, why, &computed_z);
        for (int i = 0; i < 50; ++i, ++rounds) bad += !uniqueness_round<Q>(rng, why, nullptr);
        return Outcome{bad == 0, std::to_string(rounds) + " sets (200 over Z, 50 over Q), " + std::to_string(bad) +
                                     " mismatches" + (why.empty() ? "" : "; last: " + why)};
    });

    report(7, "strong Groebner basis property of computed bases", [] {
        std::size_t bad = 0, pairs = 0;
        for (std::size_t i = 0; i < computed_z.size(); ++i) {
            const auto& c = computed_z[i];
            pairs += c.basis.size() * (c.basis.size() - 1) / 2;
            if (!sgb::verify_strong_gb(c.basis, c.ord, 100, 7000 + i)) ++bad;
        }
        return Outcome{bad == 0 && computed_z.size() >= 200,
                       std::to_string(computed_z.size()) + " bases, " + std::to_string(pairs) +
                           " pairs, 100 samples each, " + std::to_string(bad) + " failures"};
    });

    report(8, "HNF specialization against classical HNF", [] {
        gen::Rng rng(8008);
        std::uniform_int_distribution<long> e(-20, 20);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::size_t bad = 0;
        for (int round = 0; round < 200; ++round) {
            const std::size_t r = dim(rng), c = dim(rng);
            std::vector<std::vector<Z>> m(r, std::vector<Z>(c));
            oracle::ZMatrix om(r, std::vector<mpz_class>(c));
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < c; ++j) {
                    const long v = e(rng);
                    m[i][j] = Z(v);
                    om[i][j] = v;
                }
            }
            auto got = sgb::hermite_normal_form(m);
            auto want = oracle::classical_hnf(om);
            bool same = got.size() == want.size();
            for (std::size_t i = 0; same && i < got.size(); ++i) {
                for (std::size_t j = 0; j < c; ++j) same = same && got[i][j].value() == want[i][j];
            }
            bad += !same;
        }
        return Outcome{bad == 0, "200 matrices up to 5x5, entries in [-20, 20], " + std::to_string(bad) + " mismatches"};
    });

    report(9, "RREF specialization against Gaussian elimination", [] {
        gen::Rng rng(9009);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        std::bernoulli_distribution sparse(0.3);
        std::size_t bad = 0;
        for (int round = 0; round < 200; ++round) {
            const std::size_t r = dim(rng), c = dim(rng);
            std::vector<std::vector<Q>> m(r, std::vector<Q>(c));
            oracle::QMatrix om(r, std::vector<mpq_class>(c));
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < c; ++j) {
                    Q v = sparse(rng) ? Q(0) : gen::scalar<Q>(rng, 20);
                    om[i][j] = v.value();
                    m[i][j] = std::move(v);
                }
            }
            auto got = sgb::row_reduce(m);
            auto want = oracle::gauss_rref(om);
            bool same = got.size() == want.size();
            for (std::size_t i = 0; same && i < got.size(); ++i) {
                for (std::size_t j = 0; j < c; ++j) same = same && got[i][j].value() == want[i][j];
            }
            bad += !same;
        }
        return Outcome{bad == 0, "200 matrices up to 5x5, " + std::to_string(bad) + " mismatches"};
    });

    report(10, "member agrees with membership_bruteforce", [] {
        gen::Rng rng(10010);
        std::size_t agree = 0, disagree = 0, inconclusive = 0, positives = 0;
        std::string why;
        for (int round = 0; round < 120; ++round) {
            const bool over_q = round % 4 == 3;
            std::uniform_int_distribution<std::size_t> nk(1, 2), count(1, 3);
            gen::Bounds b{nk(rng), nk(rng), 2, 20, 2};
            const auto ord = gen::order(rng, b.nvars, b.rank);
            auto run = [&](auto tag) {
                using R = decltype(tag);
                auto f = gen::vectors<R>(rng, b, count(rng));
                auto g = timed_rsgb(f, ord);
                for (int q = 0; q < 5; ++q) {
                    auto p = gen::combination<R>(rng, f, 1, 5, 2);
                    if (q % 2 == 1 || p.is_zero()) p = p + gen::vector<R>(rng, gen::Bounds{b.nvars, b.rank, 2, 5, 1});
                    const bool lib = sgb::member(p, g, ord);
                    bool brute = oracle::membership_bruteforce(p, f, 2);
                    if (lib && !brute) brute = oracle::membership_bruteforce(p, f, 4);
                    if (lib == brute) {
                        ++agree;
                        positives += lib;
                    } else if (lib) {
                        ++inconclusive;  // cofactors may need degree above the oracle bound
                    } else {
                        ++disagree;
                        why = txt::show(p) + " vs {" + show_rows(f) + "}";
                    }
                }
            };
            if (over_q) {
                run(Q{});
            } else {
                run(Z{});
            }
        }
        return Outcome{disagree == 0 && agree >= 500,
                       std::to_string(agree) + " agreements (" + std::to_string(positives) + " members), " +
                           std::to_string(disagree) + " disagreements, " + std::to_string(inconclusive) +
                           " beyond the oracle degree bound" + (why.empty() ? "" : "; " + why)};
    });

    report(11, "admissible order and <=_P axioms", [] {
        gen::Rng rng(11011);
        std::size_t tuples = 0, bad = 0;
        for (int round = 0; round < 100; ++round) {
            const std::size_t n = 1 + round % 3, k = 1 + round / 3 % 3;
            const auto ord = gen::order(rng, n, k);
            for (int i = 0; i < 100; ++i, ++tuples) {
                auto m1 = gen::monomial(rng, n, k, 4);
                auto m2 = gen::monomial(rng, n, k, 4);
                if (i % 3 == 0) m2 = {sgb::add_exps(m1.exps, gen::exponents(rng, n, 3)), m1.comp};
                auto g = gen::exponents(rng, n, 3);
                if (sgb::divides_mono(m1, m2) && ord.compare(m1, m2) > 0) ++bad;
                const sgb::MonomialVector a{sgb::add_exps(m1.exps, g), m1.comp};
                const sgb::MonomialVector c{sgb::add_exps(m2.exps, g), m2.comp};
                if (ord.compare(m1, m2) <= 0 && ord.compare(a, c) > 0) ++bad;
            }
            gen::Bounds b{n, k, 2, 3, 3};
            auto ps = gen::vectors<Z>(rng, b, 6);
            ps.push_back(ps.front());
            ps.push_back(PolyVector<Z>(n, k));
            for (const auto& p : ps) {
                for (const auto& q : ps) {
                    const auto pq = sgb::lep_compare(p, q, ord);
                    const auto qp = sgb::lep_compare(q, p, ord);
                    if ((pq == 0) != (p == q)) ++bad;             // antisymmetry and totality
                    if (pq != (0 <=> qp)) ++bad;                  // consistency
                    for (const auto& r : ps) {
                        ++tuples;
                        if (pq <= 0 && sgb::lep_compare(q, r, ord) <= 0 && sgb::lep_compare(p, r, ord) > 0) ++bad;
                    }
                }
            }
        }
        return Outcome{bad == 0 && tuples >= 10000,
                       std::to_string(tuples) + " tuples, " + std::to_string(bad) + " violations"};
    });

    const double total = seconds_since(start);
    report(12, "termination discipline", [&] {
        std::ostringstream d;
        d << "suite " << total << "s, " << completions << " completions, slowest " << slowest << "s";
        return Outcome{total < 300.0 && slowest < 10.0, d.str()};
    });

    return failures == 0 ? 0 : 1;
}
