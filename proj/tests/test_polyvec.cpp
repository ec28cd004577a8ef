#include <gtest/gtest.h>

#include "support/random.hpp"
#include "support/text.hpp"

using sgb::AdmissibleOrder;
using sgb::DegDelta;
using sgb::Grade;
using sgb::Integer;
using sgb::PolyVector;
using Z = Integer;

namespace {
const AdmissibleOrder lex = AdmissibleOrder::pot_lex();
}

TEST(Leading, Examples) {
    auto f = txt::v("(10*x^2*y^2 + y, 0, x)");
    auto l = f.leading(lex);
    EXPECT_EQ(l.coeff, Z(10));
    EXPECT_EQ(l.mono, (sgb::MonomialVector{{2, 2}, 0}));
    auto c = txt::v("(0, 0, 7)");
    EXPECT_EQ(c.leading(lex).mono, (sgb::MonomialVector{{0, 0}, 2}));
    auto g = txt::v("(x - 2*y, 1, 0)");
    EXPECT_EQ(g.leading(lex).mono, (sgb::MonomialVector{{1, 0}, 0}));
    EXPECT_EQ(g.leading(lex).coeff, Z(1));
    EXPECT_THROW(PolyVector<Z>(2, 3).leading(lex), sgb::DomainError);
}

TEST(Arithmetic, PaperCombination) {
    auto f = txt::v("(10*x^2*y^2 + y, 0, x)");
    auto g = txt::v("(4*x^3*y + x^2, 1, 0)");
    auto h = f.scale_by_term(Z(1), {1, 0}) - g.scale_by_term(Z(2), {0, 1});
    EXPECT_EQ(h, txt::v("(2*x^3*y^2 - 2*x^2*y + x*y, -2*y, x^2)"));
    EXPECT_TRUE((f + (-f)).is_zero());
    EXPECT_EQ(f.scale_by_term(Z(1), {0, 0}), f);
}

TEST(Arithmetic, ShapeMismatch) {
    EXPECT_THROW(txt::v("(x, y)") + txt::v("(x, y, 1)"), sgb::ShapeError);
    EXPECT_THROW((PolyVector<Z>(2, 1, {{Z(1), {{1}, 0}}})), sgb::ShapeError);
    EXPECT_THROW((PolyVector<Z>(1, 1, {{Z(1), {{1}, 1}}})), sgb::ShapeError);
}

TEST(Arithmetic, MultiplyAndComponent) {
    auto p = txt::v("x + 1");
    auto f = txt::v("(x, y)");
    EXPECT_EQ(sgb::multiply(p, f), txt::v("(x^2 + x, x*y + y)"));
    EXPECT_EQ(f.component(1), txt::v("y"));
    EXPECT_EQ(f.coefficient({{0, 1}, 1}), Z(1));
    EXPECT_EQ(f.coefficient({{0, 1}, 0}), Z(0));
}

TEST(DegDelta, Examples) {
    EXPECT_EQ(sgb::deg_delta(txt::v("(10*x^2*y^2 + y, 0, x)"), lex), (DegDelta{{{2, 2}, 0}, Grade(10UL)}));
    EXPECT_EQ(sgb::deg_delta(txt::v("(1, 0)"), lex), (DegDelta{{{0, 0}, 0}, Grade(1UL)}));
    EXPECT_EQ(sgb::deg_delta(txt::v("(0, 0, -x)"), lex), (DegDelta{{{1, 0}, 2}, Grade(1UL)}));
}

TEST(DivDeltaLeq, Examples) {
    const DegDelta a{{{1, 0}, 0}, Grade(2UL)};
    EXPECT_TRUE(sgb::div_delta_leq(a, {{{2, 2}, 0}, Grade(10UL)}));
    EXPECT_FALSE(sgb::div_delta_leq(a, {{{2, 2}, 1}, Grade(10UL)}));
    EXPECT_FALSE(sgb::div_delta_leq(a, {{{2, 2}, 0}, Grade(1UL)}));
    EXPECT_TRUE(sgb::div_delta_leq(a, a));
}

TEST(MinElements, Examples) {
    const DegDelta a{{{1, 0}, 0}, Grade(2UL)};
    const DegDelta b{{{2, 0}, 0}, Grade(4UL)};
    const DegDelta c{{{0, 1}, 0}, Grade(2UL)};
    EXPECT_EQ(sgb::min_elements({a, b}), std::vector<DegDelta>{a});
    EXPECT_EQ(sgb::min_elements({a, c}), (std::vector<DegDelta>{a, c}));
    EXPECT_TRUE(sgb::min_elements({}).empty());
}

TEST(LepCompare, Examples) {
    auto zero = PolyVector<Z>(2, 1);
    auto two_x = txt::v("2*x");
    EXPECT_TRUE(sgb::lep_compare(zero, two_x, lex) < 0);
    EXPECT_TRUE(sgb::lep_compare(two_x, two_x, lex) == 0);
    // 2x vs -2x: hat_delta(2) < hat_delta(-2)
    EXPECT_TRUE(sgb::lep_compare(two_x, txt::v("-2*x"), lex) < 0);
    // decided at the largest differing monomial
    EXPECT_TRUE(sgb::lep_compare(txt::v("x + 5"), txt::v("x + 1"), lex) > 0);
    EXPECT_TRUE(sgb::lep_compare(txt::v("x"), txt::v("y + 100"), lex) > 0);
}

TEST(LepCompare, TotalOrderOnRandomVectors) {
    gen::Rng rng(3);
    for (int round = 0; round < 20; ++round) {
        gen::Bounds b{1 + round % 3u, 1 + round / 3 % 3u, 2, 3, 3};
        const auto ord = gen::order(rng, b.nvars, b.rank);
        auto ps = gen::vectors<Z>(rng, b, 12);
        for (const auto& p : ps) {
            for (const auto& q : ps) {
                auto c = sgb::lep_compare(p, q, ord);
                EXPECT_EQ(c == 0, p == q);
                EXPECT_TRUE(c == (0 <=> sgb::lep_compare(q, p, ord)));
                for (const auto& r : ps) {
                    if (c < 0 && sgb::lep_compare(q, r, ord) < 0) EXPECT_TRUE(sgb::lep_compare(p, r, ord) < 0);
                }
            }
        }
    }
}

TEST(Terms, DividesAndQuotient) {
    const sgb::TermVector<Z> s{Z(2), {{1, 0}, 0}};
    const sgb::TermVector<Z> t{Z(10), {{2, 2}, 0}};
    EXPECT_TRUE(sgb::divides_term(s, t));
    auto [q, g] = sgb::quotient_term(t, s);
    EXPECT_EQ(q, Z(5));
    EXPECT_EQ(g, (sgb::Exponents{1, 2}));
    EXPECT_FALSE(sgb::divides_term(sgb::TermVector<Z>{Z(4), {{1, 0}, 0}}, sgb::TermVector<Z>{Z(10), {{2, 0}, 0}}));
    const sgb::TermVector<Z> u{Z(3), {{0, 0}, 0}};
    auto [q1, g1] = sgb::quotient_term(u, u);
    EXPECT_EQ(q1, Z(1));
    EXPECT_EQ(g1, (sgb::Exponents{0, 0}));
}
