#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "ospchar/weyl.hpp"

using namespace ospchar;

namespace {

MonomialExpansion make(int m, std::vector<std::pair<std::vector<int>, long long>> terms) {
    MonomialExpansion e(m, 0);
    for (auto& [exp, coef] : terms) e.add_term(std::move(exp), Integer(coef));
    return e;
}

HalfWeight HW(std::vector<int> doubled) { return HalfWeight(std::move(doubled)); }

long long factorial(int n) {
    long long out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

} // namespace

TEST_CASE("half weights validate parity") {
    CHECK(HW({1, 1}).rank() == 2);
    CHECK(HW({2, 0}).rank() == 2);
    CHECK_THROWS_AS(HW({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(HW({}), std::invalid_argument);
    CHECK(HW({3, -1}).doubled == std::vector<int>{3, -1});
}

TEST_CASE("group sizes and determinants") {
    for (int k = 1; k <= 4; ++k) {
        const auto& b = weyl_group(WeylKind::B, k);
        CHECK(static_cast<long long>(b.size()) == (1LL << k) * factorial(k));
    }
    for (int k = 2; k <= 4; ++k) {
        const auto& d = weyl_group(WeylKind::D, k);
        CHECK(static_cast<long long>(d.size()) == (1LL << (k - 1)) * factorial(k));
        for (const auto& w : d) {
            int negs = 0;
            for (int s : w.signs)
                if (s < 0) ++negs;
            CHECK(negs % 2 == 0);
        }
    }
    // every element acts by permuting coordinates and flipping signs
    std::vector<int> probe{7, 3, 1};
    for (const auto& w : weyl_group(WeylKind::B, 3)) {
        CHECK((w.det == 1 || w.det == -1));
        std::vector<int> image(3);
        for (int i = 0; i < 3; ++i) image[w.perm[i]] = w.signs[i] * probe[i];
        std::vector<int> abs_image = image;
        for (int& v : abs_image) v = std::abs(v);
        std::sort(abs_image.begin(), abs_image.end());
        CHECK(abs_image == std::vector<int>{1, 3, 7});
    }
    CHECK_THROWS_AS(weyl_group(WeylKind::D, 1), std::invalid_argument);
    CHECK_THROWS_AS(weyl_group(WeylKind::B, 0), std::invalid_argument);
}

TEST_CASE("rho") {
    CHECK(rho_doubled(WeylKind::B, 2) == std::vector<int>{3, 1});
    CHECK(rho_doubled(WeylKind::B, 3) == std::vector<int>{5, 3, 1});
    CHECK(rho_doubled(WeylKind::D, 2) == std::vector<int>{2, 0});
    CHECK(rho_doubled(WeylKind::D, 3) == std::vector<int>{4, 2, 0});
}

TEST_CASE("dominance") {
    CHECK(is_dominant(WeylKind::B, HW({2, 2})));
    CHECK(is_dominant(WeylKind::B, HW({2, 0})));
    CHECK_FALSE(is_dominant(WeylKind::B, HW({2, -2})));
    CHECK_FALSE(is_dominant(WeylKind::B, HW({0, 2})));
    CHECK(is_dominant(WeylKind::D, HW({2, -2})));
    CHECK(is_dominant(WeylKind::D, HW({2, 2})));
    CHECK_FALSE(is_dominant(WeylKind::D, HW({2, -4})));
}

TEST_CASE("denominator leads at rho") {
    for (auto kind : {WeylKind::B, WeylKind::D}) {
        for (int k = 2; k <= 3; ++k) {
            MonomialExpansion den = weyl_denominator(kind, k);
            auto lead = *den.terms().rbegin();
            CHECK(lead.first == rho_doubled(kind, k));
            CHECK(lead.second == 1);
        }
    }
}

TEST_CASE("laurent quotient round trips") {
    MonomialExpansion q = make(2, {{{0, 0}, 1}, {{1, 0}, 3}, {{1, 2}, -2}});
    MonomialExpansion d = make(2, {{{-1, 0}, 1}, {{0, 0}, 2}, {{0, 1}, 5}});
    CHECK(laurent_quotient(q * d, d) == q);
    CHECK(laurent_quotient(d, d) == MonomialExpansion::constant(2, 0, Integer(1)));
    CHECK_THROWS_AS(laurent_quotient(q, MonomialExpansion(2, 0)), std::invalid_argument);
}

TEST_CASE("laurent quotient rejects inexact division") {
    // 1 / (x - 1) never terminates; the step guard has to fire
    MonomialExpansion one = MonomialExpansion::constant(1, 0, Integer(1));
    MonomialExpansion d = make(1, {{{1}, 1}, {{0}, -1}});
    CHECK_THROWS_AS(laurent_quotient(one, d), DivisionError);
}

TEST_CASE("spinor characters of rank two") {
    // so(4) positive-chirality spinor: two weights (1/2, 1/2), (-1/2, -1/2)
    ShiftedCharacter plus = weyl_character(WeylKind::D, 2, HW({1, 1}));
    CHECK(plus.shift2 == 1);
    CHECK(plus.expansion == make(2, {{{0, 0}, 1}, {{1, 1}, 1}}));
    // so(4) negative chirality: (1/2, -1/2), (-1/2, 1/2)
    ShiftedCharacter minus = weyl_character(WeylKind::D, 2, HW({1, -1}));
    CHECK(minus.shift2 == 1);
    CHECK(minus.expansion == make(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    // so(5) spinor: all four sign choices of (1/2, 1/2)
    ShiftedCharacter spinor = weyl_character(WeylKind::B, 2, HW({1, 1}));
    CHECK(spinor.shift2 == 1);
    CHECK(spinor.expansion ==
          make(2, {{{0, 0}, 1}, {{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("vector representation characters") {
    // so(5) vector: weights ±e_1, ±e_2, 0
    ShiftedCharacter vec = weyl_character(WeylKind::B, 2, HW({2, 0}));
    CHECK(vec.shift2 == 2);
    CHECK(vec.expansion == make(2, {{{2, 1}, 1}, {{0, 1}, 1}, {{1, 2}, 1}, {{1, 0}, 1}, {{1, 1}, 1}}));
    CHECK(evaluate(vec.expansion, EvaluationPoint::all_ones(2, 0)) == Rational(5));
    // so(4) vector
    ShiftedCharacter vec4 = weyl_character(WeylKind::D, 2, HW({2, 0}));
    CHECK(evaluate(vec4.expansion, EvaluationPoint::all_ones(2, 0)) == Rational(4));
}

TEST_CASE("weyl dimension equals character evaluation") {
    for (int k = 2; k <= 3; ++k)
        for (int p = 0; p <= 2; ++p) {
            std::vector<int> d(static_cast<std::size_t>(k), p);
            HalfWeight hw_b(d);
            CHECK(Rational(weyl_dimension(WeylKind::B, k, hw_b)) ==
                  evaluate(weyl_character(WeylKind::B, k, hw_b).expansion,
                           EvaluationPoint::all_ones(k, 0)));
            for (int r = 0; r <= p; ++r) {
                std::vector<int> e(static_cast<std::size_t>(k), p);
                e.back() = p - 2 * r;
                HalfWeight hw_d(e);
                CHECK(Rational(weyl_dimension(WeylKind::D, k, hw_d)) ==
                      evaluate(weyl_character(WeylKind::D, k, hw_d).expansion,
                               EvaluationPoint::all_ones(k, 0)));
            }
        }
}

TEST_CASE("weyl dimension fixed values") {
    CHECK(weyl_dimension(WeylKind::B, 2, HW({1, 1})) == 4);
    CHECK(weyl_dimension(WeylKind::B, 2, HW({2, 2})) == 10);
    CHECK(weyl_dimension(WeylKind::B, 2, HW({2, 0})) == 5);
    CHECK(weyl_dimension(WeylKind::D, 2, HW({1, 1})) == 2);
    CHECK(weyl_dimension(WeylKind::D, 2, HW({2, 0})) == 4);
    CHECK(weyl_dimension(WeylKind::D, 2, HW({2, 2})) == 3);
    CHECK(weyl_dimension(WeylKind::D, 3, HW({2, 0, 0})) == 6);
    CHECK(weyl_dimension(WeylKind::B, 3, HW({2, 0, 0})) == 7);
    CHECK(weyl_dimension(WeylKind::B, 2, HW({0, 0})) == 1);
}

TEST_CASE("characters are invariant under the weyl group") {
    ShiftedCharacter c = weyl_character(WeylKind::D, 3, HW({2, 2, -2}));
    for (const auto& [exp, coef] : c.expansion.terms()) {
        // recover the doubled weight from the stored shifted exponent
        std::vector<int> doubled(exp.size());
        for (std::size_t i = 0; i < exp.size(); ++i) doubled[i] = 2 * exp[i] - c.shift2;
        // swapping the first two coordinates is in the D Weyl group
        std::vector<int> swapped = {doubled[1], doubled[0], doubled[2]};
        std::vector<int> back(swapped.size());
        for (std::size_t i = 0; i < swapped.size(); ++i)
            back[i] = (swapped[i] + c.shift2) / 2;
        CHECK(c.expansion.coefficient(back) == coef);
        // flipping the signs of the last two coordinates as well
        std::vector<int> flipped = {doubled[0], -doubled[1], -doubled[2]};
        for (std::size_t i = 0; i < flipped.size(); ++i)
            back[i] = (flipped[i] + c.shift2) / 2;
        CHECK(c.expansion.coefficient(back) == coef);
    }
}

TEST_CASE("rebase") {
    ShiftedCharacter c = weyl_character(WeylKind::D, 2, HW({1, 1}));
    ShiftedCharacter r = c.rebased(3);
    CHECK(r.shift2 == 3);
    CHECK(r.expansion == make(2, {{{1, 1}, 1}, {{2, 2}, 1}}));
    CHECK_THROWS_AS(c.rebased(0), std::invalid_argument);
    CHECK_THROWS_AS(c.rebased(2), std::invalid_argument);
}

TEST_CASE("weyl character rejects bad input") {
    CHECK_THROWS_AS(weyl_character(WeylKind::B, 2, HW({0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(weyl_character(WeylKind::B, 3, HW({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(weyl_dimension(WeylKind::D, 2, HW({2, -4})), std::invalid_argument);
}
