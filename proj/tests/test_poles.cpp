#include "test_support.hpp"

#include <motivic/pole_analysis.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace motivic;
using testing_support::builtin_examples;
using testing_support::load_data;

namespace {

MotivicClass cls(const char* text) { return parse_class(text); }

// t-polynomial from class texts, lowest degree first.
MotivicPolynomial tpoly(std::initializer_list<const char*> cs) {
    std::vector<MotivicClass> v;
    for (const char* c : cs) v.push_back(cls(c));
    return MotivicPolynomial(std::move(v));
}

MotivicPolynomial random_tpoly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), coeff(-3, 3), lexp(0, 4);
    std::vector<MotivicClass> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : v)
        for (int k = 0; k < 2; ++k) c += MotivicClass(coeff(rng)) * MotivicClass::lefschetz(lexp(rng));
    return MotivicPolynomial(std::move(v));
}

// Coefficient of x^n in 1/(1-x)^r by r-fold prefix sums of (1, 1, 1, ...).
Integer series_coefficient(long r, long n) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (long k = 0; k < r; ++k)
        for (std::size_t i = 1; i < c.size(); ++i) c[i] += c[i - 1];
    return c[static_cast<std::size_t>(n)];
}

// Determinant by Gaussian elimination over Q.
Rational rational_determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t m = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t p = k;
        while (p < m && a[p][k] == 0) ++p;
        if (p == m) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < m; ++i) {
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < m; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

}  // namespace

TEST(FactorDivides, Examples) {
    auto q = divide_by_factor(tpoly({"1", "0", "-L^2"}), {1, 1});
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, tpoly({"1", "L"}));
    EXPECT_FALSE(factor_divides(tpoly({"1", "0", "-L"}), {1, 1}));
    auto sq = factor_poly({3, 2}) * factor_poly({3, 2});
    EXPECT_TRUE(factor_divides(MotivicClass(cls("L - 1")) * sq, {3, 2}));
    EXPECT_TRUE(factor_divides(MotivicPolynomial{}, {2, 3}));
}

TEST(Bezout, Examples) {
    auto a = bezout_pair(1, 1, 1, 2, 2);
    EXPECT_EQ(a.g, tpoly({"1"}));
    EXPECT_EQ(a.h, tpoly({"-L"}));
    EXPECT_EQ(a.k, 1);
    auto b = bezout_pair(1, 1, 2, 3, 2);
    EXPECT_EQ(b.g, tpoly({"1", "L"}));
    EXPECT_EQ(b.h, tpoly({"-L"}));
    EXPECT_EQ(b.k, 1);
    EXPECT_THROW(bezout_pair(1, 1, 2, 2, 2), DomainError);
}

TEST(Bezout, RandomizedIdentity) {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<long> nd(1, 4), nud(1, 8), dd(1, 4);
    int done = 0;
    while (done < 200) {
        long ni = nd(rng), nj = nd(rng), vi = nud(rng), vj = nud(rng), d = dd(rng);
        if (vi * nj == vj * ni || d * ni < vi || d * nj < vj) continue;
        auto id = bezout_pair(ni, vi, nj, vj, d);
        auto lhs = id.g * factor_poly({d * ni - vi, ni}) + id.h * factor_poly({d * nj - vj, nj});
        ASSERT_EQ(lhs, MotivicPolynomial(MotivicClass(1) - MotivicClass::lefschetz(id.k)));
        ASSERT_GT(id.k, 0);
        ASSERT_EQ(id.k, std::abs(vj * ni - vi * nj));
        ++done;
    }
}

TEST(ReduceModFactor, Examples) {
    auto r = reduce_mod_factor(tpoly({"0", "0", "1"}), {1, 1});
    EXPECT_EQ(r.k, 2);
    EXPECT_EQ(r.g, tpoly({"-1", "-L"}));
    EXPECT_EQ(r.h, tpoly({"1"}));
    auto c = reduce_mod_factor(tpoly({"L^2 + 3"}), {1, 1});
    EXPECT_EQ(c.k, 0);
    EXPECT_TRUE(c.g.is_zero());
    EXPECT_EQ(c.h, tpoly({"L^2 + 3"}));
    auto t = reduce_mod_factor(tpoly({"0", "1"}), {0, 2});
    EXPECT_EQ(t.k, 0);
    EXPECT_TRUE(t.g.is_zero());
    EXPECT_EQ(t.h, tpoly({"0", "1"}));
}

TEST(ReduceModFactor, RandomizedIdentity) {
    std::mt19937_64 rng(45);
    std::uniform_int_distribution<long> a(0, 4), n(1, 4);
    for (int i = 0; i < 200; ++i) {
        auto d = random_tpoly(rng, 9);
        Factor f{a(rng), n(rng)};
        auto r = reduce_mod_factor(d, f);
        ASSERT_LT(r.h.degree(), f.N);
        ASSERT_EQ(MotivicClass::lefschetz(r.k) * d, factor_poly(f) * r.g + r.h);
        for (const auto& x : r.g.coefficients()) ASSERT_TRUE(x.is_effective());
        for (const auto& x : r.h.coefficients()) ASSERT_TRUE(x.is_effective());
        // Minimality: one power of L fewer leaves a non-effective quotient or remainder.
        if (r.k > 0) {
            bool effective = true;
            for (const auto* p : {&r.g, &r.h})
                for (const auto& x : p->coefficients()) effective = effective && x.shifted(-1).is_effective();
            ASSERT_FALSE(effective);
        }
    }
}

TEST(Fr, Examples) {
    EXPECT_EQ(f_r_eval(1, 5, FrConvention::series), 1);
    EXPECT_EQ(f_r_eval(1, 5, FrConvention::shifted), 1);
    EXPECT_EQ(f_r_eval(3, 2, FrConvention::series), 6);
    EXPECT_EQ(f_r_eval(2, 3, FrConvention::series), 4);
    EXPECT_EQ(f_r_eval(2, 3, FrConvention::shifted), 3);
    EXPECT_EQ(f_r_eval(3, 0, FrConvention::shifted), 0);
}

TEST(Fr, SeriesConventionIsTheGeneratingFunction) {
    for (long r = 1; r <= 6; ++r)
        for (long n = 0; n <= 15; ++n) {
            ASSERT_EQ(f_r_eval(r, n, FrConvention::series), series_coefficient(r, n));
            // The closed form n(n+1)...(n+r-2)/(r-1)! is the series value at n - 1.
            if (n >= 1 && r >= 2) {
                ASSERT_EQ(f_r_eval(r, n, FrConvention::shifted), series_coefficient(r, n - 1));
            }
        }
}

TEST(FrDeterminant, Examples) {
    auto a = fr_determinant({1, 2}, FrConvention::series);
    EXPECT_EQ(a.value, 1);
    EXPECT_EQ(a.closed_form, 1);
    auto b = fr_determinant({1, 2, 3}, FrConvention::shifted);
    EXPECT_EQ(b.value, 1);
    EXPECT_EQ(b.closed_form, 1);
    auto c = fr_determinant({4, 2, 4}, FrConvention::series);
    EXPECT_TRUE(c.degenerate);
    EXPECT_EQ(c.value, 0);
    EXPECT_THROW(fr_determinant({3}, FrConvention::series), DomainError);
}

TEST(FrDeterminant, RandomizedAgainstRationalElimination) {
    std::mt19937_64 rng(46);
    std::uniform_int_distribution<long> mm(2, 5), nv(0, 20);
    for (int i = 0; i < 200; ++i) {
        std::vector<long> ns;
        const long m = mm(rng);
        while (static_cast<long>(ns.size()) < m) {
            long v = nv(rng);
            if (std::find(ns.begin(), ns.end(), v) == ns.end()) ns.push_back(v);
        }
        for (auto conv : {FrConvention::series, FrConvention::shifted}) {
            std::vector<std::vector<Rational>> rows;
            for (long n : ns) {
                rows.emplace_back();
                for (long r = 1; r <= m; ++r) rows.back().push_back(Rational(f_r_eval(r, n, conv)));
            }
            auto det = fr_determinant(ns, conv);
            ASSERT_EQ(det.value, rational_determinant(rows));
            ASSERT_EQ(det.value, det.closed_form);
            ASSERT_FALSE(det.degenerate);
        }
    }
}

TEST(Cancel, ConstructedCancellation) {
    RationalZeta z{tpoly({"1", "-L"}), {{1, 1}, {2, 1}}};
    auto c = cancel(z);
    EXPECT_EQ(c.cancelled, (std::vector<Factor>{{1, 1}}));
    EXPECT_EQ(c.reduced.denominator, (std::vector<Factor>{{2, 1}}));
    EXPECT_EQ(c.reduced.numerator, tpoly({"1"}));
}

namespace {

// Series of w Z against the series of the decomposed parts, coefficientwise.
void expect_recombines(const RationalZeta& z, long d, const PartialFractionDecomposition& pf, std::size_t n_max = 25) {
    auto lhs = expand(z, n_max);
    std::vector<MotivicClass> rhs = expand(RationalZeta{pf.remainder, pf.remainder_factors}, n_max);
    for (long j = 1; j <= pf.m; ++j) {
        std::vector<Factor> fs(static_cast<std::size_t>(j), Factor{pf.A, pf.N});
        auto part = expand(RationalZeta{pf.blocks[static_cast<std::size_t>(j - 1)], fs}, n_max);
        for (std::size_t n = 0; n <= n_max; ++n) rhs[n] += part[n];
    }
    for (std::size_t n = 0; n <= n_max; ++n) ASSERT_EQ(pf.w() * lhs[n], rhs[n]) << "n=" << n;
    for (const auto& mu : pf.blocks) ASSERT_LT(mu.degree(), pf.N);
    EXPECT_EQ(Rational(pf.nu) / pf.N, *largest_ratio(cancel(z).reduced, d));
}

}  // namespace

TEST(PartialFractions, DoublePole) {
    RationalZeta z{tpoly({"1"}), {{1, 1}, {1, 1}}};
    auto pf = partial_fractions(z, 2);
    EXPECT_TRUE(pf.w_factors().empty());
    EXPECT_EQ(pf.m, 2);
    EXPECT_EQ(pf.blocks[1], tpoly({"1"}));
    EXPECT_TRUE(pf.blocks[0].is_zero());
    EXPECT_TRUE(pf.remainder.is_zero());
    expect_recombines(z, 2, pf);
}

TEST(PartialFractions, ProductOfLines) {
    auto z = denef_loeser(load_data("fxy.json"));
    auto pf = partial_fractions(z, 2);
    EXPECT_EQ(pf.m, 2);
    EXPECT_EQ(pf.N, 1);
    EXPECT_EQ(pf.nu, 1);
    EXPECT_TRUE(pf.remainder.is_zero());
    EXPECT_EQ(pf.blocks[1], tpoly({"(L-1)^2"}));
    expect_recombines(z, 2, pf);
}

TEST(PartialFractions, TwoRatios) {
    RationalZeta z{tpoly({"1"}), {{1, 1}, {3, 2}}};
    auto pf = partial_fractions(z, 2);
    EXPECT_EQ(pf.N, 1);
    EXPECT_EQ(pf.nu, 1);
    ASSERT_EQ(pf.bezout_exponents.size(), 1u);
    EXPECT_GT(pf.bezout_exponents[0], 0);
    EXPECT_EQ(pf.remainder_factors, (std::vector<Factor>{{3, 2}}));
    expect_recombines(z, 2, pf);
}

TEST(PartialFractions, Corpus) {
    for (const auto& ex : builtin_examples()) {
        auto z = denef_loeser(load_data(ex.file));
        auto pf = partial_fractions(z, 2);
        SCOPED_TRACE(ex.file);
        expect_recombines(z, 2, pf);
    }
    auto cusp = resolution_from_json(testing_support::read_json(testing_support::source_path("tests/data/cusp.json")));
    expect_recombines(denef_loeser(cusp), 2, partial_fractions(denef_loeser(cusp), 2));
}

TEST(PartialFractions, RandomizedMixedFamilies) {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<long> n(1, 3), nu(1, 6), cnt(1, 3);
    int done = 0;
    while (done < 30) {
        RationalZeta z;
        z.numerator = random_tpoly(rng, 4);
        for (long i = cnt(rng); i > 0; --i) {
            long N = n(rng), v = nu(rng);
            if (2 * N < v) continue;
            z.denominator.push_back({2 * N - v, N});
        }
        if (z.denominator.empty() || z.numerator.is_zero() || cancel(z).reduced.denominator.empty()) continue;
        SCOPED_TRACE(done);
        expect_recombines(z, 2, partial_fractions(z, 2), 20);
        ++done;
    }
}

TEST(PartialFractions, NoPoles) {
    RationalZeta z{tpoly({"1", "-L"}), {{1, 1}}};
    EXPECT_THROW(partial_fractions(z, 2), DomainError);
}

TEST(Valuation, Line) {
    auto p = valuation_profile(denef_loeser(load_data("fx.json")), 2, 20);
    ASSERT_EQ(p.points.size(), 21u);
    for (const auto& pt : p.points) EXPECT_EQ(pt.valuation, pt.n + 1);
    EXPECT_EQ(*p.slope, 1);
    EXPECT_EQ(*p.fitted_a, -1);
    EXPECT_TRUE(p.bound_holds);
}

TEST(Valuation, Square) {
    auto p = valuation_profile(denef_loeser(load_data("fx2.json")), 2, 20);
    ASSERT_EQ(p.points.size(), 11u);  // odd coefficients vanish and are skipped
    for (const auto& pt : p.points) {
        EXPECT_EQ(pt.n % 2, 0);
        EXPECT_EQ(pt.valuation, 3 * (pt.n / 2) + 1);
    }
    EXPECT_EQ(*p.slope, Rational(3) / 2);
    EXPECT_TRUE(p.bound_holds);
}

TEST(Valuation, BoundHoldsOnCorpus) {
    for (const auto& ex : builtin_examples()) {
        auto p = valuation_profile(denef_loeser(load_data(ex.file)), 2, 30);
        ASSERT_TRUE(p.fitted_a.has_value());
        EXPECT_TRUE(p.bound_holds) << ex.file;
        for (const auto& pt : p.points) EXPECT_GE(Rational(pt.valuation), *p.slope * pt.n - Rational(*p.fitted_a));
    }
}

TEST(Sharpness, Examples) {
    auto x2 = sharpness_check(denef_loeser(load_data("fx2.json")), 2, 20);
    EXPECT_EQ(x2.status, SharpnessVerdict::Status::witness);
    EXPECT_EQ(x2.N, 2);
    EXPECT_EQ(x2.b, 0);
    for (const auto& [n, m] : x2.margins) EXPECT_EQ(m, 1);

    auto x = sharpness_check(denef_loeser(load_data("fx.json")), 2, 20);
    EXPECT_EQ(x.status, SharpnessVerdict::Status::witness);
    EXPECT_EQ(x.N, 1);
    EXPECT_EQ(x.b, 0);

    RationalZeta constant{tpoly({"L^2 + 1"}), {}};
    EXPECT_EQ(sharpness_check(constant, 2, 20).status, SharpnessVerdict::Status::vacuous);
}

TEST(Sharpness, WitnessOnCorpus) {
    for (const auto& ex : builtin_examples()) {
        auto z = denef_loeser(load_data(ex.file));
        std::size_t n_max = 4 * 6 + static_cast<std::size_t>(std::max(0L, z.numerator.degree()));
        auto s = sharpness_check(z, 2, n_max);
        ASSERT_EQ(s.status, SharpnessVerdict::Status::witness) << ex.file;
        auto coeffs = expand(z, n_max);
        const Rational slope = Rational(2) - *largest_ratio(cancel(z).reduced, 2);
        for (long n = s.b; n <= static_cast<long>(n_max); n += s.N)
            if (auto v = coeffs[static_cast<std::size_t>(n)].l_valuation()) {
                EXPECT_LT(Rational(*v), slope * n + Rational(s.a));
            }
    }
}

TEST(SmallestPole, Examples) {
    auto x = smallest_pole_report(denef_loeser(load_data("fx.json")), 2);
    ASSERT_EQ(x.candidates.size(), 1u);
    EXPECT_EQ(x.candidates[0].ratio, 1);
    EXPECT_TRUE(x.candidates[0].surviving);
    EXPECT_TRUE(x.pass);

    auto x2 = smallest_pole_report(denef_loeser(load_data("fx2.json")), 2);
    EXPECT_EQ(*x2.largest_surviving_ratio, Rational(1) / 2);
    EXPECT_TRUE(x2.pass);

    RationalZeta z{tpoly({"1", "-L"}), {{1, 1}, {2, 1}}};
    auto c = smallest_pole_report(z, 2);
    ASSERT_EQ(c.candidates.size(), 2u);
    EXPECT_EQ(c.candidates[0].ratio, 0);
    EXPECT_TRUE(c.candidates[0].surviving);
    EXPECT_EQ(c.candidates[0].order, 1);
    EXPECT_FALSE(c.candidates[1].surviving);
    EXPECT_EQ(c.candidates[1].order, 0);

    auto xy = smallest_pole_report(denef_loeser(load_data("fxy.json")), 2);
    EXPECT_EQ(xy.candidates[0].order, 2);

    RationalZeta bad{tpoly({"1"}), {{0, 1}}};  // nu/N = 2 > d/2
    EXPECT_FALSE(smallest_pole_report(bad, 2).pass);
}

TEST(SmallestPole, CorpusPasses) {
    for (const auto& ex : builtin_examples()) EXPECT_TRUE(smallest_pole_report(denef_loeser(load_data(ex.file)), 2).pass);
}
