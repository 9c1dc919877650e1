#include "test_support.hpp"

#include <motivic/jet_count.hpp>
#include <motivic/zeta.hpp>

#include <gtest/gtest.h>

using namespace motivic;
using testing_support::builtin_examples;
using testing_support::load_data;

namespace {

MotivicClass cls(const char* text) { return parse_class(text); }

// |X_n(F_q)| for x^a y^b on A^2 from the orders of x(t) and y(t): sum over a i + b j = n of
// (q-1)^2 q^{2n-i-j}, or (q-1) q^{n-i} q^{n+1} when b = 0.
Integer monomial_contact(long a, long b, long n, long q) {
    Integer total = 0;
    auto qp = [q](long e) -> Integer { return boost::multiprecision::pow(Integer(q), static_cast<unsigned>(e)); };
    for (long i = 0; a * i <= n; ++i) {
        if (b == 0) {
            if (a * i == n) total += (q - 1) * qp(n - i) * qp(n + 1);
            continue;
        }
        long rest = n - a * i;
        if (rest % b) continue;
        long j = rest / b;
        total += (q - 1) * (q - 1) * qp(2 * n - i - j);
    }
    return total;
}

// Multiplies the truncated series back by the denominator.
bool expansion_consistent(const RationalZeta& z, std::size_t n) {
    auto s = expand(z, n);
    auto back = (TPolynomial<MotivicClass>(s) * denominator_polynomial<MotivicClass>(z.denominator)).truncated(n);
    return back == z.numerator.truncated(n);
}

}  // namespace

TEST(Resolution, ValidData) {
    EXPECT_TRUE(validate_resolution(load_data("fx.json")).empty());
    for (const auto& ex : builtin_examples()) EXPECT_TRUE(validate_resolution(load_data(ex.file)).empty()) << ex.file;
}

TEST(Resolution, Diagnostics) {
    auto data = load_data("fx.json");
    data.components[0].nu = 0;
    auto diags = validate_resolution(data);
    ASSERT_FALSE(diags.empty());
    EXPECT_NE(diags[0].find("nu must be >= 1"), std::string::npos);

    auto missing = load_data("fx.json");
    missing.strata.erase(ResolutionData::Subset{});
    diags = validate_resolution(missing);
    ASSERT_EQ(diags.size(), 1u);
    EXPECT_NE(diags[0].find("empty subset"), std::string::npos);

    auto negative = load_data("fx.json");
    negative.components[0].nu = 3;
    EXPECT_FALSE(validate_resolution(negative).empty());
    EXPECT_THROW(denef_loeser(negative), DomainError);
}

TEST(Resolution, SchemaErrors) {
    auto doc = testing_support::read_json(testing_support::source_path("data/fx.json"));
    auto extra = doc;
    extra["colour"] = "red";
    EXPECT_THROW(resolution_from_json(extra), SchemaError);
    auto undeclared = doc;
    undeclared["strata"][1]["class"] = "s*L";
    EXPECT_THROW(resolution_from_json(undeclared), SchemaError);
    auto missing = doc;
    missing.erase("components");
    EXPECT_THROW(resolution_from_json(missing), SchemaError);
}

TEST(DenefLoeser, FxExample) {
    auto z = denef_loeser(load_data("fx.json"));
    ASSERT_EQ(z.denominator.size(), 1u);
    EXPECT_EQ(z.denominator[0], (Factor{1, 1}));
    // (L^2 - L)(1 - L t) + (L^2 - L) L t collapses to the constant L^2 - L.
    EXPECT_EQ(z.numerator, TPolynomial<MotivicClass>(cls("L^2 - L")));
}

TEST(DenefLoeser, ConstantWhenOnlyEmptyStratum) {
    auto data = load_data("fx.json");
    data.strata.erase({"E1"});
    data.strata[{}] = cls("L^2 + 3");
    auto z = denef_loeser(data);
    EXPECT_TRUE(z.denominator.empty());
    EXPECT_EQ(z.numerator, TPolynomial<MotivicClass>(cls("L^2 + 3")));
}

TEST(DenefLoeser, X2YDenominator) {
    auto z = denef_loeser(load_data("fx2y.json"));
    EXPECT_EQ(z.denominator, (std::vector<Factor>{{3, 2}, {1, 1}}));
}

TEST(K0Series, FxExponentAndShift) {
    auto data = load_data("fx.json");
    auto k = k0_series(data, 1);
    EXPECT_EQ(k.denominator, (std::vector<Factor>{{4, 1}}));
    EXPECT_EQ(k0_shift(2, 1), 3);
    auto ks = expand(k, 6);
    auto zs = expand(denef_loeser(data), 6);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(ks[n], zs[n].shifted(3 * static_cast<long>(n)));
    EXPECT_TRUE(same_rational_function(rescale_t(k, 3), denef_loeser(data)));
}

TEST(K0Series, BoundOnC) {
    ResolutionData data;
    data.dimension = 3;
    data.components = {{"E1", 2, 5}};
    data.strata[{}] = cls("L^3 - 1");
    data.strata[{"E1"}] = cls("1");
    EXPECT_THROW(k0_series(data, 1), DomainError);
    EXPECT_NO_THROW(k0_series(data, 2));
    EXPECT_THROW(k0_series(load_data("fx.json"), 0), DomainError);
}

TEST(Expand, Examples) {
    auto fx = expand(denef_loeser(load_data("fx.json")), 3);
    EXPECT_EQ(fx[3], cls("(L-1)*L^4"));
    EXPECT_EQ(specialize_point_count(fx[3], 5), 2500);
    for (const auto& ex : builtin_examples()) {
        auto data = load_data(ex.file);
        EXPECT_EQ(expand(denef_loeser(data), 0)[0], data.stratum({}));
    }
    auto fx2 = expand(denef_loeser(load_data("fx2.json")), 3);
    EXPECT_TRUE(fx2[3].is_zero());
}

TEST(ContactCoefficient, Examples) {
    EXPECT_EQ(contact_coefficient(load_data("fxy.json"), 2), cls("3*(L-1)^2*L^2"));
    EXPECT_EQ(specialize_point_count(contact_coefficient(load_data("fxy.json"), 2), 3), 108);
    EXPECT_TRUE(contact_coefficient(load_data("fx2.json"), 1).is_zero());
    EXPECT_EQ(contact_coefficient(load_data("fx.json"), 2), cls("(L-1)*L^3"));
    EXPECT_EQ(specialize_point_count(contact_coefficient(load_data("fx.json"), 2), 5), 500);
}

TEST(ContactCoefficient, MatchesClosedFormForMonomials) {
    const std::vector<std::pair<long, long>> exps{{1, 0}, {2, 0}, {1, 1}, {2, 1}, {2, 3}};
    for (std::size_t e = 0; e < exps.size(); ++e) {
        auto data = load_data(builtin_examples()[e].file);
        for (long n = 0; n <= 12; ++n)
            for (long q : {2, 3, 5, 7})
                ASSERT_EQ(specialize_point_count(contact_coefficient(data, n), q), monomial_contact(exps[e].first, exps[e].second, n, q))
                    << builtin_examples()[e].file << " n=" << n << " q=" << q;
    }
}

TEST(ZToJ, Examples) {
    auto fx = load_data("fx.json");
    auto j = z_to_j(expand(denef_loeser(fx), 3), fx.ambient_class(), fx.divisor_class(), 2);
    EXPECT_EQ(j[0], cls("L"));
    EXPECT_EQ(j[1], cls("L^2"));
    auto xy = load_data("fxy.json");
    EXPECT_EQ(xy.divisor_class(), cls("2*L - 1"));
    auto jxy = z_to_j(expand(denef_loeser(xy), 3), xy.ambient_class(), xy.divisor_class(), 2);
    EXPECT_EQ(jxy[0], xy.divisor_class());
    EXPECT_EQ(jxy[1], cls("3*L^2 - 2*L"));
    EXPECT_EQ(specialize_point_count(jxy[1], 3), 21);
    EXPECT_THROW(z_to_j(expand(denef_loeser(xy), 2), xy.ambient_class(), cls("L"), 2), DomainError);
}

TEST(ZToJ, JSeriesExpandsToJetClasses) {
    for (const auto& ex : builtin_examples()) {
        auto data = load_data(ex.file);
        auto z = denef_loeser(data);
        auto js = expand(j_series(z, data.ambient_class(), data.dimension), 12);
        auto rec = z_to_j(expand(z, 12), data.ambient_class(), data.divisor_class(), data.dimension);
        EXPECT_EQ(js, rec) << ex.file;
    }
}

TEST(HodgeZeta, FxExample) {
    auto data = load_data("fx.json");
    HodgeZeta h = hodge_zeta(data, {});
    HodgeZeta expected;
    // (uv)^2 - uv + uv (uv - 1)(uv) t / (1 - uv t), over the common denominator.
    auto uv = HodgePolynomial::uv(1);
    expected.numerator = TPolynomial<HodgePolynomial>(std::vector<HodgePolynomial>{uv * uv - uv, -(uv * uv - uv) * uv}) +
                         TPolynomial<HodgePolynomial>::monomial(uv * (uv - HodgePolynomial(1)) * uv, 1);
    expected.denominator = {{1, 1}};
    EXPECT_TRUE(same_rational_function(h, expected));
}

TEST(HodgeZeta, ConstantAndSymbols) {
    ResolutionData data;
    data.dimension = 2;
    data.symbols = {"s"};
    data.strata[{}] = cls("s + 1");
    SymbolTable t;
    t.hodge["s"] = parse_hodge("u + v");
    auto h = hodge_zeta(data, t);
    EXPECT_TRUE(h.denominator.empty());
    EXPECT_EQ(h.numerator[0], parse_hodge("u + v + 1"));
    EXPECT_THROW(hodge_zeta(data, {}), DomainError);
}

// Invariants over the whole corpus.

TEST(ZetaProperties, SeriesEqualsTupleSum) {
    for (const auto& ex : builtin_examples()) {
        auto data = load_data(ex.file);
        auto s = expand(denef_loeser(data), 20);
        for (long n = 0; n <= 20; ++n) ASSERT_EQ(s[n], contact_coefficient(data, n)) << ex.file << " n=" << n;
        EXPECT_TRUE(expansion_consistent(denef_loeser(data), 20));
    }
    auto cusp = resolution_from_json(testing_support::read_json(testing_support::source_path("tests/data/cusp.json")));
    auto s = expand(denef_loeser(cusp), 20);
    for (long n = 0; n <= 20; ++n) ASSERT_EQ(s[n], contact_coefficient(cusp, n)) << "cusp n=" << n;
}

TEST(ZetaProperties, K0IdentityAndEffectivity) {
    for (const auto& ex : builtin_examples()) {
        auto data = load_data(ex.file);
        for (long c : {1, 2}) {
            auto k = k0_series(data, c);
            EXPECT_TRUE(same_rational_function(rescale_t(k, k0_shift(data.dimension, c)), denef_loeser(data)));
            for (const auto& x : k.numerator.coefficients()) EXPECT_TRUE(x.is_effective());
            for (const auto& f : k.denominator) EXPECT_GE(f.A, 0);
            for (const auto& x : expand(k, 15)) EXPECT_TRUE(x.is_effective());
        }
    }
}

TEST(ZetaProperties, OracleEquivalence) {
    for (const auto& ex : builtin_examples()) {
        auto data = load_data(ex.file);
        auto f = parse_affine_polynomial(ex.polynomial, 2);
        for (std::uint64_t q : {3u, 5u})
            for (long n = 0; n <= (q == 3 ? 4 : 3); ++n)
                ASSERT_EQ(specialize_point_count(contact_coefficient(data, n), q), count_contact(f, n, q))
                    << ex.file << " n=" << n << " q=" << q;
    }
}

TEST(ZetaProperties, JetRecursionRoundTrip) {
    for (const auto& ex : builtin_examples()) {
        auto data = load_data(ex.file);
        auto z = expand(denef_loeser(data), 15);
        auto j = z_to_j(z, data.ambient_class(), data.divisor_class(), data.dimension);
        EXPECT_EQ(j_to_z(j, data.ambient_class(), data.dimension), z);
    }
}

TEST(ZetaProperties, HodgeCoefficientwise) {
    for (const auto& ex : builtin_examples()) {
        auto data = load_data(ex.file);
        auto h = expand(hodge_zeta(data, {}), 10);
        auto m = expand(denef_loeser(data), 10);
        for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(h[n], specialize_hodge(m[n])) << ex.file << " n=" << n;
        EXPECT_TRUE(same_rational_function(hodge_zeta(data, {}), specialize_hodge(denef_loeser(data), {})));
    }
}
