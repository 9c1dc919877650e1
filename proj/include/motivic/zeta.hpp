#pragma once

// Motivic zeta functions from resolution data: the localized formula, the series
// identity over the Grothendieck ring itself, contact-locus coefficients by tuple
// enumeration, the jet-scheme series J(t) and the Hodge zeta function.

#include "core.hpp"
#include "motivic_class.hpp"
#include "resolution.hpp"
#include "specialize.hpp"
#include "t_polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace motivic {

// Denominator factor 1 - X^A t^N, with X = L (or uv for Hodge series).
struct Factor {
    long A = 0;
    long N = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
    friend bool operator<(const Factor& a, const Factor& b) {
        return a.N != b.N ? a.N < b.N : a.A < b.A;
    }
};

template <class Coeff>
struct LefschetzTraits;

template <>
struct LefschetzTraits<MotivicClass> {
    static MotivicClass power(long k) { return MotivicClass::lefschetz(k); }
};

template <>
struct LefschetzTraits<HodgePolynomial> {
    static HodgePolynomial power(long k) { return HodgePolynomial::uv(k); }
};

// numerator / prod(1 - X^A t^N); the multiset may repeat factors.
template <class Coeff>
struct RationalSeries {
    TPolynomial<Coeff> numerator;
    std::vector<Factor> denominator;
};

using RationalZeta = RationalSeries<MotivicClass>;
using HodgeZeta = RationalSeries<HodgePolynomial>;
using CoefficientSequence = std::vector<MotivicClass>;

template <class Coeff>
TPolynomial<Coeff> factor_polynomial(const Factor& f) {
    return TPolynomial<Coeff>(Coeff(1)) - TPolynomial<Coeff>::monomial(LefschetzTraits<Coeff>::power(f.A), f.N);
}

template <class Coeff>
TPolynomial<Coeff> denominator_polynomial(const std::vector<Factor>& factors) {
    TPolynomial<Coeff> q(Coeff(1));
    for (const auto& f : factors) q *= factor_polynomial<Coeff>(f);
    return q;
}

// Formal power series coefficients gamma_0..gamma_{n_max}.
template <class Coeff>
std::vector<Coeff> expand(const RationalSeries<Coeff>& z, std::size_t n_max) {
    std::vector<Coeff> s(n_max + 1);
    for (std::size_t k = 0; k <= n_max && k < z.numerator.size(); ++k) s[k] = z.numerator[k];
    // Multiply by 1/(1 - X^A t^N) = sum_j X^{jA} t^{jN}: s[k] += X^A s[k-N], ascending in k.
    for (const auto& f : z.denominator) {
        if (f.N < 1) throw DomainError("denominator factor needs N >= 1");
        Coeff xa = LefschetzTraits<Coeff>::power(f.A);
        for (std::size_t k = static_cast<std::size_t>(f.N); k <= n_max; ++k)
            if (!s[k - f.N].is_zero()) s[k] += xa * s[k - f.N];
    }
    return s;
}

// True when a and b are equal as rational functions (cross-multiplied identity).
template <class Coeff>
bool same_rational_function(const RationalSeries<Coeff>& a, const RationalSeries<Coeff>& b) {
    return a.numerator * denominator_polynomial<Coeff>(b.denominator) ==
           b.numerator * denominator_polynomial<Coeff>(a.denominator);
}

namespace detail {

// sum_I class(I) prod_{i in I} (X-1) X^{A_i} t^{N_i} / (1 - X^{A_i} t^{N_i}), over the common
// denominator of the factors of components occurring in a nonzero nonempty stratum.
template <class Coeff, class ClassOf>
RationalSeries<Coeff> assemble(const ResolutionData& data, const std::vector<long>& exponents, ClassOf&& class_of) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < data.components.size(); ++i) index[data.components[i].id] = i;

    std::vector<bool> used(data.components.size(), false);
    std::vector<std::pair<std::vector<std::size_t>, Coeff>> terms;
    for (const auto& [subset, cls] : data.strata) {
        Coeff c = class_of(cls);
        if (c.is_zero()) continue;
        std::vector<std::size_t> idx;
        for (const auto& id : subset) {
            auto it = index.find(id);
            if (it == index.end()) throw DomainError("stratum references unknown component '" + id + "'");
            idx.push_back(it->second);
            used[it->second] = true;
        }
        terms.emplace_back(std::move(idx), std::move(c));
    }

    RationalSeries<Coeff> z;
    for (std::size_t i = 0; i < data.components.size(); ++i)
        if (used[i]) z.denominator.push_back({exponents[i], data.components[i].N});

    const Coeff x_minus_1 = LefschetzTraits<Coeff>::power(1) - Coeff(1);
    for (const auto& [idx, cls] : terms) {
        TPolynomial<Coeff> term(cls);
        for (std::size_t i = 0; i < data.components.size(); ++i) {
            if (!used[i]) continue;
            Factor f{exponents[i], data.components[i].N};
            if (std::find(idx.begin(), idx.end(), i) != idx.end())
                term *= TPolynomial<Coeff>::monomial(x_minus_1 * LefschetzTraits<Coeff>::power(f.A), f.N);
            else
                term *= factor_polynomial<Coeff>(f);
        }
        z.numerator += term;
    }
    return z;
}

inline std::vector<long> localized_exponents(const ResolutionData& data) {
    std::vector<long> a;
    for (const auto& c : data.components) {
        long e = data.dimension * c.N - c.nu;
        if (e < 0)
            throw DomainError("component " + c.id + ": exponent d*N - nu = " + std::to_string(e) + " is negative");
        a.push_back(e);
    }
    return a;
}

}  // namespace detail

// Z(t) = sum_I [E_I^o] prod_{i in I} (L-1) L^{dN_i - nu_i} t^{N_i} / (1 - L^{dN_i - nu_i} t^{N_i}).
// No cancellation is attempted.
inline RationalZeta denef_loeser(const ResolutionData& data) {
    return detail::assemble<MotivicClass>(data, detail::localized_exponents(data),
                                          [](const MotivicClass& c) { return c; });
}

// Shift s = 2cd + c - d relating the two series: k0_series(t) = Z(L^s t).
inline long k0_shift(long d, long c) { return 2 * c * d + c - d; }

// Right-hand side of the identity sum_n [X_n] (L^{2cd+c-d} t)^n = sum_I [E_I^o] prod (L-1) L^{B_i} t^{N_i}
// / (1 - L^{B_i} t^{N_i}), B_i = (2cd+c) N_i - nu_i. Requires c >= 1 and (nu_i - 1) <= c N_i.
inline RationalZeta k0_series(const ResolutionData& data, long c) {
    if (c < 1) throw DomainError("c must be >= 1");
    const long d = data.dimension;
    std::vector<long> b;
    for (const auto& comp : data.components) {
        if (comp.nu - 1 > c * comp.N)
            throw DomainError("c = " + std::to_string(c) + " violates (nu-1)/N <= c for component " + comp.id);
        b.push_back((2 * c * d + c) * comp.N - comp.nu);
    }
    return detail::assemble<MotivicClass>(data, b, [](const MotivicClass& x) { return x; });
}

// Substitutes t -> L^{-shift} t. Factor exponents must stay nonnegative.
inline RationalZeta rescale_t(const RationalZeta& z, long shift) {
    RationalZeta r;
    std::vector<MotivicClass> num;
    for (std::size_t j = 0; j < z.numerator.size(); ++j)
        num.push_back(z.numerator[j].shifted(-shift * static_cast<long>(j)));
    r.numerator = TPolynomial<MotivicClass>(std::move(num));
    for (const auto& f : z.denominator) {
        long a = f.A - shift * f.N;
        if (a < 0) throw DomainError("rescaling produces a negative factor exponent");
        r.denominator.push_back({a, f.N});
    }
    return r;
}

// [X_n] = sum over tuples a with sum a_i N_i = n of [E_a^o] prod_{a_i > 0} (L-1) L^{(dN_i - nu_i) a_i}.
// Tuples are enumerated depth-first in component order.
inline MotivicClass contact_coefficient(const ResolutionData& data, long n) {
    const auto exps = detail::localized_exponents(data);
    const auto& comps = data.components;
    const MotivicClass l_minus_1 = MotivicClass::lefschetz() - MotivicClass(1);
    MotivicClass total;
    std::vector<long> a(comps.size(), 0);

    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long remaining) {
        if (i == comps.size()) {
            if (remaining != 0) return;
            ResolutionData::Subset subset;
            for (std::size_t k = 0; k < comps.size(); ++k)
                if (a[k] > 0) subset.push_back(comps[k].id);
            std::sort(subset.begin(), subset.end());
            MotivicClass cls = data.stratum(subset);
            if (cls.is_zero()) return;
            for (std::size_t k = 0; k < comps.size(); ++k)
                if (a[k] > 0) cls = cls * l_minus_1.shifted(exps[k] * a[k]);
            total += cls;
            return;
        }
        for (long ai = 0; ai * comps[i].N <= remaining; ++ai) {
            a[i] = ai;
            rec(i + 1, remaining - ai * comps[i].N);
        }
        a[i] = 0;
    };
    rec(0, n);
    return total;
}

// [L_0(V)] = [V], [L_n(V)] = L^d [L_{n-1}(V)] - [X_n]. Requires coeffs[0] = [X] - [V].
inline CoefficientSequence z_to_j(const CoefficientSequence& coeffs, const MotivicClass& ambient,
                                  const MotivicClass& divisor, long d) {
    if (coeffs.empty()) return {};
    if (!(coeffs[0] == ambient - divisor))
        throw DomainError("inconsistent data: [X_0] = " + coeffs[0].str() + " but [X] - [V] = " +
                          (ambient - divisor).str());
    CoefficientSequence j;
    j.push_back(divisor);
    for (std::size_t n = 1; n < coeffs.size(); ++n) j.push_back(j.back().shifted(d) - coeffs[n]);
    return j;
}

// Inverse recursion: [X_0] = [X] - [L_0(V)], [X_n] = L^d [L_{n-1}(V)] - [L_n(V)].
inline CoefficientSequence j_to_z(const CoefficientSequence& jets, const MotivicClass& ambient, long d) {
    CoefficientSequence z;
    for (std::size_t n = 0; n < jets.size(); ++n)
        z.push_back(n == 0 ? ambient - jets[0] : jets[n - 1].shifted(d) - jets[n]);
    return z;
}

// J(t) = (Z(t) - [X]) / (L^d t - 1) = ([X] Q - P) / (Q (1 - L^d t)) for Z = P/Q.
inline RationalZeta j_series(const RationalZeta& z, const MotivicClass& ambient, long d) {
    RationalZeta j;
    j.numerator = ambient * denominator_polynomial<MotivicClass>(z.denominator) - z.numerator;
    j.denominator = z.denominator;
    j.denominator.push_back({d, 1});
    return j;
}

// Assembled from the Hodge polynomials of the strata, not by specializing denef_loeser's output.
inline HodgeZeta hodge_zeta(const ResolutionData& data, const SymbolTable& table) {
    return detail::assemble<HodgePolynomial>(data, detail::localized_exponents(data),
                                             [&table](const MotivicClass& c) { return specialize_hodge(c, table); });
}

inline HodgeZeta specialize_hodge(const RationalZeta& z, const SymbolTable& table) {
    HodgeZeta h;
    h.numerator = z.numerator.map([&table](const MotivicClass& c) { return specialize_hodge(c, table); });
    h.denominator = z.denominator;
    return h;
}

}  // namespace motivic
