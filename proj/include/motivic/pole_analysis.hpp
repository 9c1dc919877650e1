#pragma once

// Pole analysis of rational zeta functions over the effective ring: exact division by
// denominator factors, Bezout identities between factors, partial fractions around the
// family of largest ratio nu/N, L-adic valuation growth of the coefficients and the
// smallest-pole bound nu/N <= d/2.

#include "core.hpp"
#include "motivic_class.hpp"
#include "t_polynomial.hpp"
#include "zeta.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace motivic {

using MotivicPolynomial = TPolynomial<MotivicClass>;

inline MotivicPolynomial factor_poly(const Factor& f) { return factor_polynomial<MotivicClass>(f); }

// Quotient of B by 1 - L^A t^N when the division is exact.
inline std::optional<MotivicPolynomial> divide_by_factor(const MotivicPolynomial& b, const Factor& f) {
    if (b.is_zero()) return MotivicPolynomial{};
    const long deg = b.degree();
    if (deg < f.N) return std::nullopt;
    // B = (1 - L^A t^N) Q gives Q_j = B_j + L^A Q_{j-N}.
    std::vector<MotivicClass> q(static_cast<std::size_t>(deg - f.N + 1));
    for (std::size_t j = 0; j < q.size(); ++j) {
        q[j] = b[j];
        if (j >= static_cast<std::size_t>(f.N)) q[j] += q[j - f.N].shifted(f.A);
    }
    MotivicPolynomial quotient(std::move(q));
    if (!(factor_poly(f) * quotient == b)) return std::nullopt;
    return quotient;
}

inline bool factor_divides(const MotivicPolynomial& b, const Factor& f) { return divide_by_factor(b, f).has_value(); }

// Ratio nu/N of a factor 1 - L^{dN - nu} t^N.
inline long factor_nu(const Factor& f, long d) { return d * f.N - f.A; }
inline Rational factor_ratio(const Factor& f, long d) { return Rational(factor_nu(f, d)) / f.N; }

// ---- Bezout identities ------------------------------------------------------------------

struct BezoutIdentity {
    MotivicPolynomial g;
    MotivicPolynomial h;
    long k = 0;
};

// g (1 - L^{dN_i - nu_i} t^{N_i}) + h (1 - L^{dN_j - nu_j} t^{N_j}) = 1 - L^k with k > 0.
//
// With P = 1 - L^a t^{N_i}, Q = 1 - L^b t^{N_j} and T = t^{N_i N_j}, the geometric sums
// G_P = sum_{s < N_j} (L^a t^{N_i})^s and G_Q = sum_{s < N_i} (L^b t^{N_j})^s give
// P G_P = 1 - L^{e1} T and Q G_Q = 1 - L^{e2} T with e1 = a N_j, e2 = b N_i. If e1 < e2 then
// L^{e2-e1} (1 - L^{e1} T) - (1 - L^{e2} T) = L^{e2-e1} - 1, and symmetrically otherwise.
inline BezoutIdentity bezout_pair(long n_i, long nu_i, long n_j, long nu_j, long d) {
    if (n_i < 1 || n_j < 1) throw DomainError("bezout_pair needs N >= 1");
    if (nu_i * n_j == nu_j * n_i) throw DomainError("equal ratios nu/N: the factors share a common divisor");
    const long a = d * n_i - nu_i, b = d * n_j - nu_j;
    if (a < 0 || b < 0) throw DomainError("bezout_pair needs dN - nu >= 0");

    auto geometric = [](long exponent, long period, long terms) {
        MotivicPolynomial s;
        for (long k = 0; k < terms; ++k) s += MotivicPolynomial::monomial(MotivicClass::lefschetz(exponent * k), period * k);
        return s;
    };
    MotivicPolynomial gp = geometric(a, n_i, n_j), gq = geometric(b, n_j, n_i);
    const long e1 = a * n_j, e2 = b * n_i;
    BezoutIdentity out;
    if (e1 < e2) {
        out.k = e2 - e1;
        out.g = -(MotivicClass::lefschetz(out.k) * gp);
        out.h = gq;
    } else {
        out.k = e1 - e2;
        out.g = gp;
        out.h = -(MotivicClass::lefschetz(out.k) * gq);
    }
    const MotivicPolynomial lhs = out.g * factor_poly({a, n_i}) + out.h * factor_poly({b, n_j});
    const MotivicPolynomial rhs(MotivicClass(1) - MotivicClass::lefschetz(out.k));
    if (!(lhs == rhs) || out.k <= 0) throw Error("internal error: Bezout identity failed to verify");
    return out;
}

// ---- Division with remainder -------------------------------------------------------------

struct Reduction {
    long k = 0;
    MotivicPolynomial g;
    MotivicPolynomial h;
};

// L^k D = (1 - L^A t^N) g + h with deg h < N. Division by the leading coefficient -L^A is
// exact over Laurent polynomials in L; k is the least shift making g and h effective.
inline Reduction reduce_mod_factor(const MotivicPolynomial& d, const Factor& f) {
    if (f.N < 1) throw DomainError("factor needs N >= 1");
    const MotivicPolynomial fp = factor_poly(f);
    MotivicPolynomial rem = d, quot;
    while (rem.degree() >= f.N) {
        const auto m = static_cast<std::size_t>(rem.degree());
        auto term = MotivicPolynomial::monomial(-rem[m].shifted(-f.A), m - f.N);
        rem -= fp * term;
        quot += term;
    }
    long low = 0;
    for (const auto* p : {&quot, &rem})
        for (const auto& c : p->coefficients())
            if (auto v = c.l_valuation()) low = std::min(low, *v);
    Reduction out;
    out.k = -low;
    auto scale = [&](const MotivicPolynomial& p) { return p.map([&](const MotivicClass& c) { return c.shifted(out.k); }); };
    out.g = scale(quot);
    out.h = scale(rem);
    if (!(fp * out.g + out.h == scale(d))) throw Error("internal error: division identity failed to verify");
    return out;
}

// ---- The functions f_r and their determinant ---------------------------------------------

enum class FrConvention { series, shifted };

inline const char* to_string(FrConvention c) { return c == FrConvention::series ? "series" : "shifted"; }

// series: coefficient of x^n in 1/(1-x)^r, C(n+r-1, r-1).
// shifted: n(n+1)...(n+r-2)/(r-1)! = C(n+r-2, r-1), with the value 1 when r = 1.
inline Integer f_r_eval(long r, long n, FrConvention convention) {
    if (r < 1 || n < 0) throw DomainError("f_r needs r >= 1 and n >= 0");
    if (convention == FrConvention::series) return binomial(n + r - 1, r - 1);
    if (r == 1) return 1;
    return binomial(n + r - 2, r - 1);
}

struct FrDeterminant {
    Rational value;
    Rational closed_form;  // prod_{j>i} (n_j - n_i) / prod_{i=1}^{m-1} i!
    bool degenerate = false;
};

// Fraction-free (Bareiss) determinant of an integer matrix.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
    const std::size_t m = a.size();
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < m && a[swap][k] == 0) ++swap;
            if (swap == m) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < m; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return m == 0 ? Integer(1) : sign * a[m - 1][m - 1];
}

// Determinant of the matrix with rows (f_1(n_i), ..., f_m(n_i)).
inline FrDeterminant fr_determinant(const std::vector<long>& n_values, FrConvention convention) {
    const std::size_t m = n_values.size();
    if (m < 2) throw DomainError("fr_determinant needs at least two values");
    std::vector<std::vector<Integer>> rows(m, std::vector<Integer>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t r = 0; r < m; ++r) rows[i][r] = f_r_eval(static_cast<long>(r + 1), n_values[i], convention);
    FrDeterminant out;
    out.value = Rational(bareiss_determinant(rows));
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) num *= n_values[j] - n_values[i];
    for (std::size_t i = 1; i < m; ++i) den *= factorial(static_cast<long>(i));
    out.closed_form = Rational(num) / den;
    out.degenerate = num == 0;
    return out;
}

// ---- Cancellation ------------------------------------------------------------------------

struct Cancellation {
    RationalZeta reduced;           // numerator not divisible by any remaining factor
    std::vector<Factor> cancelled;  // in the order removed
};

inline Cancellation cancel(const RationalZeta& z) {
    Cancellation out;
    out.reduced.numerator = z.numerator;
    auto& den = out.reduced.denominator;
    den = z.denominator;
    std::sort(den.begin(), den.end());
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < den.size(); ++i) {
            if (auto q = divide_by_factor(out.reduced.numerator, den[i])) {
                out.reduced.numerator = std::move(*q);
                out.cancelled.push_back(den[i]);
                den.erase(den.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

// ---- Partial fractions -------------------------------------------------------------------

// w Z(t) = sum_{j=1}^m mu_j(t) / (1 - L^A t^N)^j + E(t) / prod(remainder factors), with
// w = L^{lefschetz_power} prod_i (1 - L^{k_i}) and deg mu_j < N.
struct PartialFractionDecomposition {
    long lefschetz_power = 0;
    std::vector<long> bezout_exponents;  // k_i of each (1 - L^{k_i}) in w, with multiplicity
    long N = 1;
    long nu = 0;
    long A = 0;  // dN - nu
    long m = 0;
    std::vector<MotivicPolynomial> blocks;  // blocks[j-1] = mu_j
    MotivicPolynomial remainder;
    std::vector<Factor> remainder_factors;

    MotivicClass w() const {
        MotivicClass r = MotivicClass::lefschetz(lefschetz_power);
        for (long k : bezout_exponents) r = r * (MotivicClass(1) - MotivicClass::lefschetz(k));
        return r;
    }

    std::vector<std::string> w_factors() const {
        std::vector<std::string> out;
        if (lefschetz_power > 0) out.push_back(MotivicClass::lefschetz(lefschetz_power).str());
        for (long k : bezout_exponents) out.push_back((MotivicClass(1) - MotivicClass::lefschetz(k)).str());
        return out;
    }
};

namespace detail {

inline long lcm_of(const std::vector<long>& xs) {
    long r = 1;
    for (long x : xs) r = std::lcm(r, x);
    return r;
}

inline MotivicPolynomial product(const std::vector<Factor>& fs) { return denominator_polynomial<MotivicClass>(fs); }

inline MotivicPolynomial power(const MotivicPolynomial& p, long e) {
    MotivicPolynomial r(MotivicClass(1));
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

inline MotivicPolynomial exact_quotient(const MotivicPolynomial& b, const Factor& f) {
    auto q = divide_by_factor(b, f);
    if (!q) throw Error("internal error: expected exact division");
    return *q;
}

}  // namespace detail

// Isolates the surviving factors of largest ratio nu/N, lifts them to (1 - L^{dN-nu} t^N)^m with
// N the lcm of their periods, and splits off the principal part using Bezout identities against
// the other factors. The recombination identity is verified before returning.
inline PartialFractionDecomposition partial_fractions(const RationalZeta& zeta, long d) {
    const RationalZeta z = cancel(zeta).reduced;
    if (z.denominator.empty()) throw DomainError("no poles: the zeta function is a polynomial after cancellation");

    Rational best = factor_ratio(z.denominator.front(), d);
    for (const auto& f : z.denominator) best = std::max(best, factor_ratio(f, d));
    std::vector<Factor> fam, rest;
    for (const auto& f : z.denominator) (factor_ratio(f, d) == best ? fam : rest).push_back(f);

    PartialFractionDecomposition out;
    std::vector<long> periods, nus;
    for (const auto& f : fam) {
        periods.push_back(f.N);
        nus.push_back(factor_nu(f, d));
    }
    out.N = detail::lcm_of(periods);
    out.nu = best == 0 ? 0 : detail::lcm_of(nus);
    if (Rational(out.nu) / out.N != best) throw Error("internal error: lifted ratio differs");
    out.A = d * out.N - out.nu;
    out.m = static_cast<long>(fam.size());
    out.remainder_factors = rest;
    const Factor big{out.A, out.N};
    const MotivicPolynomial fpoly = factor_poly(big);

    // Z = D / (F^m G).
    MotivicPolynomial dpoly = z.numerator;
    for (const auto& f : fam) dpoly *= detail::exact_quotient(fpoly, f);
    const MotivicPolynomial gpoly = detail::product(rest);

    // U = prod (1 - L^{k_i}) = H G + F K, then U^m = F^m K^m + G beta.
    MotivicPolynomial hprod(MotivicClass(1));
    MotivicClass u(1);
    std::vector<long> ks;
    for (const auto& f : rest) {
        auto id = bezout_pair(out.N, out.nu, f.N, factor_nu(f, d), d);
        hprod *= id.h;
        u = u * (MotivicClass(1) - MotivicClass::lefschetz(id.k));
        ks.push_back(id.k);
    }
    const MotivicPolynomial hg = hprod * gpoly;
    const MotivicPolynomial kpoly = detail::exact_quotient(MotivicPolynomial(u) - hg, big);
    const MotivicPolynomial fk = fpoly * kpoly;
    MotivicPolynomial beta;
    for (long s = 1; s <= out.m; ++s)
        beta += MotivicClass(binomial(out.m, s)) * (detail::power(hg, s - 1) * detail::power(fk, out.m - s));
    beta = hprod * beta;

    // Peel the blocks off D beta / F^m from the top.
    std::vector<Reduction> steps;
    MotivicPolynomial cur = dpoly * beta;
    for (long j = out.m; j >= 1; --j) {
        steps.push_back(reduce_mod_factor(cur, big));
        cur = steps.back().g;
    }
    long total = 0;
    for (const auto& s : steps) total += s.k;
    out.blocks.assign(static_cast<std::size_t>(out.m), MotivicPolynomial{});
    long later = total;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        later -= steps[i].k;
        out.blocks[static_cast<std::size_t>(out.m) - 1 - i] =
            steps[i].h.map([&](const MotivicClass& c) { return c.shifted(later); });
    }
    out.lefschetz_power = total;
    for (long e = 0; e < out.m; ++e) out.bezout_exponents.insert(out.bezout_exponents.end(), ks.begin(), ks.end());
    std::sort(out.bezout_exponents.begin(), out.bezout_exponents.end());

    const MotivicClass lk = MotivicClass::lefschetz(total);
    out.remainder = cur * gpoly + lk * (dpoly * detail::power(kpoly, out.m));

    // w D = sum_j mu_j F^{m-j} G + E F^m, and D prod(family) = B F^m.
    MotivicPolynomial rhs = out.remainder * detail::power(fpoly, out.m);
    for (long j = 1; j <= out.m; ++j)
        rhs += out.blocks[static_cast<std::size_t>(j - 1)] * detail::power(fpoly, out.m - j) * gpoly;
    const bool ok = out.w() * dpoly == rhs && dpoly * detail::product(fam) == z.numerator * detail::power(fpoly, out.m);
    if (!ok) throw Error("internal error: partial fraction recombination failed to verify");
    return out;
}

// ---- Valuations --------------------------------------------------------------------------

struct ValuationPoint {
    long n = 0;
    long valuation = 0;
};

struct ValuationProfile {
    long dimension = 2;
    std::optional<Rational> l;      // -max surviving nu/N; absent without poles
    std::optional<Rational> slope;  // d + l
    std::vector<ValuationPoint> points;
    std::optional<Integer> fitted_a;     // least a with val(gamma_n) >= ceil(slope n - a) at every point
    std::optional<Rational> derived_a;   // (d+l) deg B - min val(B_j), valid a priori
    bool bound_holds = true;             // fitted_a <= ceil(derived_a)
};

inline std::optional<Rational> largest_ratio(const RationalZeta& reduced, long d) {
    std::optional<Rational> best;
    for (const auto& f : reduced.denominator) {
        Rational r = factor_ratio(f, d);
        if (!best || r > *best) best = r;
    }
    return best;
}

inline ValuationProfile valuation_profile(const RationalZeta& zeta, long d, std::size_t n_max) {
    const RationalZeta z = cancel(zeta).reduced;
    ValuationProfile p;
    p.dimension = d;
    const auto coeffs = expand(z, n_max);
    for (std::size_t n = 0; n < coeffs.size(); ++n)
        if (auto v = coeffs[n].l_valuation()) p.points.push_back({static_cast<long>(n), *v});
    auto ratio = largest_ratio(z, d);
    if (!ratio) return p;
    p.l = -*ratio;
    p.slope = Rational(d) + *p.l;
    if (*p.slope <= 0) {
        p.bound_holds = false;
        return p;
    }
    for (const auto& pt : p.points) {
        Integer a = ceil(*p.slope * pt.n) - pt.valuation;
        if (!p.fitted_a || a > *p.fitted_a) p.fitted_a = a;
    }
    std::optional<long> vb;
    for (const auto& c : z.numerator.coefficients())
        if (auto v = c.l_valuation()) vb = vb ? std::min(*vb, *v) : *v;
    if (vb) {
        p.derived_a = *p.slope * z.numerator.degree() - *vb;
        if (p.fitted_a) p.bound_holds = *p.fitted_a <= ceil(*p.derived_a);
    }
    return p;
}

// ---- Sharpness ---------------------------------------------------------------------------

struct SharpnessVerdict {
    enum class Status { witness, none, vacuous } status = Status::vacuous;
    long N = 0;  // progression period (lcm of the periods of the largest-ratio family)
    long b = 0;
    Integer a = 0;  // val(gamma_{nN+b}) < ceil(slope (nN+b) + a) along the checked progression
    std::vector<std::pair<long, Rational>> margins;  // (n', val(gamma_{n'}) - slope n')
};

inline const char* to_string(SharpnessVerdict::Status s) {
    switch (s) {
        case SharpnessVerdict::Status::witness: return "witness";
        case SharpnessVerdict::Status::none: return "none";
        default: return "vacuous";
    }
}

// Searches the residues b mod N for a progression along which val(gamma_n) - slope n stays
// bounded: every coefficient in the second half of the progression is nonzero and its margin
// does not exceed the largest margin of the first half.
inline SharpnessVerdict sharpness_check(const RationalZeta& zeta, long d, std::size_t n_max) {
    const RationalZeta z = cancel(zeta).reduced;
    SharpnessVerdict out;
    auto ratio = largest_ratio(z, d);
    if (!ratio) return out;
    const Rational slope = Rational(d) - *ratio;
    std::vector<long> periods;
    for (const auto& f : z.denominator)
        if (factor_ratio(f, d) == *ratio) periods.push_back(f.N);
    const long period = detail::lcm_of(periods);
    out.status = SharpnessVerdict::Status::none;
    out.N = period;
    const auto coeffs = expand(z, n_max);
    for (long b = 0; b < period; ++b) {
        std::vector<long> idx;
        for (long n = b; n <= static_cast<long>(n_max); n += period) idx.push_back(n);
        if (idx.size() < 4) continue;
        const std::size_t half = idx.size() / 2;
        std::vector<std::pair<long, Rational>> margins;
        std::optional<Rational> head_max, tail_max;
        bool tail_nonzero = true;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            auto v = coeffs[static_cast<std::size_t>(idx[i])].l_valuation();
            if (!v) {
                if (i >= half) tail_nonzero = false;
                continue;
            }
            Rational mg = Rational(*v) - slope * idx[i];
            margins.emplace_back(idx[i], mg);
            auto& mx = i < half ? head_max : tail_max;
            if (!mx || mg > *mx) mx = mg;
        }
        if (!tail_nonzero || !tail_max || !head_max || *tail_max > *head_max) continue;
        out.status = SharpnessVerdict::Status::witness;
        out.b = b;
        out.a = floor(*head_max) + 1;
        out.margins = std::move(margins);
        return out;
    }
    return out;
}

// ---- Smallest pole -----------------------------------------------------------------------

struct PoleCandidate {
    long nu = 0;
    long N = 1;
    Rational ratio;
    long order = 0;  // surviving factors with this ratio, counted with multiplicity
    bool surviving = false;
};

struct PoleReport {
    long dimension = 2;
    std::vector<PoleCandidate> candidates;  // ascending ratio, then N
    std::vector<Factor> cancelled;
    std::optional<Rational> largest_surviving_ratio;
    bool applicable = true;  // the bound is asserted for d >= 2
    bool pass = true;        // every surviving nu/N <= d/2
};

inline PoleReport smallest_pole_report(const RationalZeta& zeta, long d) {
    const auto c = cancel(zeta);
    PoleReport rep;
    rep.dimension = d;
    rep.cancelled = c.cancelled;
    std::vector<Factor> distinct = zeta.denominator;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& f : distinct) {
        PoleCandidate pc;
        pc.N = f.N;
        pc.nu = factor_nu(f, d);
        pc.ratio = factor_ratio(f, d);
        pc.surviving = std::find(c.reduced.denominator.begin(), c.reduced.denominator.end(), f) !=
                       c.reduced.denominator.end();
        if (pc.surviving)
            pc.order = std::count_if(c.reduced.denominator.begin(), c.reduced.denominator.end(),
                                     [&](const Factor& g) { return factor_ratio(g, d) == pc.ratio; });
        rep.candidates.push_back(pc);
    }
    std::stable_sort(rep.candidates.begin(), rep.candidates.end(),
                     [](const PoleCandidate& a, const PoleCandidate& b) { return a.ratio < b.ratio; });
    rep.largest_surviving_ratio = largest_ratio(c.reduced, d);
    rep.applicable = d >= 2;
    rep.pass = !rep.largest_surviving_ratio || *rep.largest_surviving_ratio <= Rational(d) / 2;
    return rep;
}

// ---- JSON --------------------------------------------------------------------------------

inline nlohmann::ordered_json to_json(const MotivicPolynomial& p) {
    auto j = nlohmann::ordered_json::array();
    for (const auto& c : p.coefficients()) j.push_back(c.str());
    return j;
}

inline nlohmann::ordered_json to_json(const PoleReport& r) {
    nlohmann::ordered_json j;
    j["candidates"] = nlohmann::ordered_json::array();
    for (const auto& c : r.candidates)
        j["candidates"].push_back(
            {{"nu", c.nu}, {"N", c.N}, {"ratio", to_string(c.ratio)}, {"order", c.order}, {"surviving", c.surviving}});
    j["cancelled"] = nlohmann::ordered_json::array();
    for (const auto& f : r.cancelled) j["cancelled"].push_back({{"A", f.A}, {"N", f.N}});
    j["largest_ratio"] = r.largest_surviving_ratio ? nlohmann::ordered_json(to_string(*r.largest_surviving_ratio))
                                                   : nlohmann::ordered_json(nullptr);
    j["bound"] = to_string(Rational(r.dimension) / 2);
    j["verdict"] = !r.applicable ? "not-applicable" : r.pass ? "pass" : "fail";
    return j;
}

inline nlohmann::ordered_json to_json(const ValuationProfile& p) {
    nlohmann::ordered_json j;
    auto opt = [](const auto& x) {
        return x ? nlohmann::ordered_json(to_string(Rational(*x))) : nlohmann::ordered_json(nullptr);
    };
    j["l"] = opt(p.l);
    j["slope"] = opt(p.slope);
    j["fitted_a"] = p.fitted_a ? nlohmann::ordered_json(p.fitted_a->str()) : nlohmann::ordered_json(nullptr);
    j["derived_a"] = opt(p.derived_a);
    j["bound_holds"] = p.bound_holds;
    j["valuations"] = nlohmann::ordered_json::array();
    for (const auto& pt : p.points) j["valuations"].push_back({{"n", pt.n}, {"val", pt.valuation}});
    return j;
}

inline nlohmann::ordered_json to_json(const SharpnessVerdict& s) {
    nlohmann::ordered_json j;
    j["status"] = to_string(s.status);
    if (s.status == SharpnessVerdict::Status::witness) {
        j["N"] = s.N;
        j["b"] = s.b;
        j["a"] = s.a.str();
        j["margins"] = nlohmann::ordered_json::array();
        for (const auto& [n, m] : s.margins) j["margins"].push_back({{"n", n}, {"margin", to_string(m)}});
    }
    return j;
}

inline nlohmann::ordered_json to_json(const PartialFractionDecomposition& p) {
    nlohmann::ordered_json j;
    j["w"] = p.w_factors();
    j["N"] = p.N;
    j["nu"] = p.nu;
    j["A"] = p.A;
    j["m"] = p.m;
    j["blocks"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        j["blocks"].push_back({{"j", i + 1}, {"mu", to_json(p.blocks[i])}});
    j["remainder"] = to_json(p.remainder);
    j["remainder_factors"] = nlohmann::ordered_json::array();
    for (const auto& f : p.remainder_factors) j["remainder_factors"].push_back({{"A", f.A}, {"N", f.N}});
    return j;
}

}  // namespace motivic
