#pragma once

// Truncated jet equations: substituting x_i(t) = sum_j a_{i,j} t^j into f and reading off
// the coefficients of t^0..t^n.

#include "core.hpp"
#include "int_polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace motivic {

// Power series modulo t^{order+1} over a ring R whose default value is zero.
template <class R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
    TruncatedSeries(std::size_t order, const R& constant) : c_(order + 1) { c_[0] = constant; }

    std::size_t order() const { return c_.size() - 1; }
    R& operator[](std::size_t k) { return c_[k]; }
    const R& operator[](std::size_t k) const { return c_[k]; }
    const std::vector<R>& coefficients() const { return c_; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] = a.c_[k] + b.c_[k];
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; i + j < a.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        return r;
    }

    // Multiplication by t^k.
    TruncatedSeries shifted(std::size_t k) const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

private:
    std::vector<R> c_;
};

// f evaluated on a jet (one truncated series per coordinate).
template <class R, class Lift>
TruncatedSeries<R> evaluate_on_jet(const IntegerPolynomial& f, const std::vector<TruncatedSeries<R>>& jet, Lift&& lift) {
    const std::size_t order = jet.empty() ? 0 : jet.front().order();
    return f.evaluate(jet, [&](const Integer& c) { return TruncatedSeries<R>(order, lift(c)); });
}

// Equations F_0..F_n of L_n(V) in the jet coefficients. Variable a_{i,j} (i = 0..d-1,
// j = 0..n) has index i * stride + j; stride >= n + 1 lets several systems share one layout.
struct JetSystem {
    std::size_t dimension = 0;
    std::size_t order = 0;
    std::size_t stride = 1;
    std::vector<IntegerPolynomial> equations;

    std::size_t variable(std::size_t i, std::size_t j) const { return i * stride + j; }
};

inline JetSystem jet_truncate(const IntegerPolynomial& f, std::size_t d, std::size_t n, std::size_t stride = 0) {
    if (stride == 0) stride = n + 1;
    if (stride < n + 1) throw DomainError("jet layout stride too small");
    if (f.variable_count() > d) throw DomainError("polynomial uses more variables than the dimension");
    std::vector<TruncatedSeries<IntegerPolynomial>> jet;
    for (std::size_t i = 0; i < d; ++i) {
        TruncatedSeries<IntegerPolynomial> x(n);
        for (std::size_t j = 0; j <= n; ++j) x[j] = IntegerPolynomial::variable(i * stride + j);
        jet.push_back(std::move(x));
    }
    auto series = evaluate_on_jet(f, jet, [](const Integer& c) { return IntegerPolynomial(c); });
    return JetSystem{d, n, stride, series.coefficients()};
}

// Polynomial reduced mod q, flattened for repeated evaluation on small integer vectors.
class CompiledPolynomial {
public:
    CompiledPolynomial() = default;
    CompiledPolynomial(const IntegerPolynomial& p, std::uint64_t q) : q_(q) {
        for (const auto& [e, c] : p.terms()) {
            Integer r = c % q;
            if (r < 0) r += q;
            if (r == 0) continue;
            Term t;
            t.coeff = static_cast<std::uint64_t>(r);
            t.begin = factors_.size();
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) factors_.push_back(static_cast<std::uint32_t>(i));
            t.end = factors_.size();
            terms_.push_back(t);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    std::uint64_t operator()(const std::uint32_t* values) const {
        std::uint64_t sum = 0;
        for (const auto& t : terms_) {
            std::uint64_t v = t.coeff;
            for (std::size_t k = t.begin; k < t.end && v; ++k) v = v * values[factors_[k]] % q_;
            sum += v;
            if (sum >= q_) sum -= q_;
        }
        return sum;
    }

private:
    struct Term {
        std::uint64_t coeff = 0;
        std::size_t begin = 0, end = 0;
    };
    std::uint64_t q_ = 2;
    std::vector<Term> terms_;
    std::vector<std::uint32_t> factors_;  // variable index repeated by exponent
};

inline std::vector<CompiledPolynomial> compile(const std::vector<IntegerPolynomial>& ps, std::uint64_t q) {
    std::vector<CompiledPolynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.emplace_back(p, q);
    return out;
}

}  // namespace motivic
