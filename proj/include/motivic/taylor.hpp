#pragma once

// Taylor expansion of f along a shifted jet:
//   f(b + t^l z) = sum_{|alpha| <= ceil(n/l)} (D^alpha f)(b) t^{l|alpha|} z^alpha  mod t^{n+1},
// with D^alpha the divided derivative. Both sides are computed independently, either over
// Z[b, z] (symbolic) or over Z with random integer jets (numeric).

#include "core.hpp"
#include "int_polynomial.hpp"
#include "jet_system.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace motivic {

template <class R>
struct TaylorSides {
    TruncatedSeries<R> lhs;
    TruncatedSeries<R> rhs;
    bool equal() const { return lhs.coefficients() == rhs.coefficients(); }
};

namespace detail {

// All multi-indices of length d with |alpha| <= bound.
inline void multi_indices(std::size_t d, unsigned bound, std::vector<unsigned>& cur,
                          std::vector<std::vector<unsigned>>& out) {
    if (cur.size() == d) {
        out.push_back(cur);
        return;
    }
    unsigned used = 0;
    for (unsigned a : cur) used += a;
    for (unsigned a = 0; a + used <= bound; ++a) {
        cur.push_back(a);
        multi_indices(d, bound, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// b: d jets of order n; z: d jets of order n - l (coefficients of t^0..t^{n-l}).
template <class R, class Lift>
TaylorSides<R> taylor_shift(const IntegerPolynomial& f, const std::vector<TruncatedSeries<R>>& b,
                            const std::vector<TruncatedSeries<R>>& z, std::size_t l, Lift&& lift) {
    if (b.empty() || b.size() != z.size()) throw DomainError("jet dimensions disagree");
    const std::size_t n = b.front().order();
    if (l < 1 || l > n) throw DomainError("shift order l must satisfy 1 <= l <= n");
    const std::size_t d = b.size();

    // z lifted to order n and multiplied by t^l.
    std::vector<TruncatedSeries<R>> shift;
    for (const auto& zi : z) {
        if (zi.order() != n - l) throw DomainError("z must have order n - l");
        TruncatedSeries<R> s(n);
        for (std::size_t j = 0; j + l <= n; ++j) s[j + l] = zi[j];
        shift.push_back(std::move(s));
    }

    std::vector<TruncatedSeries<R>> moved;
    for (std::size_t i = 0; i < d; ++i) moved.push_back(b[i] + shift[i]);
    TaylorSides<R> out{evaluate_on_jet<R>(f, moved, lift), TruncatedSeries<R>(n)};

    std::vector<TruncatedSeries<R>> z_full;
    for (const auto& zi : z) {
        TruncatedSeries<R> s(n);
        for (std::size_t j = 0; j + l <= n; ++j) s[j] = zi[j];
        z_full.push_back(std::move(s));
    }
    const unsigned bound = static_cast<unsigned>((n + l - 1) / l);
    std::vector<std::vector<unsigned>> alphas;
    std::vector<unsigned> cur;
    detail::multi_indices(d, bound, cur, alphas);
    for (const auto& alpha : alphas) {
        unsigned total = 0;
        for (unsigned a : alpha) total += a;
        if (static_cast<std::size_t>(total) * l > n) continue;
        TruncatedSeries<R> term = evaluate_on_jet<R>(f.divided_derivative(alpha), b, lift);
        for (std::size_t i = 0; i < d; ++i)
            for (unsigned k = 0; k < alpha[i]; ++k) term = term * z_full[i];
        out.rhs = out.rhs + term.shifted(total * l);
    }
    return out;
}

// Both sides as polynomials in the jet coefficients: b_{i,j} is variable i(n+1)+j and
// z_{i,j} is variable d(n+1) + i(n-l+1) + j.
inline TaylorSides<IntegerPolynomial> taylor_shift_symbolic(const IntegerPolynomial& f, std::size_t d, std::size_t n,
                                                            std::size_t l) {
    if (l < 1 || l > n) throw DomainError("shift order l must satisfy 1 <= l <= n");
    std::vector<TruncatedSeries<IntegerPolynomial>> b, z;
    for (std::size_t i = 0; i < d; ++i) {
        TruncatedSeries<IntegerPolynomial> bi(n), zi(n - l);
        for (std::size_t j = 0; j <= n; ++j) bi[j] = IntegerPolynomial::variable(i * (n + 1) + j);
        for (std::size_t j = 0; j + l <= n; ++j) zi[j] = IntegerPolynomial::variable(d * (n + 1) + i * (n - l + 1) + j);
        b.push_back(std::move(bi));
        z.push_back(std::move(zi));
    }
    return taylor_shift<IntegerPolynomial>(f, b, z, l, [](const Integer& c) { return IntegerPolynomial(c); });
}

// Both sides at random integer jets with entries in [0, modulus).
inline TaylorSides<Integer> taylor_shift_random(const IntegerPolynomial& f, std::size_t d, std::size_t n, std::size_t l,
                                                std::uint64_t modulus, std::uint64_t seed) {
    if (l < 1 || l > n) throw DomainError("shift order l must satisfy 1 <= l <= n");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, modulus - 1);
    std::vector<TruncatedSeries<Integer>> b, z;
    for (std::size_t i = 0; i < d; ++i) {
        TruncatedSeries<Integer> bi(n), zi(n - l);
        for (std::size_t j = 0; j <= n; ++j) bi[j] = dist(rng);
        for (std::size_t j = 0; j + l <= n; ++j) zi[j] = dist(rng);
        b.push_back(std::move(bi));
        z.push_back(std::move(zi));
    }
    return taylor_shift<Integer>(f, b, z, l, [](const Integer& c) { return c; });
}

}  // namespace motivic
