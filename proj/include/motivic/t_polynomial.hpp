#pragma once

// Dense univariate polynomials in t over a commutative coefficient ring. Used for zeta
// numerators (coefficients MotivicClass), Hodge zeta numerators and truncated series.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace motivic {

template <class Coeff>
class TPolynomial {
public:
    TPolynomial() = default;
    explicit TPolynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    TPolynomial(const Coeff& constant) {  // NOLINT
        if (!constant.is_zero()) c_.push_back(constant);
    }

    // c * t^k
    static TPolynomial monomial(const Coeff& c, std::size_t k) {
        TPolynomial r;
        if (c.is_zero()) return r;
        r.c_.resize(k + 1);
        r.c_[k] = c;
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const std::vector<Coeff>& coefficients() const { return c_; }

    Coeff operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Coeff{}; }

    void set(std::size_t k, const Coeff& v) {
        if (k >= c_.size()) c_.resize(k + 1);
        c_[k] = v;
        trim();
    }

    TPolynomial operator-() const {
        TPolynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    TPolynomial& operator+=(const TPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    TPolynomial& operator-=(const TPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    TPolynomial& operator*=(const TPolynomial& o) { return *this = *this * o; }

    friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
    friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
    friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
        }
        return TPolynomial(std::move(r));
    }
    friend TPolynomial operator*(const Coeff& s, const TPolynomial& p) {
        TPolynomial r = p;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }
    friend bool operator==(const TPolynomial& a, const TPolynomial& b) { return a.c_ == b.c_; }

    // Keeps the coefficients of t^0 .. t^n.
    TPolynomial truncated(std::size_t n) const {
        TPolynomial r = *this;
        if (r.c_.size() > n + 1) r.c_.resize(n + 1);
        r.trim();
        return r;
    }

    // Applies `f` to every coefficient (e.g. a ring homomorphism).
    template <class F>
    auto map(F&& f) const {
        using Out = decltype(f(std::declval<const Coeff&>()));
        std::vector<Out> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(f(x));
        return TPolynomial<Out>(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

}  // namespace motivic
