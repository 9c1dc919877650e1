#pragma once

// Sparse multivariate polynomials over Z, plus the text parser for polynomials on A^d.

#include "core.hpp"
#include "expression_parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motivic {

// Exponent vectors carry no trailing zeros, so polynomials in different numbers of
// variables combine freely.
class IntegerPolynomial {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Integer>;

    IntegerPolynomial() = default;
    IntegerPolynomial(const Integer& c) {  // NOLINT
        if (c != 0) terms_.emplace(Exponents{}, c);
    }
    IntegerPolynomial(long c) : IntegerPolynomial(Integer(c)) {}  // NOLINT

    static IntegerPolynomial variable(std::size_t i, unsigned e = 1) {
        IntegerPolynomial r;
        Exponents ex(i + 1, 0);
        ex[i] = e;
        r.add(std::move(ex), 1);
        return r;
    }

    static IntegerPolynomial term(Exponents ex, const Integer& c) {
        IntegerPolynomial r;
        r.add(std::move(ex), c);
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    // Number of variables actually referenced (highest index + 1).
    std::size_t variable_count() const {
        std::size_t n = 0;
        for (const auto& [e, c] : terms_) n = std::max(n, e.size());
        return n;
    }

    unsigned total_degree() const {
        unsigned m = 0;
        for (const auto& [e, c] : terms_) {
            unsigned s = 0;
            for (unsigned x : e) s += x;
            m = std::max(m, s);
        }
        return m;
    }

    IntegerPolynomial operator-() const {
        IntegerPolynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    IntegerPolynomial& operator+=(const IntegerPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    IntegerPolynomial& operator-=(const IntegerPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    IntegerPolynomial& operator*=(const IntegerPolynomial& o) { return *this = *this * o; }
    friend IntegerPolynomial operator+(IntegerPolynomial a, const IntegerPolynomial& b) { return a += b; }
    friend IntegerPolynomial operator-(IntegerPolynomial a, const IntegerPolynomial& b) { return a -= b; }
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        IntegerPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add(std::move(e), ca * cb);
            }
        return r;
    }
    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) { return a.terms_ == b.terms_; }

    IntegerPolynomial pow(unsigned e) const {
        IntegerPolynomial r(1), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }

    IntegerPolynomial derivative(std::size_t i) const {
        IntegerPolynomial r;
        for (const auto& [e, c] : terms_) {
            if (i >= e.size() || e[i] == 0) continue;
            Exponents ne = e;
            --ne[i];
            r.add(std::move(ne), c * e[i]);
        }
        return r;
    }

    // (d^|alpha| f / du^alpha) / alpha!, which stays integral.
    IntegerPolynomial divided_derivative(const std::vector<unsigned>& alpha) const {
        IntegerPolynomial r;
        for (const auto& [e, c] : terms_) {
            Integer coeff = c;
            Exponents ne = e;
            bool vanishes = false;
            for (std::size_t i = 0; i < alpha.size() && !vanishes; ++i) {
                if (alpha[i] == 0) continue;
                unsigned have = i < e.size() ? e[i] : 0;
                if (have < alpha[i]) {
                    vanishes = true;
                    break;
                }
                coeff *= binomial(have, alpha[i]);
                ne[i] -= alpha[i];
            }
            if (!vanishes) r.add(std::move(ne), coeff);
        }
        return r;
    }

    // Evaluates with values[i] substituted for variable i; `lift` embeds integer coefficients into R.
    template <class R, class Lift>
    R evaluate(const std::vector<R>& values, Lift&& lift) const {
        R total = lift(Integer(0));
        for (const auto& [e, c] : terms_) {
            R term = lift(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) term = term * values.at(i);
            total = total + term;
        }
        return total;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            bool neg = c < 0;
            Integer mag = neg ? Integer(-c) : c;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            std::string f;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!f.empty()) f += "*";
                f += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
                if (e[i] != 1) f += "^" + std::to_string(e[i]);
            }
            if (f.empty())
                out += mag.str();
            else if (mag == 1)
                out += f;
            else
                out += mag.str() + "*" + f;
        }
        return out;
    }

private:
    void add(Exponents e, const Integer& c) {
        if (c == 0) return;
        while (!e.empty() && e.back() == 0) e.pop_back();
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

// Polynomial f on A^d parsed from text. Variables are either x, y, z, w or x1..xd.
struct AffinePolynomial {
    IntegerPolynomial f;
    std::size_t dimension = 0;
    bool indexed = false;

    std::vector<std::string> variable_names() const {
        std::vector<std::string> names;
        static const char* letters[] = {"x", "y", "z", "w"};
        for (std::size_t i = 0; i < dimension; ++i)
            names.push_back(dimension <= 4 && !indexed ? letters[i] : "x" + std::to_string(i + 1));
        return names;
    }

    std::string str() const { return f.str(variable_names()); }
};

namespace detail {

// Index of a variable name: x,y,z,w -> 0..3 (lettered) or xK -> K-1 (indexed).
inline std::optional<std::pair<std::size_t, bool>> variable_index(std::string_view name) {
    if (name.size() == 1) {
        switch (name[0]) {
            case 'x': return std::pair<std::size_t, bool>{0, false};
            case 'y': return std::pair<std::size_t, bool>{1, false};
            case 'z': return std::pair<std::size_t, bool>{2, false};
            case 'w': return std::pair<std::size_t, bool>{3, false};
            default: return std::nullopt;
        }
    }
    if (name.size() >= 2 && name[0] == 'x' && name[1] != '0') {
        std::size_t k = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            k = k * 10 + static_cast<std::size_t>(name[i] - '0');
            if (k > 64) return std::nullopt;
        }
        return std::pair<std::size_t, bool>{k - 1, true};
    }
    return std::nullopt;
}

struct AffineBuilder {
    bool lettered = false;
    bool indexed = false;
    std::size_t dimension = 0;

    IntegerPolynomial constant(const Integer& c) { return IntegerPolynomial(c); }
    IntegerPolynomial identifier(std::string_view name, std::size_t pos) {
        auto v = variable_index(name);
        if (!v) throw ParseError("unknown variable '" + std::string(name) + "' (use x, y, z, w or x1..xd)", pos);
        (v->second ? indexed : lettered) = true;
        if (lettered && indexed) throw ParseError("cannot mix lettered and indexed variables", pos);
        dimension = std::max(dimension, v->first + 1);
        return IntegerPolynomial::variable(v->first);
    }
    IntegerPolynomial power(const IntegerPolynomial& base, long e, std::string_view, std::size_t pos) {
        if (e < 0) throw ParseError("negative exponent in polynomial", pos);
        return base.pow(static_cast<unsigned>(e));
    }
};

}  // namespace detail

// `dimension` of 0 means max(2, number of variables referenced).
inline AffinePolynomial parse_affine_polynomial(std::string_view text, std::size_t dimension = 0) {
    detail::AffineBuilder b;
    IntegerPolynomial f = parse_expression(text, b);
    if (f.is_constant()) throw ParseError("polynomial must be non-constant", 0);
    AffinePolynomial out;
    out.f = std::move(f);
    out.indexed = b.indexed;
    std::size_t used = b.dimension;
    if (dimension == 0) dimension = std::max<std::size_t>(2, used);
    if (dimension < used) throw DomainError("polynomial uses more variables than the requested dimension");
    if (!out.indexed && dimension > 4) out.indexed = true;
    out.dimension = dimension;
    return out;
}

}  // namespace motivic
