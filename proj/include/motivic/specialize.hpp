#pragma once

// Ring homomorphisms out of the effective Grothendieck ring: point counts (L -> q),
// Hodge-Deligne polynomials (L -> uv) and the Euler characteristic (L -> 1).

#include "core.hpp"
#include "expression_parser.hpp"
#include "motivic_class.hpp"

#include <map>
#include <ostream>
#include <string>
#include <utility>

namespace motivic {

// Integer polynomial in u, v. Negative exponents are representable so that images of
// classes with L^-k can be formed before checking they clear.
class HodgePolynomial {
public:
    using Exponent = std::pair<long, long>;

    // Total degree, then u-degree.
    struct DegreeOrder {
        bool operator()(const Exponent& a, const Exponent& b) const {
            long da = a.first + a.second, db = b.first + b.second;
            if (da != db) return da < db;
            return a.first < b.first;
        }
    };
    using TermMap = std::map<Exponent, Integer, DegreeOrder>;

    HodgePolynomial() = default;
    HodgePolynomial(const Integer& c) {  // NOLINT
        if (c != 0) terms_.emplace(Exponent{0, 0}, c);
    }
    HodgePolynomial(long c) : HodgePolynomial(Integer(c)) {}  // NOLINT

    static HodgePolynomial monomial(long p, long q, const Integer& c = 1) {
        HodgePolynomial r;
        if (c != 0) r.terms_.emplace(Exponent{p, q}, c);
        return r;
    }
    static HodgePolynomial uv(long k) { return monomial(k, k); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_polynomial() const {
        for (const auto& [e, c] : terms_)
            if (e.first < 0 || e.second < 0) return false;
        return true;
    }

    Integer coefficient(long p, long q) const {
        auto it = terms_.find({p, q});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    HodgePolynomial operator-() const {
        HodgePolynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    HodgePolynomial& operator+=(const HodgePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    HodgePolynomial& operator-=(const HodgePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    HodgePolynomial& operator*=(const HodgePolynomial& o) { return *this = *this * o; }
    friend HodgePolynomial operator+(HodgePolynomial a, const HodgePolynomial& b) { return a += b; }
    friend HodgePolynomial operator-(HodgePolynomial a, const HodgePolynomial& b) { return a -= b; }
    friend HodgePolynomial operator*(const HodgePolynomial& a, const HodgePolynomial& b) {
        HodgePolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return r;
    }
    friend bool operator==(const HodgePolynomial& a, const HodgePolynomial& b) { return a.terms_ == b.terms_; }

    HodgePolynomial pow(unsigned e) const {
        HodgePolynomial r(1), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }

    // Highest total degree first, then by u-degree.
    std::string str() const {
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
            auto put = [&f](const char* var, long k) {
                if (k == 0) return;
                if (!f.empty()) f += "*";
                f += var;
                if (k != 1) f += "^" + std::to_string(k);
            };
            put("u", e.first);
            put("v", e.second);
            if (f.empty())
                out += mag.str();
            else if (mag == 1)
                out += f;
            else
                out += mag.str() + "*" + f;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const HodgePolynomial& h) { return os << h.str(); }

private:
    void add(const Exponent& e, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

namespace detail {

struct HodgeBuilder {
    HodgePolynomial constant(const Integer& c) { return HodgePolynomial(c); }
    HodgePolynomial identifier(std::string_view name, std::size_t pos) {
        if (name == "u") return HodgePolynomial::monomial(1, 0);
        if (name == "v") return HodgePolynomial::monomial(0, 1);
        throw ParseError("unknown variable '" + std::string(name) + "' (expected u or v)", pos);
    }
    HodgePolynomial power(const HodgePolynomial& base, long e, std::string_view, std::size_t pos) {
        if (e < 0) throw ParseError("negative exponent in Hodge polynomial", pos);
        return base.pow(static_cast<unsigned>(e));
    }
};

}  // namespace detail

inline HodgePolynomial parse_hodge(std::string_view text) {
    detail::HodgeBuilder b;
    return parse_expression(text, b);
}

// Specialization values per stratum symbol. Point counts refer to one fixed field size.
struct SymbolTable {
    std::map<std::string, Integer> points;
    std::map<std::string, HodgePolynomial> hodge;
    std::map<std::string, Integer> euler;
};

namespace detail {

template <class Map>
const auto& lookup(const Map& m, const std::string& name, const char* what) {
    auto it = m.find(name);
    if (it == m.end()) throw DomainError(std::string("no ") + what + " value for symbol '" + name + "'");
    return it->second;
}

}  // namespace detail

// Evaluates at L = q. Negative powers of L are handled in Q; the result must be integral.
inline Integer specialize_point_count(const MotivicClass& a, std::uint64_t q, const SymbolTable& table = {}) {
    if (q < 2) throw DomainError("field size must be at least 2");
    Rational total = 0;
    for (const auto& [key, c] : a.terms()) {
        Rational term = c;
        Integer qp = boost::multiprecision::pow(Integer(q), static_cast<unsigned>(key.lexp < 0 ? -key.lexp : key.lexp));
        if (key.lexp >= 0)
            term *= qp;
        else
            term /= qp;
        for (const auto& [name, e] : key.symbols)
            term *= Rational(boost::multiprecision::pow(detail::lookup(table.points, name, "point-count"), e));
        total += term;
    }
    if (boost::multiprecision::denominator(total) != 1)
        throw DomainError("point count specialization is not integral: " + to_string(total));
    return boost::multiprecision::numerator(total);
}

inline HodgePolynomial specialize_hodge(const MotivicClass& a, const SymbolTable& table = {}) {
    HodgePolynomial total;
    for (const auto& [key, c] : a.terms()) {
        HodgePolynomial term = HodgePolynomial::monomial(key.lexp, key.lexp, c);
        for (const auto& [name, e] : key.symbols) term *= detail::lookup(table.hodge, name, "Hodge").pow(e);
        total += term;
    }
    if (!total.is_polynomial()) throw DomainError("Hodge specialization is not a polynomial: " + total.str());
    return total;
}

inline Integer specialize_euler(const MotivicClass& a, const SymbolTable& table = {}) {
    Integer total = 0;
    for (const auto& [key, c] : a.terms()) {
        Integer term = c;
        for (const auto& [name, e] : key.symbols)
            term *= boost::multiprecision::pow(detail::lookup(table.euler, name, "Euler"), e);
        total += term;
    }
    return total;
}

}  // namespace motivic
