#pragma once

// Classes in the Grothendieck ring of varieties, localized at the Lefschetz class L.
//
// The ring is modeled effectively: Z-linear combinations of L^k * (monomial in declared
// stratum symbols), k in Z. A class is effective-representable when no term carries a
// negative power of L.

#include "core.hpp"
#include "expression_parser.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace motivic {

class MotivicClass {
public:
    // Sorted by symbol name, exponents positive.
    using Monomial = std::vector<std::pair<std::string, unsigned>>;

    struct Key {
        long lexp = 0;
        Monomial symbols;

        friend bool operator<(const Key& a, const Key& b) {
            return std::tie(a.lexp, a.symbols) < std::tie(b.lexp, b.symbols);
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.lexp == b.lexp && a.symbols == b.symbols;
        }
    };

    using TermMap = std::map<Key, Integer>;

    MotivicClass() = default;
    MotivicClass(const Integer& c) {  // NOLINT: implicit scalar embedding
        if (c != 0) terms_.emplace(Key{}, c);
    }
    MotivicClass(long c) : MotivicClass(Integer(c)) {}  // NOLINT

    static MotivicClass lefschetz(long k = 1) {
        MotivicClass r;
        r.terms_.emplace(Key{k, {}}, 1);
        return r;
    }

    static MotivicClass symbol(const std::string& name) {
        if (name == "L") throw DomainError("'L' is reserved for the Lefschetz class");
        MotivicClass r;
        r.terms_.emplace(Key{0, {{name, 1u}}}, 1);
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_effective() const {
        return terms_.empty() || terms_.begin()->first.lexp >= 0;
    }

    // Minimum power of L over all terms; nullopt stands for +infinity (zero class).
    std::optional<long> l_valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.lexp;
    }

    long l_degree() const {
        long m = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (first || k.lexp > m) m = k.lexp;
            first = false;
        }
        return m;
    }

    // Divisibility by L^k in the effective model.
    bool l_divisible(long k) const {
        if (!is_effective())
            throw DomainError("divisibility by L is vacuous for a class with negative powers of L");
        auto v = l_valuation();
        return !v || *v >= k;
    }

    MotivicClass shifted(long k) const {
        MotivicClass r;
        for (const auto& [key, c] : terms_) r.terms_.emplace(Key{key.lexp + k, key.symbols}, c);
        return r;
    }

    std::set<std::string> symbols() const {
        std::set<std::string> s;
        for (const auto& [key, c] : terms_)
            for (const auto& [name, e] : key.symbols) s.insert(name);
        return s;
    }

    MotivicClass operator-() const {
        MotivicClass r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    MotivicClass& operator+=(const MotivicClass& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    MotivicClass& operator-=(const MotivicClass& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    MotivicClass& operator*=(const MotivicClass& o) { return *this = *this * o; }

    friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
    friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }

    friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
        MotivicClass r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(Key{ka.lexp + kb.lexp, merge(ka.symbols, kb.symbols)}, ca * cb);
        return r;
    }

    friend bool operator==(const MotivicClass& a, const MotivicClass& b) { return a.terms_ == b.terms_; }

    MotivicClass pow(unsigned e) const {
        MotivicClass r(1), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }

    // Canonical rendering, terms in (lexp, symbol monomial) order; "0" for the zero class.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            bool neg = c < 0;
            Integer mag = neg ? Integer(-c) : c;
            if (first)
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            first = false;
            std::string factors;
            if (key.lexp == 1)
                factors = "L";
            else if (key.lexp != 0)
                factors = "L^" + std::to_string(key.lexp);
            for (const auto& [name, e] : key.symbols) {
                if (!factors.empty()) factors += "*";
                factors += name;
                if (e != 1) factors += "^" + std::to_string(e);
            }
            if (factors.empty())
                out += mag.str();
            else if (mag == 1)
                out += factors;
            else
                out += mag.str() + "*" + factors;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const MotivicClass& a) { return os << a.str(); }

private:
    void add_term(const Key& k, const Integer& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static Monomial merge(const Monomial& a, const Monomial& b) {
        Monomial r;
        r.reserve(a.size() + b.size());
        auto i = a.begin(), j = b.begin();
        while (i != a.end() || j != b.end()) {
            if (j == b.end() || (i != a.end() && i->first < j->first))
                r.push_back(*i++);
            else if (i == a.end() || j->first < i->first)
                r.push_back(*j++);
            else {
                r.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        return r;
    }

    TermMap terms_;
};

namespace detail {

struct ClassBuilder {
    const std::set<std::string>* declared = nullptr;

    MotivicClass constant(const Integer& c) { return MotivicClass(c); }

    MotivicClass identifier(std::string_view name, std::size_t pos) {
        if (name == "L") return MotivicClass::lefschetz();
        if (declared && !declared->count(std::string(name)))
            throw ParseError("undeclared symbol '" + std::string(name) + "'", pos);
        return MotivicClass::symbol(std::string(name));
    }

    MotivicClass power(const MotivicClass& base, long e, std::string_view bare, std::size_t pos) {
        if (e < 0) {
            if (bare != "L") throw ParseError("negative exponents are only allowed on L", pos);
            return MotivicClass::lefschetz(e);
        }
        return base.pow(static_cast<unsigned>(e));
    }
};

}  // namespace detail

// Parses a class expression; when `declared` is given, every non-L identifier must be in it.
inline MotivicClass parse_class(std::string_view text, const std::set<std::string>* declared = nullptr) {
    detail::ClassBuilder b{declared};
    return parse_expression(text, b);
}

}  // namespace motivic
