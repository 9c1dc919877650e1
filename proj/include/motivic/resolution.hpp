#pragma once

// Numerical data of an embedded resolution: components E_i with (N_i, nu_i) and the
// classes of the strata E_I^o.

#include "core.hpp"
#include "motivic_class.hpp"
#include "specialize.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace motivic {

struct Component {
    std::string id;
    long N = 1;
    long nu = 1;
};

// Specialization values attached to the strata symbols. Point counts depend on the field size.
struct Specializations {
    std::map<std::uint64_t, std::map<std::string, Integer>> points;
    std::map<std::string, HodgePolynomial> hodge;
    std::map<std::string, Integer> euler;

    SymbolTable table(std::uint64_t q = 0) const {
        SymbolTable t;
        if (auto it = points.find(q); it != points.end()) t.points = it->second;
        t.hodge = hodge;
        t.euler = euler;
        return t;
    }
};

struct ResolutionData {
    using Subset = std::vector<std::string>;  // sorted component ids

    long dimension = 1;
    std::vector<std::string> symbols;
    std::vector<Component> components;
    std::map<Subset, MotivicClass> strata;  // absent subsets have class 0
    std::optional<MotivicClass> ambient;
    std::optional<MotivicClass> divisor;
    std::optional<std::string> polynomial;  // f in the polynomial input language, when known
    Specializations specializations;

    MotivicClass stratum(const Subset& subset) const {
        auto it = strata.find(subset);
        return it == strata.end() ? MotivicClass{} : it->second;
    }

    // [X], defaulting to affine d-space.
    MotivicClass ambient_class() const { return ambient ? *ambient : MotivicClass::lefschetz(dimension); }

    // [V], defaulting to [X] - [E_emptyset^o] (the complement of V is the empty stratum).
    MotivicClass divisor_class() const { return divisor ? *divisor : ambient_class() - stratum({}); }
};

// Reports every violated structural requirement; an empty list means the data is usable.
inline std::vector<std::string> validate_resolution(const ResolutionData& data) {
    std::vector<std::string> out;
    if (data.dimension < 1) out.push_back("dimension must be >= 1");
    std::set<std::string> ids;
    for (const auto& c : data.components) {
        if (!ids.insert(c.id).second) out.push_back("duplicate component id '" + c.id + "'");
        if (c.N < 1) out.push_back("component " + c.id + ": N must be >= 1");
        if (c.nu < 1) out.push_back("component " + c.id + ": nu must be >= 1");
        long a = data.dimension * c.N - c.nu;
        if (a < 0)
            out.push_back("component " + c.id + ": d*N - nu = " + std::to_string(a) + " is negative");
    }
    if (!data.strata.count({})) out.push_back("missing stratum for the empty subset");
    std::set<std::string> declared(data.symbols.begin(), data.symbols.end());
    if (declared.count("L")) out.push_back("'L' cannot be declared as a symbol");
    for (const auto& [subset, cls] : data.strata) {
        std::set<std::string> seen;
        for (const auto& id : subset) {
            if (!ids.count(id)) out.push_back("stratum references unknown component '" + id + "'");
            if (!seen.insert(id).second) out.push_back("stratum lists component '" + id + "' twice");
        }
        for (const auto& s : cls.symbols())
            if (!declared.count(s)) out.push_back("stratum uses undeclared symbol '" + s + "'");
    }
    return out;
}

}  // namespace motivic
