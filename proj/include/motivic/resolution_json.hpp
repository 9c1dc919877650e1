#pragma once

// JSON documents: resolution data and explicitly supplied zeta functions.

#include "core.hpp"
#include "motivic_class.hpp"
#include "resolution.hpp"
#include "specialize.hpp"
#include "zeta.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace motivic {

namespace detail {

using nlohmann::json;

inline const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(std::string("missing key '") + key + "'");
    return *it;
}

inline long as_long(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw SchemaError(what + " must be an integer");
    return v.get<long>();
}

inline std::string as_string(const json& v, const std::string& what) {
    if (!v.is_string()) throw SchemaError(what + " must be a string");
    return v.get<std::string>();
}

inline void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!obj.is_object()) throw SchemaError(what + " must be an object");
    for (const auto& [k, v] : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
            throw SchemaError("unexpected key '" + k + "' in " + what);
    }
}

inline MotivicClass class_field(const json& v, const std::string& what, const std::set<std::string>& declared) {
    std::string text = as_string(v, what);
    try {
        return parse_class(text, &declared);
    } catch (const ParseError& e) {
        throw SchemaError(what + ": " + e.what());
    }
}

inline std::set<std::string> read_symbols(const json& doc) {
    std::set<std::string> declared;
    if (auto it = doc.find("symbols"); it != doc.end()) {
        if (!it->is_array()) throw SchemaError("'symbols' must be an array");
        for (const auto& s : *it) declared.insert(as_string(s, "symbol"));
    }
    return declared;
}

}  // namespace detail

// Optional keys beyond the core schema: "polynomial" (jet-engine text of f) and
// "specializations" ({"points": {"<q>": {sym: int}}, "hodge": {sym: "u*v - 1"}, "euler": {sym: int}}).
inline ResolutionData resolution_from_json(const nlohmann::json& doc) {
    using namespace detail;
    only_keys(doc, {"dimension", "symbols", "components", "strata", "ambient", "divisor", "polynomial", "specializations"},
              "resolution document");
    ResolutionData data;
    data.dimension = as_long(require(doc, "dimension"), "'dimension'");
    std::set<std::string> declared = read_symbols(doc);
    data.symbols.assign(declared.begin(), declared.end());

    const json& comps = require(doc, "components");
    if (!comps.is_array()) throw SchemaError("'components' must be an array");
    for (const auto& c : comps) {
        only_keys(c, {"id", "N", "nu"}, "component");
        data.components.push_back({as_string(require(c, "id"), "component id"), as_long(require(c, "N"), "component N"),
                                   as_long(require(c, "nu"), "component nu")});
    }

    const json& strata = require(doc, "strata");
    if (!strata.is_array()) throw SchemaError("'strata' must be an array");
    for (const auto& s : strata) {
        only_keys(s, {"subset", "class"}, "stratum");
        const json& subset = require(s, "subset");
        if (!subset.is_array()) throw SchemaError("stratum 'subset' must be an array");
        ResolutionData::Subset ids;
        for (const auto& id : subset) ids.push_back(as_string(id, "subset entry"));
        std::sort(ids.begin(), ids.end());
        MotivicClass cls = class_field(require(s, "class"), "stratum class", declared);
        if (!data.strata.emplace(ids, cls).second) throw SchemaError("duplicate stratum subset");
    }
    if (auto it = doc.find("ambient"); it != doc.end()) data.ambient = class_field(*it, "'ambient'", declared);
    if (auto it = doc.find("divisor"); it != doc.end()) data.divisor = class_field(*it, "'divisor'", declared);
    if (auto it = doc.find("polynomial"); it != doc.end()) data.polynomial = as_string(*it, "'polynomial'");

    if (auto it = doc.find("specializations"); it != doc.end()) {
        only_keys(*it, {"points", "hodge", "euler"}, "'specializations'");
        if (auto p = it->find("points"); p != it->end()) {
            if (!p->is_object()) throw SchemaError("'points' must be an object");
            for (const auto& [qtext, table] : p->items()) {
                std::uint64_t q = 0;
                try {
                    q = std::stoull(qtext);
                } catch (const std::exception&) {
                    throw SchemaError("point-count key '" + qtext + "' is not a field size");
                }
                if (!table.is_object()) throw SchemaError("point-count table must be an object");
                for (const auto& [sym, v] : table.items())
                    data.specializations.points[q][sym] = Integer(as_long(v, "point count"));
            }
        }
        if (auto h = it->find("hodge"); h != it->end()) {
            if (!h->is_object()) throw SchemaError("'hodge' must be an object");
            for (const auto& [sym, v] : h->items()) {
                try {
                    data.specializations.hodge[sym] = parse_hodge(as_string(v, "Hodge polynomial"));
                } catch (const ParseError& e) {
                    throw SchemaError("Hodge polynomial for '" + sym + "': " + e.what());
                }
            }
        }
        if (auto e = it->find("euler"); e != it->end()) {
            if (!e->is_object()) throw SchemaError("'euler' must be an object");
            for (const auto& [sym, v] : e->items()) data.specializations.euler[sym] = Integer(as_long(v, "Euler value"));
        }
    }
    return data;
}

// {"dimension": d, "symbols": [...], "numerator": [expr, ...], "denominator": [{"A": a, "N": n}, ...]}
struct SuppliedZeta {
    long dimension = 2;
    RationalZeta zeta;
};

inline SuppliedZeta zeta_from_json(const nlohmann::json& doc) {
    using namespace detail;
    only_keys(doc, {"dimension", "symbols", "numerator", "denominator"}, "zeta document");
    SuppliedZeta out;
    out.dimension = as_long(require(doc, "dimension"), "'dimension'");
    std::set<std::string> declared = read_symbols(doc);
    const json& num = require(doc, "numerator");
    if (!num.is_array()) throw SchemaError("'numerator' must be an array");
    std::vector<MotivicClass> coeffs;
    for (const auto& c : num) coeffs.push_back(class_field(c, "numerator coefficient", declared));
    out.zeta.numerator = TPolynomial<MotivicClass>(std::move(coeffs));
    const json& den = require(doc, "denominator");
    if (!den.is_array()) throw SchemaError("'denominator' must be an array");
    for (const auto& f : den) {
        only_keys(f, {"A", "N"}, "denominator factor");
        Factor fac{as_long(require(f, "A"), "factor A"), as_long(require(f, "N"), "factor N")};
        if (fac.A < 0 || fac.N < 1) throw SchemaError("denominator factor needs A >= 0 and N >= 1");
        out.zeta.denominator.push_back(fac);
    }
    return out;
}

inline nlohmann::ordered_json zeta_to_json(const RationalZeta& z) {
    nlohmann::ordered_json j;
    j["numerator"] = nlohmann::ordered_json::array();
    for (const auto& c : z.numerator.coefficients()) j["numerator"].push_back(c.str());
    j["denominator"] = nlohmann::ordered_json::array();
    for (const auto& f : z.denominator) j["denominator"].push_back({{"A", f.A}, {"N", f.N}});
    return j;
}

}  // namespace motivic
