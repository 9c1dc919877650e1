#pragma once

// Command-line front end. `run` is the whole program minus process setup, so tests drive it
// in-process with string streams.
//
// Exit codes: 0 success, 1 usage, 2 unreadable or schema-violating input, 3 validation
// diagnostics or precondition failures, 4 evaluation budget exceeded, 5 verification mismatch.

#include "core.hpp"
#include "int_polynomial.hpp"
#include "jet_count.hpp"
#include "pole_analysis.hpp"
#include "resolution.hpp"
#include "resolution_json.hpp"
#include "specialize.hpp"
#include "taylor.hpp"
#include "zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace motivic::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kValidation = 3, kBudget = 4, kMismatch = 5 };

struct RunConfig {
    std::string command;
    std::string input;
    std::string f;
    std::size_t dim = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t l = 1;
    std::optional<std::size_t> n_max;
    std::vector<std::uint64_t> q;
    long c = 1;
    std::optional<std::size_t> expand;
    std::optional<long> k0;
    bool hodge = false;
    std::uint64_t budget = default_budget();
    unsigned jobs = 1;
    std::string format = "json";
};

class UsageError : public Error {
public:
    using Error::Error;
};

class ValidationFailed : public Error {
public:
    explicit ValidationFailed(std::vector<std::string> diagnostics)
        : Error("resolution data failed validation"), diagnostics_(std::move(diagnostics)) {}
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

// Raised by `verify` after its report is written.
class Mismatch : public Error {
public:
    using Error::Error;
};

namespace detail {

inline nlohmann::json load_document(const std::string& path) {
    if (path.empty()) throw UsageError("--in is required");
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("malformed JSON in '" + path + "' at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline ResolutionData checked_resolution(const nlohmann::json& doc) {
    ResolutionData data = resolution_from_json(doc);
    auto diags = validate_resolution(data);
    if (!diags.empty()) throw ValidationFailed(std::move(diags));
    return data;
}

inline ResolutionData load_resolution(const std::string& path) { return checked_resolution(load_document(path)); }

inline Json zeta_json(const RationalZeta& z) { return zeta_to_json(z); }

inline Json hodge_json(const HodgeZeta& z) {
    Json j;
    j["numerator"] = Json::array();
    for (const auto& c : z.numerator.coefficients()) j["numerator"].push_back(c.str());
    j["denominator"] = Json::array();
    for (const auto& f : z.denominator) j["denominator"].push_back({{"A", f.A}, {"N", f.N}});
    return j;
}

template <class Coeff>
std::string series_text(const RationalSeries<Coeff>& z, const char* x) {
    std::string num;
    const auto& cs = z.numerator.coefficients();
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].is_zero()) continue;
        if (!num.empty()) num += " + ";
        num += "(" + cs[j].str() + ")";
        if (j == 1) num += "*t";
        if (j > 1) num += "*t^" + std::to_string(j);
    }
    if (num.empty()) num = "0";
    std::string den;
    for (const auto& f : z.denominator) {
        den += "(1 - " + std::string(x);
        if (f.A != 1) den += "^" + std::to_string(f.A);
        den += "*t";
        if (f.N != 1) den += "^" + std::to_string(f.N);
        den += ")";
    }
    return den.empty() ? num : "[" + num + "] / [" + den + "]";
}

// Two-column table with the first column right-aligned.
inline std::string table(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.first.size());
    std::ostringstream os;
    for (const auto& [a, b] : rows) os << std::setw(static_cast<int>(w)) << a << "  " << b << "\n";
    return os.str();
}

inline std::vector<std::uint64_t> field_sizes(const RunConfig& cfg) {
    if (cfg.q.empty()) throw UsageError("--q is required");
    for (auto q : cfg.q)
        if (!is_prime(q)) throw UsageError("--q entry " + std::to_string(q) + " is not prime");
    return cfg.q;
}

inline AffinePolynomial polynomial(const RunConfig& cfg) {
    if (cfg.f.empty()) throw UsageError("--f is required");
    return parse_affine_polynomial(cfg.f, cfg.dim);
}

inline CountOptions count_options(const RunConfig& cfg) { return CountOptions{cfg.budget, cfg.jobs}; }

inline Json coefficient_list(const std::vector<MotivicClass>& cs) {
    Json a = Json::array();
    for (std::size_t n = 0; n < cs.size(); ++n) a.push_back({{"n", n}, {"class", cs[n].str()}});
    return a;
}

inline std::string coefficient_text(const Json& list, const char* key = "class") {
    std::vector<std::pair<std::string, std::string>> rows{{"n", key}};
    for (const auto& e : list) rows.emplace_back(std::to_string(e["n"].get<long>()), e[key].get<std::string>());
    return table(rows);
}

// ---- zeta -----------------------------------------------------------------------------

inline Json k0_block(const ResolutionData& data, long c, std::optional<std::size_t> n_max) {
    const RationalZeta z = denef_loeser(data);
    const RationalZeta k = k0_series(data, c);
    const long shift = k0_shift(data.dimension, c);
    bool effective = true;
    for (const auto& x : k.numerator.coefficients()) effective = effective && x.is_effective();
    Json j;
    j["c"] = c;
    j["shift"] = shift;
    j["zeta"] = zeta_json(k);
    j["identity"] = same_rational_function(rescale_t(k, shift), z);
    if (n_max) {
        auto cs = expand(k, *n_max);
        for (const auto& x : cs) effective = effective && x.is_effective();
        j["coefficients"] = coefficient_list(cs);
    }
    j["effective"] = effective;
    return j;
}

inline Json hodge_block(const ResolutionData& data, std::optional<std::size_t> n_max) {
    const SymbolTable table = data.specializations.table();
    const HodgeZeta h = hodge_zeta(data, table);
    Json j = hodge_json(h);
    j["matches_specialized"] = same_rational_function(h, specialize_hodge(denef_loeser(data), table));
    if (n_max) {
        auto hs = expand(h, *n_max);
        auto ms = expand(denef_loeser(data), *n_max);
        bool agree = true;
        Json a = Json::array();
        for (std::size_t n = 0; n < hs.size(); ++n) {
            agree = agree && hs[n] == specialize_hodge(ms[n], table);
            a.push_back({{"n", n}, {"hodge", hs[n].str()}});
        }
        j["coefficients"] = a;
        j["coefficientwise_agreement"] = agree;
    }
    return j;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline int cmd_zeta(const std::string& sub, const RunConfig& cfg, std::ostream& out) {
    const ResolutionData data = load_resolution(cfg.input);
    const RationalZeta z = denef_loeser(data);
    Json j;
    j["command"] = "zeta " + sub;
    j["dimension"] = data.dimension;
    j["zeta"] = zeta_json(z);
    std::ostringstream text;
    text << "Z(t) = " << series_text(z, "L") << "\n";

    std::optional<std::size_t> n_expand = cfg.expand;
    if (sub == "expand") n_expand = cfg.n_max.value_or(10);
    if (n_expand) {
        auto cs = expand(z, *n_expand);
        bool agree = true;
        for (std::size_t n = 1; n < cs.size(); ++n) agree = agree && cs[n] == contact_coefficient(data, static_cast<long>(n));
        j["coefficients"] = coefficient_list(cs);
        j["tuple_sum_agreement"] = agree;
        text << "\n" << coefficient_text(j["coefficients"]) << "tuple-sum agreement: " << yes_no(agree) << "\n";
        if (sub == "expand") {
            auto jets = z_to_j(cs, data.ambient_class(), data.divisor_class(), data.dimension);
            Json a = coefficient_list(jets);
            j["jet_classes"] = a;
            text << "\njet scheme classes [L_n(V)]\n" << coefficient_text(a);
        }
    }
    std::optional<long> c = cfg.k0;
    if (sub == "k0") c = cfg.c;
    if (c) {
        Json k = k0_block(data, *c, sub == "k0" ? cfg.n_max : std::nullopt);
        text << "\nK0 series (c = " << *c << ", t -> L^" << k["shift"].get<long>() << " t)\n"
             << "  " << series_text(k0_series(data, *c), "L") << "\n"
             << "  identity with Z(L^" << k["shift"].get<long>() << " t): " << yes_no(k["identity"].get<bool>()) << "\n"
             << "  effective: " << yes_no(k["effective"].get<bool>()) << "\n";
        if (k.contains("coefficients")) text << coefficient_text(k["coefficients"]);
        j["k0"] = k;
    }
    if (cfg.hodge || sub == "hodge") {
        Json h = hodge_block(data, sub == "hodge" ? cfg.n_max : std::nullopt);
        text << "\nHodge zeta = " << series_text(hodge_zeta(data, data.specializations.table()), "(uv)") << "\n"
             << "  equals specialized motivic zeta: " << yes_no(h["matches_specialized"].get<bool>()) << "\n";
        if (h.contains("coefficients"))
            text << coefficient_text(h["coefficients"], "hodge") << "coefficientwise agreement: "
                 << yes_no(h["coefficientwise_agreement"].get<bool>()) << "\n";
        j["hodge"] = h;
    }
    if (cfg.format == "text")
        out << text.str();
    else
        out << j.dump(2) << "\n";
    return kOk;
}

// ---- jets -----------------------------------------------------------------------------

inline Json stratification_json(const StratificationReport& r) {
    Json j;
    j["q"] = r.q;
    j["r"] = r.r;
    j["total"] = r.total;
    j["bound_exponent"] = r.bound_exponent;
    j["total_divisible"] = r.total_divisible;
    j["strata"] = Json::array();
    for (const auto& s : r.strata) {
        Json e{{"k", s.k}, {"count", s.count}};
        if (!s.by_partial.empty()) e["by_partial"] = s.by_partial;
        e["claimed_exponent"] = s.claimed_exponent;
        e["divisible_by_claimed"] = s.divisible_by_claimed;
        e["divisible_by_bound"] = s.divisible_by_bound;
        j["strata"].push_back(e);
    }
    j["verdict"] = r.all_pass() ? "pass" : "fail";
    return j;
}

inline std::string jet_names_text(const IntegerPolynomial& p, std::size_t d, std::size_t n, std::size_t l) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j <= n; ++j) names.push_back("b" + std::to_string(i + 1) + "_" + std::to_string(j));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j + l <= n; ++j) names.push_back("z" + std::to_string(i + 1) + "_" + std::to_string(j));
    return p.str(names);
}

inline int cmd_jets(const std::string& sub, const RunConfig& cfg, std::ostream& out) {
    const AffinePolynomial f = polynomial(cfg);
    const auto opt = count_options(cfg);
    Json j;
    j["command"] = "jets " + sub;
    j["f"] = f.str();
    j["dimension"] = f.dimension;
    j["n"] = cfg.n;
    std::ostringstream text;
    text << "f = " << f.str() << " on A^" << f.dimension << ", n = " << cfg.n << "\n";

    if (sub == "taylor") {
        auto sides = taylor_shift_symbolic(f.f, f.dimension, cfg.n, cfg.l);
        j["l"] = cfg.l;
        Json coeffs = Json::array();
        std::vector<std::pair<std::string, std::string>> rows{{"k", "f(b + t^l z) = Taylor sum"}};
        for (std::size_t k = 0; k <= cfg.n; ++k) {
            std::string lhs = jet_names_text(sides.lhs[k], f.dimension, cfg.n, cfg.l);
            coeffs.push_back({{"k", k}, {"lhs", lhs}, {"rhs", jet_names_text(sides.rhs[k], f.dimension, cfg.n, cfg.l)}});
            rows.emplace_back(std::to_string(k), lhs + (sides.lhs[k] == sides.rhs[k] ? "" : "  (differs)"));
        }
        j["coefficients"] = coeffs;
        j["symbolic_identity"] = sides.equal();
        text << "l = " << cfg.l << "\n" << table(rows) << "symbolic identity: " << yes_no(sides.equal()) << "\n";
        if (!cfg.q.empty()) {
            Json num = Json::array();
            for (auto q : field_sizes(cfg)) {
                bool ok = true;
                for (std::uint64_t seed = 1; seed <= 20; ++seed)
                    ok = ok && taylor_shift_random(f.f, f.dimension, cfg.n, cfg.l, q, seed).equal();
                num.push_back({{"q", q}, {"trials", 20}, {"identity", ok}});
                text << "random jets with entries below " << q << ": " << yes_no(ok) << "\n";
            }
            j["numeric"] = num;
        }
    } else {
        auto qs = field_sizes(cfg);
        Json results = Json::array();
        if (sub == "count" || sub == "contact") {
            std::vector<std::pair<std::string, std::string>> rows{{"q", sub == "count" ? "|L_n(V)(F_q)|" : "|X_n(F_q)|"}};
            std::size_t m = std::max(cfg.m, cfg.n);
            if (sub == "contact" && m != cfg.n) j["m"] = m;
            for (auto q : qs) {
                std::uint64_t v = sub == "count" ? count_jets(f, cfg.n, q, opt)
                                                 : count_contact_extended(f, cfg.n, m, q, opt);
                results.push_back({{"q", q}, {"count", v}});
                rows.emplace_back(std::to_string(q), std::to_string(v));
            }
            if (sub == "contact" && m != cfg.n) text << "m = " << m << "\n";
            text << table(rows);
        } else if (sub == "stratify") {
            for (auto q : qs) {
                auto rep = stratify_jets(f, cfg.n, q, opt);
                results.push_back(stratification_json(rep));
                text << "q = " << q << ", r = " << rep.r << ", total = " << rep.total << ", bound q^" << rep.bound_exponent
                     << " divides total: " << yes_no(rep.total_divisible) << "\n";
                std::vector<std::pair<std::string, std::string>> rows{{"k", "count  claimed-exponent  divisible"}};
                for (const auto& s : rep.strata)
                    rows.emplace_back(std::to_string(s.k), std::to_string(s.count) + "  " +
                                                               std::to_string(s.claimed_exponent) + "  " +
                                                               yes_no(s.divisible_by_claimed && s.divisible_by_bound));
                text << table(rows) << "verdict: " << (rep.all_pass() ? "pass" : "fail") << "\n";
            }
        } else if (sub == "fibcheck") {
            for (auto q : qs) {
                auto verdicts = fibration_check(f, cfg.n, q, opt);
                Json vs = Json::array();
                bool all = true;
                text << "q = " << q << "\n";
                for (const auto& v : verdicts) {
                    all = all && v.pass;
                    vs.push_back({{"identity", v.identity}, {"lhs", v.lhs.str()}, {"rhs", v.rhs.str()}, {"pass", v.pass}});
                    text << "  " << (v.pass ? "ok    " : "FAIL  ") << v.identity << "  (" << v.lhs.str() << " vs "
                         << v.rhs.str() << ")\n";
                }
                results.push_back({{"q", q}, {"verdicts", vs}, {"all_pass", all}});
            }
        } else {
            throw UsageError("unknown jets subcommand '" + sub + "'");
        }
        j["results"] = results;
    }
    if (cfg.format == "text")
        out << text.str();
    else
        out << j.dump(2) << "\n";
    return kOk;
}

// ---- verify ---------------------------------------------------------------------------

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ResolutionData data = load_resolution(cfg.input);
    RunConfig pc = cfg;
    if (pc.f.empty() && data.polynomial) pc.f = *data.polynomial;
    if (pc.dim == 0) pc.dim = static_cast<std::size_t>(data.dimension);
    const AffinePolynomial f = polynomial(pc);
    const auto qs = field_sizes(cfg);
    const std::size_t n_max = cfg.n_max.value_or(3);
    const auto opt = count_options(cfg);
    const long d = data.dimension;

    const RationalZeta z = denef_loeser(data);
    const auto gammas = expand(z, n_max);
    const auto jets = z_to_j(gammas, data.ambient_class(), data.divisor_class(), d);

    Json j;
    j["command"] = "verify";
    j["f"] = f.str();
    j["dimension"] = d;
    Json rows = Json::array();
    std::vector<std::pair<std::string, std::string>> trows{{"n q", "contact(formula/oracle)  jets(formula/oracle)  divisible  ok"}};
    std::optional<std::string> first;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const MotivicClass cc = contact_coefficient(data, static_cast<long>(n));
        const bool internal = cc == gammas[n];
        for (auto q : qs) {
            const SymbolTable table = data.specializations.table(q);
            const Integer fc = specialize_point_count(cc, q, table);
            const Integer fj = specialize_point_count(jets[n], q, table);
            const std::uint64_t oc = count_contact(f, n, q, opt);
            const std::uint64_t oj = count_jets(f, n, q, opt);
            const bool divisible = d < 2 || oj % ipow(q, (static_cast<std::size_t>(d) * n + 1) / 2) == 0;
            const bool ok = internal && fc == oc && fj == oj && divisible;
            rows.push_back({{"n", n},
                            {"q", q},
                            {"contact_formula", fc.str()},
                            {"contact_oracle", oc},
                            {"jets_formula", fj.str()},
                            {"jets_oracle", oj},
                            {"series_matches_tuple_sum", internal},
                            {"divisible", divisible},
                            {"pass", ok}});
            trows.emplace_back(std::to_string(n) + " " + std::to_string(q),
                               fc.str() + "/" + std::to_string(oc) + "  " + fj.str() + "/" + std::to_string(oj) + "  " +
                                   yes_no(divisible) + "  " + (ok ? "pass" : "FAIL"));
            if (!ok && !first) {
                std::ostringstream os;
                os << "mismatch at n = " << n << ", q = " << q << ": ";
                if (!internal)
                    os << "series coefficient " << gammas[n].str() << " != tuple sum " << cc.str();
                else if (fc != oc)
                    os << "contact locus formula gives " << fc << ", brute force counts " << oc;
                else if (fj != oj)
                    os << "jet scheme formula gives " << fj << ", brute force counts " << oj;
                else
                    os << "jet count " << oj << " not divisible by q^" << (static_cast<std::size_t>(d) * n + 1) / 2;
                first = os.str();
            }
        }
    }
    const PoleReport poles = smallest_pole_report(z, d);
    if (!poles.pass && !first) first = "smallest pole bound violated";
    j["grid"] = rows;
    j["poles"] = to_json(poles);
    j["verdict"] = first ? "fail" : "pass";
    if (cfg.format == "text")
        out << table(trows) << "pole bound: " << (poles.pass ? "pass" : "fail") << "\n"
            << "verdict: " << (first ? "fail" : "pass") << "\n";
    else
        out << j.dump(2) << "\n";
    if (first) throw Mismatch(*first);
    (void)err;
    return kOk;
}

// ---- poles ----------------------------------------------------------------------------

inline int cmd_poles(const RunConfig& cfg, std::ostream& out) {
    const nlohmann::json doc = load_document(cfg.input);
    RationalZeta z;
    long d = 2;
    if (doc.is_object() && doc.contains("numerator")) {
        auto s = zeta_from_json(doc);
        z = s.zeta;
        d = s.dimension;
    } else {
        const ResolutionData data = checked_resolution(doc);
        z = denef_loeser(data);
        d = data.dimension;
    }
    const std::size_t n_max = cfg.n_max.value_or(20);
    const PoleReport rep = smallest_pole_report(z, d);
    Json j;
    j["command"] = "poles";
    j["dimension"] = d;
    j["zeta"] = zeta_json(z);
    j["poles"] = to_json(rep);
    std::ostringstream text;
    text << "Z(t) = " << series_text(z, "L") << "\n";
    std::vector<std::pair<std::string, std::string>> rows{{"nu/N", "nu  N  order  surviving"}};
    for (const auto& c : rep.candidates)
        rows.emplace_back(to_string(c.ratio), std::to_string(c.nu) + "  " + std::to_string(c.N) + "  " +
                                                  std::to_string(c.order) + "  " + yes_no(c.surviving));
    text << table(rows);

    if (!rep.largest_surviving_ratio) {
        j["status"] = "no poles";
        text << "no poles\n";
    } else {
        j["status"] = "poles";
        const auto pf = partial_fractions(z, d);
        j["partial_fractions"] = to_json(pf);
        const auto prof = valuation_profile(z, d, n_max);
        j["valuations"] = to_json(prof);
        const auto sharp = sharpness_check(z, d, n_max);
        j["sharpness"] = to_json(sharp);
        text << "largest ratio " << to_string(*rep.largest_surviving_ratio) << ", pole family (N = " << pf.N
             << ", nu = " << pf.nu << ", m = " << pf.m << ")\n";
        text << "slope d + l = " << to_string(*prof.slope) << ", fitted a = "
             << (prof.fitted_a ? prof.fitted_a->str() : "-") << ", lower bound holds: " << yes_no(prof.bound_holds)
             << "\n";
        if (sharp.status == SharpnessVerdict::Status::witness)
            text << "sharpness witness: N = " << sharp.N << ", b = " << sharp.b << ", a = " << sharp.a << "\n";
        else
            text << "sharpness witness: " << to_string(sharp.status) << "\n";
    }
    j["verdict"] = j["poles"]["verdict"];
    text << "bound nu/N <= " << to_string(Rational(d) / 2) << ": " << j["verdict"].get<std::string>() << "\n";
    if (cfg.format == "text")
        out << text.str();
    else
        out << j.dump(2) << "\n";
    return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Motivic zeta functions, jet-scheme point counts and pole analysis", "motivic"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string q_text;
    std::optional<std::uint64_t> budget;

    auto common = [&](CLI::App* s) {
        s->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto counting = [&](CLI::App* s) {
        s->add_option("--q", q_text, "comma-separated prime field sizes");
        s->add_option("--budget", budget, "maximum number of jet evaluations")->check(CLI::PositiveNumber);
        s->add_option("--jobs", cfg.jobs, "worker threads for jet enumeration")->check(CLI::Range(1u, 256u));
    };

    auto* zeta = app.add_subcommand("zeta", "zeta functions from resolution data");
    zeta->require_subcommand(1);
    for (const char* name : {"compute", "expand", "k0", "hodge"}) {
        auto* s = zeta->add_subcommand(name);
        s->add_option("--in", cfg.input, "resolution JSON")->required();
        common(s);
        if (std::string(name) == "compute") {
            s->add_option("--expand", cfg.expand, "also list coefficients up to this order");
            s->add_option("--k0", cfg.k0, "also build the K0 series for this c");
            s->add_flag("--hodge", cfg.hodge, "also build the Hodge zeta function");
        } else {
            s->add_option("--nmax", cfg.n_max, "highest coefficient to list");
        }
        if (std::string(name) == "k0") s->add_option("--c", cfg.c, "integer c >= 1 with (nu-1)/N <= c");
    }

    auto* jets = app.add_subcommand("jets", "brute-force counts over prime fields");
    jets->require_subcommand(1);
    for (const char* name : {"count", "contact", "stratify", "fibcheck", "taylor"}) {
        auto* s = jets->add_subcommand(name);
        s->add_option("--f", cfg.f, "polynomial in x, y, z, w or x1..xd")->required();
        s->add_option("--n", cfg.n, "jet order")->required();
        s->add_option("--dim", cfg.dim, "ambient dimension (default: max(2, variables used))");
        common(s);
        counting(s);
        if (std::string(name) == "contact") s->add_option("--m", cfg.m, "count m-jets with contact order exactly n");
        if (std::string(name) == "taylor") s->add_option("--l", cfg.l, "shift order 1 <= l <= n");
    }

    auto* verify = app.add_subcommand("verify", "formula against brute-force counts");
    verify->add_option("--in", cfg.input, "resolution JSON")->required();
    verify->add_option("--f", cfg.f, "polynomial (default: the document's \"polynomial\")");
    verify->add_option("--nmax", cfg.n_max, "highest order checked (default 3)");
    verify->add_option("--dim", cfg.dim, "ambient dimension (default: the document's)");
    common(verify);
    counting(verify);

    auto* poles = app.add_subcommand("poles", "pole analysis of a computed or supplied zeta function");
    poles->add_option("--in", cfg.input, "resolution or zeta JSON")->required();
    poles->add_option("--nmax", cfg.n_max, "coefficients examined (default 20)");
    common(poles);

    std::vector<std::string> argv_store{"motivic"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (budget) cfg.budget = *budget;
        if (!q_text.empty()) {
            std::stringstream ss(q_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    std::size_t used = 0;
                    cfg.q.push_back(std::stoull(item, &used));
                    if (used != item.size()) throw std::invalid_argument(item);
                } catch (const std::exception&) {
                    throw UsageError("--q expects comma-separated integers, got '" + q_text + "'");
                }
            }
        }
        if (zeta->parsed()) {
            for (auto* s : zeta->get_subcommands()) return detail::cmd_zeta(s->get_name(), cfg, out);
        }
        if (jets->parsed()) {
            for (auto* s : jets->get_subcommands()) return detail::cmd_jets(s->get_name(), cfg, out);
        }
        if (verify->parsed()) return detail::cmd_verify(cfg, out, err);
        if (poles->parsed()) return detail::cmd_poles(cfg, out);
        throw UsageError("no command given");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        err << "input error: " << e.what() << "\n";
        return kInput;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationFailed& e) {
        err << "invalid resolution data:\n";
        for (const auto& d : e.diagnostics()) err << "  " << d << "\n";
        return kValidation;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: required budget " << e.required() << " evaluations, configured budget " << e.budget()
            << "\n";
        return kBudget;
    } catch (const Mismatch& e) {
        err << "verification failed: " << e.what() << "\n";
        return kMismatch;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kValidation;
    }
}

}  // namespace motivic::cli
