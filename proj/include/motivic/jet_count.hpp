#pragma once

// Point counting of jet schemes and contact loci over prime fields by exhaustive
// enumeration, and the gradient-order stratification of L_n(V) with its fibration checks.
//
// Enumeration walks jets level by level: level j assigns a_{1,j}..a_{d,j} (q^d choices) and a
// level predicate may reject the partial jet. Since F_j only involves a_{.,<=j}, rejecting at
// level j skips exactly the completions that would fail F_j, so counts equal those of the plain
// odometer over F_q^{d(n+1)}. Work is split across threads by the level-0 block.

#include "core.hpp"
#include "int_polynomial.hpp"
#include "jet_system.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace motivic {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

// MOTIVIC_BUDGET overrides the built-in default.
inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("MOTIVIC_BUDGET")) {
        try {
            auto v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultBudget;
}

struct CountOptions {
    std::uint64_t budget = default_budget();
    unsigned jobs = 1;
};

inline Integer ipow(std::uint64_t q, std::uint64_t e) { return boost::multiprecision::pow(Integer(q), static_cast<unsigned>(e)); }

// Throws unless q^{d * levels} evaluations fit in the budget.
inline void check_budget(std::uint64_t q, std::size_t d, std::size_t levels, std::uint64_t budget) {
    Integer need = ipow(q, d * levels);
    if (need > budget) throw BudgetExceeded(need, budget);
}

inline void check_field(std::uint64_t q) {
    if (!is_prime(q)) throw DomainError("field size " + std::to_string(q) + " is not prime");
    if (q > 65521) throw DomainError("field size too large for exhaustive enumeration");
}

// Sums counts across workers.
struct Tally {
    std::uint64_t value = 0;
    void merge(const Tally& o) { value += o.value; }
};

// Depth-first walk over jets of levels 0..levels-1 in a layout of the given stride.
// `accept(level, values)` prunes partial jets; `leaf(state, values)` sees each full jet.
// State needs a default constructor and merge().
template <class State, class Accept, class Leaf>
State enumerate_jets(std::size_t d, std::size_t stride, std::uint64_t q, std::size_t levels, Accept&& accept,
                     Leaf&& leaf, unsigned jobs = 1) {
    if (levels == 0 || levels > stride) throw DomainError("invalid enumeration depth");
    std::uint64_t block = 1;
    for (std::size_t i = 0; i < d; ++i) block *= q;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(block, 1024))));

    auto worker = [&](unsigned w, State& state) {
        std::vector<std::uint32_t> values(d * stride, 0);
        auto set_level = [&](std::size_t j, std::uint64_t code) {
            for (std::size_t i = 0; i < d; ++i) {
                values[i * stride + j] = static_cast<std::uint32_t>(code % q);
                code /= q;
            }
        };
        auto clear_level = [&](std::size_t j) {
            for (std::size_t i = 0; i < d; ++i) values[i * stride + j] = 0;
        };
        auto rec = [&](auto&& self, std::size_t j) -> void {
            for (std::uint64_t code = 0; code < block; ++code) {
                set_level(j, code);
                if (!accept(j, values.data())) continue;
                if (j + 1 == levels)
                    leaf(state, values.data());
                else
                    self(self, j + 1);
            }
            clear_level(j);
        };
        for (std::uint64_t code = w; code < block; code += jobs) {
            set_level(0, code);
            if (!accept(std::size_t{0}, values.data())) continue;
            if (levels == 1)
                leaf(state, values.data());
            else
                rec(rec, 1);
        }
    };

    std::vector<State> states(jobs);
    if (jobs == 1) {
        worker(0, states[0]);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w, std::ref(states[w]));
        for (auto& t : threads) t.join();
    }
    for (unsigned w = 1; w < jobs; ++w) states[0].merge(states[w]);
    return std::move(states[0]);
}

// |L_n(V)(F_q)|.
inline std::uint64_t count_jets(const AffinePolynomial& f, std::size_t n, std::uint64_t q, const CountOptions& opt = {}) {
    check_field(q);
    check_budget(q, f.dimension, n + 1, opt.budget);
    auto sys = jet_truncate(f.f, f.dimension, n);
    auto eqs = compile(sys.equations, q);
    return enumerate_jets<Tally>(
               f.dimension, sys.stride, q, n + 1, [&](std::size_t j, const std::uint32_t* v) { return eqs[j](v) == 0; },
               [](Tally& s, const std::uint32_t*) { ++s.value; }, opt.jobs)
        .value;
}

// |X_{n,m}(F_q)|: m-jets along which f vanishes to order exactly n (m >= n).
inline std::uint64_t count_contact_extended(const AffinePolynomial& f, std::size_t n, std::size_t m, std::uint64_t q,
                                            const CountOptions& opt = {}) {
    if (m < n) throw DomainError("contact order exceeds jet order");
    check_field(q);
    check_budget(q, f.dimension, m + 1, opt.budget);
    auto sys = jet_truncate(f.f, f.dimension, m);
    auto eqs = compile(sys.equations, q);
    return enumerate_jets<Tally>(
               f.dimension, sys.stride, q, m + 1,
               [&](std::size_t j, const std::uint32_t* v) {
                   if (j < n) return eqs[j](v) == 0;
                   if (j == n) return eqs[j](v) != 0;
                   return true;
               },
               [](Tally& s, const std::uint32_t*) { ++s.value; }, opt.jobs)
        .value;
}

// |X_n(F_q)|.
inline std::uint64_t count_contact(const AffinePolynomial& f, std::size_t n, std::uint64_t q, const CountOptions& opt = {}) {
    return count_contact_extended(f, n, n, q, opt);
}

// Gradient data shared by stratification and the fibration checks.
class GradientJets {
public:
    // Coefficients 0..max_order of each partial derivative, in a layout of the given stride.
    GradientJets(const AffinePolynomial& f, std::size_t max_order, std::size_t stride, std::uint64_t q) {
        for (std::size_t p = 0; p < f.dimension; ++p) {
            auto sys = jet_truncate(f.f.derivative(p), f.dimension, max_order, stride);
            partials_.push_back(compile(sys.equations, q));
        }
    }

    std::size_t dimension() const { return partials_.size(); }

    // Coefficient s of the p-th partial derivative along the jet.
    std::uint64_t coefficient(std::size_t p, std::size_t s, const std::uint32_t* v) const { return partials_[p][s](v); }

    bool all_vanish_at(std::size_t s, const std::uint32_t* v) const {
        for (const auto& g : partials_)
            if (g[s](v) != 0) return false;
        return true;
    }

    // Least p with a nonzero coefficient s, or dimension() if none.
    std::size_t first_nonvanishing(std::size_t s, const std::uint32_t* v) const {
        for (std::size_t p = 0; p < partials_.size(); ++p)
            if (partials_[p][s](v) != 0) return p;
        return partials_.size();
    }

private:
    std::vector<std::vector<CompiledPolynomial>> partials_;
};

// r = n/2 for even n, (n+1)/2 for odd n.
inline std::size_t stratification_depth(std::size_t n) { return (n + 1) / 2; }

// Affine fiber dimension of the stratum L_{n,k}(V): (d-1)(n-2k) + dk for k < r, dr for k = r.
inline std::size_t stratum_exponent(std::size_t d, std::size_t n, std::size_t k) {
    std::size_t r = stratification_depth(n);
    if (k == r) return d * r;
    return (d - 1) * (n - 2 * k) + d * k;
}

struct StratumCount {
    std::size_t k = 0;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> by_partial;  // k < r: jets whose least nonvanishing partial is p (index p-1)
    std::size_t claimed_exponent = 0;
    bool divisible_by_claimed = false;
    bool divisible_by_bound = false;  // by q^{ceil(dn/2)}
};

struct StratificationReport {
    std::size_t n = 0;
    std::uint64_t q = 0;
    std::size_t d = 0;
    std::size_t r = 0;
    std::size_t bound_exponent = 0;  // ceil(dn/2)
    std::uint64_t total = 0;         // |L_n(V)(F_q)|
    bool total_divisible = false;
    std::vector<StratumCount> strata;

    bool all_pass() const {
        if (d < 2) return true;
        if (!total_divisible) return false;
        for (const auto& s : strata)
            if (!s.divisible_by_claimed || !s.divisible_by_bound) return false;
        return true;
    }
};

namespace detail {

struct StrataState {
    std::vector<std::uint64_t> cells;  // (k, p) with p = d meaning "all partials vanish to order r"
    std::unordered_set<std::uint64_t> image;
    void merge(const StrataState& o) {
        if (cells.size() < o.cells.size()) cells.resize(o.cells.size(), 0);
        for (std::size_t i = 0; i < o.cells.size(); ++i) cells[i] += o.cells[i];
        image.insert(o.image.begin(), o.image.end());
    }
};

inline bool divides(std::uint64_t q, std::size_t e, std::uint64_t value) {
    return value % ipow(q, e) == 0;
}

// Walks L_n(V) once, classifying each jet by (k, least p); optionally records the projection of
// L_{n,r}(V) to its (n-r)-jets.
inline StrataState classify_jets(const AffinePolynomial& f, std::size_t n, std::uint64_t q, bool project,
                                 const CountOptions& opt) {
    const std::size_t d = f.dimension;
    const std::size_t r = stratification_depth(n);
    const std::size_t stride = n + 1;
    auto sys = jet_truncate(f.f, d, n, stride);
    auto eqs = compile(sys.equations, q);
    GradientJets grad(f, r == 0 ? 0 : r - 1, stride, q);
    const std::size_t cols = d + 1;

    auto leaf = [&](StrataState& s, const std::uint32_t* v) {
        if (s.cells.empty()) s.cells.assign((r + 1) * cols, 0);
        std::size_t k = r, p = d;
        for (std::size_t lvl = 0; lvl < r; ++lvl) {
            std::size_t first = grad.first_nonvanishing(lvl, v);
            if (first < d) {
                k = lvl;
                p = first;
                break;
            }
        }
        ++s.cells[k * cols + p];
        if (project && k == r) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j + r <= n; ++j) key = key * q + v[i * stride + j];
            s.image.insert(key);
        }
    };
    auto st = enumerate_jets<StrataState>(
        d, stride, q, n + 1, [&](std::size_t j, const std::uint32_t* v) { return eqs[j](v) == 0; }, leaf, opt.jobs);
    if (st.cells.empty()) st.cells.assign((r + 1) * cols, 0);
    return st;
}

// |O_{l,k,p}| for every p (index p-1): l-jets with all partials = 0 mod t^k, least p with the
// p-th partial nonzero mod t^{k+1}, and f = 0 mod t^{k+l+1} (coefficients beyond l read as zero).
inline std::vector<std::uint64_t> count_o_sets(const AffinePolynomial& f, std::size_t n, std::size_t l, std::size_t k,
                                               std::uint64_t q, const GradientJets& grad,
                                               const std::vector<CompiledPolynomial>& eqs, const CountOptions& opt) {
    const std::size_t d = f.dimension;
    const std::size_t stride = n + 1;
    struct PerP {
        std::vector<std::uint64_t> c;
        void merge(const PerP& o) {
            if (c.size() < o.c.size()) c.resize(o.c.size(), 0);
            for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        }
    };
    auto accept = [&](std::size_t j, const std::uint32_t* v) {
        if (eqs[j](v) != 0) return false;
        return j >= k || grad.all_vanish_at(j, v);
    };
    auto leaf = [&](PerP& s, const std::uint32_t* v) {
        if (s.c.empty()) s.c.assign(d, 0);
        for (std::size_t j = l + 1; j <= k + l; ++j)
            if (eqs[j](v) != 0) return;
        std::size_t p = grad.first_nonvanishing(k, v);
        if (p < d) ++s.c[p];
    };
    auto st = enumerate_jets<PerP>(d, stride, q, l + 1, accept, leaf, opt.jobs);
    if (st.c.empty()) st.c.assign(d, 0);
    return st.c;
}

}  // namespace detail

// Partitions L_n(V)(F_q) by k = min(r, min_p ord_t(df/du_p)) and, for k < r, by the least p with
// df/du_p nonzero mod t^{k+1}; checks each piece against its claimed affine fiber exponent.
inline StratificationReport stratify_jets(const AffinePolynomial& f, std::size_t n, std::uint64_t q,
                                          const CountOptions& opt = {}) {
    check_field(q);
    check_budget(q, f.dimension, n + 1, opt.budget);
    const std::size_t d = f.dimension;
    StratificationReport rep;
    rep.n = n;
    rep.q = q;
    rep.d = d;
    rep.r = stratification_depth(n);
    rep.bound_exponent = (d * n + 1) / 2;
    auto st = detail::classify_jets(f, n, q, false, opt);
    const std::size_t cols = d + 1;
    for (std::size_t k = 0; k <= rep.r; ++k) {
        StratumCount sc;
        sc.k = k;
        for (std::size_t p = 0; p < cols; ++p) sc.count += st.cells[k * cols + p];
        if (k < rep.r)
            for (std::size_t p = 0; p < d; ++p) sc.by_partial.push_back(st.cells[k * cols + p]);
        sc.claimed_exponent = stratum_exponent(d, n, k);
        sc.divisible_by_claimed = detail::divides(q, sc.claimed_exponent, sc.count);
        sc.divisible_by_bound = detail::divides(q, rep.bound_exponent, sc.count);
        rep.total += sc.count;
        rep.strata.push_back(std::move(sc));
    }
    rep.total_divisible = detail::divides(q, rep.bound_exponent, rep.total);
    return rep;
}

struct FibrationVerdict {
    std::string identity;
    Integer lhs;
    Integer rhs;
    bool pass = false;
};

// Counting-level versions of the stratum isomorphisms (strata with least-p tie-breaking):
//   (a) |L_{n,r}| = q^{dr} |pi^n_{n-r}(L_{n,r})|
//   (b) |O_{l+1,k,p}| = q^{d-1} |O_{l,k,p}|, k <= l < n-k
//   (c) |L_{n,k,p}| = q^{dk} |O_{n-k,k,p}|
//   (d) |L_{n,k,p}| = q^{(d-1)(n-2k)+dk} |O_{k,k,p}|
inline std::vector<FibrationVerdict> fibration_check(const AffinePolynomial& f, std::size_t n, std::uint64_t q,
                                                     const CountOptions& opt = {}) {
    const std::size_t d = f.dimension;
    if (d < 2) throw DomainError("fibration checks need dimension >= 2");
    check_field(q);
    check_budget(q, d, n + 1, opt.budget);
    const std::size_t r = stratification_depth(n);
    const std::size_t stride = n + 1;
    const std::size_t cols = d + 1;
    std::vector<FibrationVerdict> out;
    auto add = [&](std::string id, const Integer& lhs, const Integer& rhs) {
        out.push_back({std::move(id), lhs, rhs, lhs == rhs});
    };

    auto st = detail::classify_jets(f, n, q, true, opt);
    std::uint64_t top = 0;
    for (std::size_t p = 0; p < cols; ++p) top += st.cells[r * cols + p];
    add("|L_{" + std::to_string(n) + "," + std::to_string(r) + "}| = q^" + std::to_string(d * r) + " * |pi^" +
            std::to_string(n) + "_" + std::to_string(n - r) + "(L_{" + std::to_string(n) + "," + std::to_string(r) +
            "})|",
        top, ipow(q, d * r) * st.image.size());

    auto sys = jet_truncate(f.f, d, n, stride);
    auto eqs = compile(sys.equations, q);
    GradientJets grad(f, r == 0 ? 0 : r - 1, stride, q);
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<std::vector<std::uint64_t>> o;  // o[l - k][p]
        for (std::size_t l = k; l + k <= n; ++l) o.push_back(detail::count_o_sets(f, n, l, k, q, grad, eqs, opt));
        const std::string ks = std::to_string(k);
        for (std::size_t p = 0; p < d; ++p) {
            const std::string ps = std::to_string(p + 1);
            for (std::size_t l = k; l + k < n; ++l)
                add("|O_{" + std::to_string(l + 1) + "," + ks + "," + ps + "}| = q^" + std::to_string(d - 1) + " * |O_{" +
                        std::to_string(l) + "," + ks + "," + ps + "}|",
                    o[l + 1 - k][p], ipow(q, d - 1) * o[l - k][p]);
            std::uint64_t lkp = st.cells[k * cols + p];
            add("|L_{" + std::to_string(n) + "," + ks + "," + ps + "}| = q^" + std::to_string(d * k) + " * |O_{" +
                    std::to_string(n - k) + "," + ks + "," + ps + "}|",
                lkp, ipow(q, d * k) * o[n - 2 * k][p]);
            add("|L_{" + std::to_string(n) + "," + ks + "," + ps + "}| = q^" + std::to_string(stratum_exponent(d, n, k)) +
                    " * |O_{" + ks + "," + ks + "," + ps + "}|",
                lkp, ipow(q, stratum_exponent(d, n, k)) * o[0][p]);
        }
    }
    return out;
}

}  // namespace motivic
