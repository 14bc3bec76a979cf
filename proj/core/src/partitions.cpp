#include "arcseries/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace arcs {

std::uint64_t Partition::sum() const {
    std::uint64_t s = 0;
    for (std::uint32_t p : parts) s += p;
    return s;
}

std::uint32_t Partition::multiplicity(std::uint32_t value) const {
    std::uint32_t n = 0;
    for (std::uint32_t p : parts) n += (p == value);
    return n;
}

namespace {

Monomial partition_monomial(const std::vector<std::uint32_t>& mult,
                            std::uint32_t lo) {
    std::vector<Monomial::Entry> entries;
    for (std::uint32_t v = lo; v < mult.size(); ++v)
        if (mult[v] > 0) entries.push_back({yvar(v), mult[v]});
    return Monomial(std::move(entries));
}

void validate_residues(const Residues& r) {
    if (r.modulus == 0) throw std::invalid_argument("modulus must be positive");
    for (std::uint32_t e : r.excluded)
        if (e >= r.modulus)
            throw std::invalid_argument("excluded residue outside [0, modulus)");
}

}  // namespace

bool satisfies(const Partition& p, const PartitionConstraint& c) {
    for (std::size_t i = 1; i < p.parts.size(); ++i)
        if (p.parts[i] > p.parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    for (std::uint32_t v : p.parts)
        if (v == 0) throw std::invalid_argument("partition parts must be positive");

    if (const auto* r = std::get_if<Residues>(&c)) {
        validate_residues(*r);
        for (std::uint32_t v : p.parts)
            if (r->excluded.count(v % r->modulus)) return false;
        return true;
    }
    if (const auto* g = std::get_if<GordonGap>(&c)) {
        if (g->k < 2) throw std::invalid_argument("gap condition needs k >= 2");
        for (std::size_t j = 0; j + g->k - 1 < p.parts.size(); ++j)
            if (p.parts[j] - p.parts[j + g->k - 1] < 2) return false;
        return true;
    }
    if (const auto* w = std::get_if<MultiplicityWindow>(&c)) {
        if (w->k < 2) throw std::invalid_argument("multiplicity window needs k >= 2");
        if (p.parts.empty()) return true;
        std::uint32_t top = p.parts.front();
        std::vector<std::uint32_t> mult(top + 2, 0);
        for (std::uint32_t v : p.parts) ++mult[v];
        for (std::uint32_t v = 1; v <= top; ++v)
            if (mult[v] + mult[v + 1] > w->k - 1) return false;
        return true;
    }
    const auto& avoid = std::get<AvoidMonomialIdeal>(c);
    std::uint32_t top = p.parts.empty() ? 0 : p.parts.front();
    std::vector<std::uint32_t> mult(top + 1, 0);
    for (std::uint32_t v : p.parts) ++mult[v];
    return !avoid.ideal.contains(partition_monomial(mult, 1));
}

Int count_residues(std::uint32_t m, const Residues& r) {
    return count_residues_upto(m, r)[m];
}

std::vector<Int> count_residues_upto(std::uint32_t max_m, const Residues& r) {
    validate_residues(r);
    std::vector<Int> dp(max_m + 1u);
    dp[0] = 1;
    for (std::uint32_t part = 1; part <= max_m; ++part) {
        if (r.excluded.count(part % r.modulus)) continue;
        for (std::uint32_t s = part; s <= max_m; ++s) dp[s] += dp[s - part];
    }
    return dp;
}

Int count_gordon(std::uint32_t m, std::uint32_t k) {
    return count_gordon_upto(m, k)[m];
}

std::vector<Int> count_gordon_upto(std::uint32_t max_m, std::uint32_t k) {
    if (k < 2) throw std::invalid_argument("multiplicity window needs k >= 2");
    const std::uint32_t M = max_m;
    // L(v, s, cp): partitions of s into parts >= v with every multiplicity
    // window satisfied, given that value v-1 is used cp times.  Processed
    // v = M..1 with layer arrays indexed [cp][s]; a prefix sum over the
    // multiplicity of v makes each layer O(M k).
    std::vector<std::vector<Int>> next(k, std::vector<Int>(M + 1u)),
        cur(k, std::vector<Int>(M + 1u));
    for (std::uint32_t cp = 0; cp < k; ++cp) next[cp][0] = 1;
    for (std::uint32_t v = M; v >= 1; --v) {
        for (std::uint32_t s = 0; s <= M; ++s) {
            Int acc = 0;
            for (std::uint32_t c = 0; c < k; ++c) {
                if (static_cast<std::uint64_t>(c) * v <= s)
                    acc += next[c][s - c * v];
                cur[k - 1 - c][s] = acc;
            }
        }
        std::swap(cur, next);
    }
    std::vector<Int> out(M + 1u);
    for (std::uint32_t s = 0; s <= M; ++s) out[s] = next[0][s];
    return out;
}

namespace {

constexpr std::uint32_t kEnumerationGuard = 60;

// Depth-first generation of weakly decreasing partitions with an incremental
// admissibility check: Check::push returns false when no extension of the
// current prefix can satisfy the constraint, in which case the branch is cut.
template <typename Check, typename Emit>
void extend(std::vector<std::uint32_t>& parts, std::uint32_t remaining,
            std::uint32_t max_part, Check& check, Emit&& emit) {
    if (remaining == 0) {
        emit(parts);
        return;
    }
    for (std::uint32_t p = std::min(max_part, remaining); p >= 1; --p) {
        if (!check.push(parts, p)) continue;
        parts.push_back(p);
        extend(parts, remaining - p, p, check, emit);
        parts.pop_back();
        check.pop(p);
    }
}

struct ResidueCheck {
    const Residues& r;
    bool push(const std::vector<std::uint32_t>&, std::uint32_t p) const {
        return !r.excluded.count(p % r.modulus);
    }
    void pop(std::uint32_t) const {}
};

struct GapCheck {
    std::uint32_t k;
    bool push(const std::vector<std::uint32_t>& parts, std::uint32_t p) const {
        // appending at position parts.size(): the window ending there is the
        // only one this append can violate, and once violated it stays so
        if (parts.size() + 1 >= k)
            return parts[parts.size() + 1 - k] - p >= 2;
        return true;
    }
    void pop(std::uint32_t) const {}
};

struct WindowCheck {
    std::uint32_t k;
    std::vector<std::uint32_t> mult;
    explicit WindowCheck(std::uint32_t k, std::uint32_t m)
        : k(k), mult(m + 2u, 0) {}
    bool push(const std::vector<std::uint32_t>&, std::uint32_t p) {
        if (mult[p] + 1 + mult[p + 1] > k - 1) return false;
        ++mult[p];
        return true;
    }
    void pop(std::uint32_t p) { --mult[p]; }
};

struct AvoidCheck {
    const MonomialIdeal& ideal;
    std::vector<std::uint32_t> mult;
    AvoidCheck(const MonomialIdeal& ideal, std::uint32_t m)
        : ideal(ideal), mult(m + 1u, 0) {}
    bool push(const std::vector<std::uint32_t>&, std::uint32_t p) {
        ++mult[p];
        // containment is monotone under appending, so prune as soon as hit
        if (ideal.contains(partition_monomial(mult, 1))) {
            --mult[p];
            return false;
        }
        return true;
    }
    void pop(std::uint32_t p) { --mult[p]; }
};

template <typename Emit>
void enumerate_with(std::uint32_t m, const PartitionConstraint& c, Emit&& emit) {
    std::vector<std::uint32_t> parts;
    if (const auto* r = std::get_if<Residues>(&c)) {
        validate_residues(*r);
        ResidueCheck check{*r};
        extend(parts, m, m, check, emit);
    } else if (const auto* g = std::get_if<GordonGap>(&c)) {
        if (g->k < 2) throw std::invalid_argument("gap condition needs k >= 2");
        GapCheck check{g->k};
        extend(parts, m, m, check, emit);
    } else if (const auto* w = std::get_if<MultiplicityWindow>(&c)) {
        if (w->k < 2) throw std::invalid_argument("multiplicity window needs k >= 2");
        WindowCheck check(w->k, m);
        extend(parts, m, m, check, emit);
    } else {
        AvoidCheck check(std::get<AvoidMonomialIdeal>(c).ideal, m);
        extend(parts, m, m, check, emit);
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(std::uint32_t m,
                                            const PartitionConstraint& c) {
    if (m > kEnumerationGuard)
        throw std::invalid_argument("partition enumeration is guarded to m <= 60");
    std::vector<Partition> out;
    enumerate_with(m, c, [&](const std::vector<std::uint32_t>& parts) {
        out.push_back(Partition{parts});
    });
    return out;
}

Int count_by_enumeration(std::uint32_t m, const PartitionConstraint& c) {
    if (m > kEnumerationGuard)
        throw std::invalid_argument("partition enumeration is guarded to m <= 60");
    Int n = 0;
    enumerate_with(m, c, [&](const std::vector<std::uint32_t>&) { ++n; });
    return n;
}

GordonReport gordon_check(std::uint32_t k, std::uint32_t max_n) {
    if (k < 2) throw std::invalid_argument("the identity needs k >= 2");
    GordonReport report;
    report.k = k;
    report.max_n = max_n;
    std::vector<Int> lhs = count_residues_upto(
        max_n, Residues{2 * k + 1, {0, k, k + 1}});
    std::vector<Int> rhs = count_gordon_upto(max_n, k);
    report.ok = true;
    for (std::uint32_t m = 0; m <= max_n; ++m) {
        if (lhs[m] != rhs[m]) {
            report.ok = false;
            report.first_failure = m;
            break;
        }
    }
    return report;
}

std::string gordon_report_json(const GordonReport& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["maxN"] = r.max_n;
    j["ok"] = r.ok;
    if (r.first_failure) j["firstFailure"] = *r.first_failure;
    else j["firstFailure"] = nullptr;
    return j.dump();
}

// ---------------------------------------------------------------------------
// standard monomial series

namespace {

// The recursion state engine.  States are normalised before recursing:
// single-variable generators kill their variable, variables free of every
// generator contribute geometric factors, and the generator/variable
// incidence graph is split into connected components whose series multiply.
// Only connected components are memoised; their variable set is exactly the
// union of their generators' supports, so the generators alone form the key.
class SeriesEngine {
public:
    explicit SeriesEngine(std::uint32_t truncation) : N_(truncation) {}

    TruncatedSeries eval(std::vector<Monomial> gens, std::vector<VarId> vars) {
        for (const Monomial& g : gens)
            if (g.is_one()) return TruncatedSeries(N_);  // unit ideal, zero ring

        // generators that are a bare variable remove that variable; by
        // minimality no other generator touches it
        std::vector<VarId> dead;
        std::erase_if(gens, [&](const Monomial& g) {
            if (g.is_single_variable()) {
                dead.push_back(g.entries()[0].first);
                return true;
            }
            return false;
        });
        if (!dead.empty()) {
            std::sort(dead.begin(), dead.end());
            std::erase_if(vars, [&](VarId v) {
                return std::binary_search(dead.begin(), dead.end(), v);
            });
        }

        std::vector<VarId> support;
        for (const Monomial& g : gens)
            for (const auto& [v, e] : g.entries()) support.push_back(v);
        std::sort(support.begin(), support.end());
        support.erase(std::unique(support.begin(), support.end()), support.end());

        TruncatedSeries out = components_product(gens, support);
        // variables outside every generator are unconstrained
        for (VarId v : vars)
            if (!std::binary_search(support.begin(), support.end(), v))
                out.apply_geometric_factor(v.level);
        return out;
    }

private:
    TruncatedSeries components_product(const std::vector<Monomial>& gens,
                                       const std::vector<VarId>& support) {
        if (gens.empty()) return TruncatedSeries::one(N_);
        // union-find over the support, merged along each generator
        std::vector<std::size_t> parent(support.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
        auto find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        auto var_index = [&](VarId v) {
            return static_cast<std::size_t>(
                std::lower_bound(support.begin(), support.end(), v) -
                support.begin());
        };
        for (const Monomial& g : gens) {
            const auto& es = g.entries();
            std::size_t first = find(var_index(es[0].first));
            for (std::size_t i = 1; i < es.size(); ++i)
                parent[find(var_index(es[i].first))] = first =
                    find(first);
        }
        std::unordered_map<std::size_t, std::vector<Monomial>> buckets;
        std::vector<std::size_t> roots;  // in order of first appearance
        for (const Monomial& g : gens) {
            std::size_t root = find(var_index(g.entries()[0].first));
            auto [it, fresh] = buckets.try_emplace(root);
            if (fresh) roots.push_back(root);
            it->second.push_back(g);
        }
        TruncatedSeries out = TruncatedSeries::one(N_);
        for (std::size_t root : roots) out = out * component_series(buckets[root]);
        return out;
    }

    // gens: minimal, connected, each with >= 2 total degree, sorted canonically
    TruncatedSeries component_series(const std::vector<Monomial>& gens) {
        std::string key = key_of(gens);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // pivot: present in the most generators, smallest VarId on ties
        std::unordered_map<std::uint64_t, std::uint32_t> occur;
        for (const Monomial& g : gens)
            for (const auto& [v, e] : g.entries()) ++occur[pack(v)];
        VarId pivot{};
        std::uint32_t best = 0;
        for (const Monomial& g : gens) {
            for (const auto& [v, e] : g.entries()) {
                std::uint32_t n = occur[pack(v)];
                if (n > best || (n == best && v < pivot)) {
                    best = n;
                    pivot = v;
                }
            }
        }

        std::vector<VarId> comp_vars;
        for (const Monomial& g : gens)
            for (const auto& [v, e] : g.entries()) comp_vars.push_back(v);
        std::sort(comp_vars.begin(), comp_vars.end());
        comp_vars.erase(std::unique(comp_vars.begin(), comp_vars.end()),
                        comp_vars.end());

        // (I, pivot): generators avoiding the pivot, over the ring without it
        std::vector<Monomial> sum_gens;
        for (const Monomial& g : gens)
            if (g.exponent(pivot) == 0) sum_gens.push_back(g);
        std::vector<VarId> sum_vars;
        for (VarId v : comp_vars)
            if (!(v == pivot)) sum_vars.push_back(v);
        TruncatedSeries a = eval(std::move(sum_gens), std::move(sum_vars));

        // (I : pivot): one pivot power removed from each generator
        std::vector<Monomial> colon_gens;
        colon_gens.reserve(gens.size());
        for (const Monomial& g : gens) {
            if (g.exponent(pivot) > 0)
                colon_gens.push_back(g.divided_by(Monomial::var(pivot)));
            else
                colon_gens.push_back(g);
        }
        minimalize(colon_gens);
        TruncatedSeries b = eval(std::move(colon_gens), comp_vars);

        TruncatedSeries result = a + b.shifted(pivot.level);
        memo_.emplace(std::move(key), result);
        return result;
    }

    static std::uint64_t pack(VarId v) {
        return (static_cast<std::uint64_t>(v.level) << 32) | v.coord;
    }

    // level >= 1 support: a proper divisor is strictly earlier in the
    // canonical (weight, revlex) order, so survivors-only scans suffice
    static void minimalize(std::vector<Monomial>& gens) {
        std::sort(gens.begin(), gens.end(), MonomialIdeal::canonical_less);
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> kept;
        kept.reserve(gens.size());
        for (const Monomial& g : gens) {
            bool redundant = false;
            for (const Monomial& k : kept)
                if (k.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(g);
        }
        gens = std::move(kept);
    }

    static std::string key_of(const std::vector<Monomial>& gens) {
        std::string key;
        key.reserve(gens.size() * 16);
        auto put = [&key](std::uint32_t x) {
            key.append(reinterpret_cast<const char*>(&x), sizeof(x));
        };
        for (const Monomial& g : gens) {
            for (const auto& [v, e] : g.entries()) {
                put(v.coord);
                put(v.level);
                put(e);
            }
            put(0xffffffffu);
        }
        return key;
    }

    std::uint32_t N_;
    std::unordered_map<std::string, TruncatedSeries> memo_;
};

}  // namespace

TruncatedSeries standard_monomial_series(const MonomialIdeal& ideal,
                                         const std::vector<VarId>& variables,
                                         std::uint32_t truncation) {
    std::vector<VarId> vars(variables);
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
        throw std::invalid_argument("duplicate variable");
    for (VarId v : vars)
        if (v.level == 0)
            throw std::invalid_argument(
                "series over weight-0 variables diverges; levels must be >= 1");
    std::vector<Monomial> gens;
    for (const Monomial& g : ideal.generators()) {
        // a generator heavier than the truncation divides no counted monomial
        if (g.weight() > truncation) continue;
        for (const auto& [v, e] : g.entries())
            if (!std::binary_search(vars.begin(), vars.end(), v))
                throw std::invalid_argument(
                    "ideal generator uses a variable outside the ring");
        gens.push_back(g);
    }
    SeriesEngine engine(truncation);
    return engine.eval(std::move(gens), std::move(vars));
}

}  // namespace arcs
