#include "arcseries/arc_ideals.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "arcseries/partitions.hpp"
#include "arcseries/poly_text.hpp"
#include "arcseries/rational.hpp"

namespace arcs {

namespace {

void validate_spec(const IdealSpec& spec) {
    if (spec.coords < 1)
        throw std::invalid_argument("spec needs at least one coordinate");
    if (spec.weight_bound < 1)
        throw std::invalid_argument("spec needs a positive weight bound");
    for (const Polynomial& g : spec.base_generators)
        for (const Term& t : g.terms())
            for (const auto& [v, e] : t.mono.entries()) {
                if (v.level != 0)
                    throw std::invalid_argument(
                        "base generators live in the weight-0 coordinates");
                if (v.coord > spec.coords)
                    throw std::invalid_argument(
                        "base generator uses a coordinate beyond the declared count");
            }
}

}  // namespace

std::string ideal_spec_to_json(const IdealSpec& spec) {
    validate_spec(spec);
    nlohmann::ordered_json j;
    j["coords"] = spec.coords;
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (const Polynomial& g : spec.base_generators) gens.push_back(to_string(g));
    j["generators"] = std::move(gens);
    j["focussed"] = spec.focussed;
    j["weightBound"] = spec.weight_bound;
    return j.dump();
}

IdealSpec ideal_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed ideal file: ") +
                                    e.what());
    }
    if (!j.is_object() || !j.contains("coords") || !j.contains("generators") ||
        !j.contains("focussed") || !j.contains("weightBound"))
        throw std::invalid_argument(
            "ideal file needs coords, generators, focussed, weightBound");
    if (!j["coords"].is_number_unsigned() || !j["generators"].is_array() ||
        !j["focussed"].is_boolean() || !j["weightBound"].is_number_unsigned())
        throw std::invalid_argument("ideal file field has the wrong type");
    IdealSpec spec;
    spec.coords = j["coords"].get<std::uint32_t>();
    spec.focussed = j["focussed"].get<bool>();
    spec.weight_bound = j["weightBound"].get<std::uint32_t>();
    for (const auto& g : j["generators"]) {
        if (!g.is_string())
            throw std::invalid_argument("ideal generator must be a string");
        spec.base_generators.push_back(parse_polynomial(g.get<std::string>()));
    }
    validate_spec(spec);
    return spec;
}

std::string spec_hash(const IdealSpec& spec, const MonomialOrder& order) {
    std::string blob = ideal_spec_to_json(spec) + "\n" + order_tag(order);
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (unsigned char c : blob) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

Polynomial bell(std::uint32_t i, std::uint32_t j) {
    if (i < 1 || j < 1)
        throw std::invalid_argument("bell polynomial needs i, j >= 1");
    MonomialOrder order;
    if (j > i) return Polynomial::zero(order);
    // partitions of i into exactly j parts, built largest part first
    std::vector<Term> terms;
    std::vector<std::uint32_t> parts;
    auto emit = [&]() {
        std::vector<std::uint32_t> mult(i + 1u, 0);
        for (std::uint32_t p : parts) ++mult[p];
        Int denom = 1;
        std::vector<Monomial::Entry> entries;
        for (std::uint32_t l = 1; l <= i; ++l) {
            if (mult[l] == 0) continue;
            Int f = factorial_int(l);
            for (std::uint32_t c = 0; c < mult[l]; ++c) denom *= f;
            denom *= factorial_int(mult[l]);
            entries.push_back({yvar(l), mult[l]});
        }
        terms.push_back(Term{Rational(divexact_int(factorial_int(i), denom)),
                             Monomial(std::move(entries))});
    };
    auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t left,
                   std::uint32_t max_part) -> void {
        if (left == 0) {
            if (remaining == 0) emit();
            return;
        }
        // each of the `left` parts is >= 1 and <= max_part
        for (std::uint32_t p = std::min(max_part, remaining); p >= 1; --p) {
            if (static_cast<std::uint64_t>(p) * left < remaining) break;
            if (remaining < p + (left - 1)) continue;
            parts.push_back(p);
            self(self, remaining - p, left - 1, p);
            parts.pop_back();
        }
    };
    rec(rec, i, j, i);
    return Polynomial(std::move(terms), order);
}

Polynomial f_generator(std::uint32_t n, std::uint32_t i) {
    if (n < 2) throw std::invalid_argument("the point needs multiplicity n >= 2");
    MonomialOrder order;
    if (i < n) return Polynomial::zero(order);
    return bell(i, n).scaled(Rational(factorial_int(n)));
}

Polynomial F_generator(std::uint32_t n, std::uint32_t i) {
    if (n < 2) throw std::invalid_argument("the point needs multiplicity n >= 2");
    MonomialOrder order;
    Polynomial closed = Polynomial::zero(order);
    if (i == 0) {
        closed = Polynomial::single(Rational(1), Monomial::var(yvar(0), n), order);
    } else {
        Int nfac = factorial_int(n);
        for (std::uint32_t j = 0; j < n; ++j) {
            if (n - j > i) continue;  // B_{i,n-j} vanishes
            Rational c{divexact_int(nfac, factorial_int(j))};
            Polynomial part = bell(i, n - j).scaled(c);
            if (j > 0) part = part.times(Rational(1), Monomial::var(yvar(0), j));
            closed = closed + part;
        }
    }
    // against iterated derivation of y0^n
    Polynomial d = Polynomial::single(Rational(1), Monomial::var(yvar(0), n), order);
    for (std::uint32_t s = 0; s < i; ++s) d = derive(d);
    if (!(closed == d))
        throw std::logic_error("derivative closed form disagrees with derivation");
    return closed;
}

Term leading_term_closed_form(std::uint32_t n, std::uint32_t i) {
    if (n < 2) throw std::invalid_argument("the point needs multiplicity n >= 2");
    std::uint32_t q = i / n, r = i % n;
    Int coef = binomial_int(n, r) * factorial_int(i);
    Int denom = 1;
    Int qf = factorial_int(q), q1f = factorial_int(q + 1);
    for (std::uint32_t s = 0; s < n - r; ++s) denom *= qf;
    for (std::uint32_t s = 0; s < r; ++s) denom *= q1f;
    Monomial mono = Monomial::var(yvar(q), n - r);
    if (r > 0) mono = mono * Monomial::var(yvar(q + 1), r);
    return Term{Rational(divexact_int(coef, denom)), mono};
}

std::vector<Polynomial> jet_generators(const IdealSpec& spec,
                                       const MonomialOrder& order) {
    validate_spec(spec);
    std::vector<Polynomial> out;
    for (const Polynomial& base : spec.base_generators) {
        Polynomial g = base.with_order(order);
        for (std::uint32_t j = 0; j <= spec.weight_bound; ++j) {
            if (j > 0) g = derive(g);
            Polynomial used = spec.focussed ? substitute_level0(g) : g;
            if (!used.is_zero()) out.push_back(used);
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  if (a.weight() != b.weight()) return a.weight() < b.weight();
                  return compare(a.leading_monomial(), b.leading_monomial(),
                                 order) < 0;
              });
    return out;
}

TruncatedSeries hp_from_basis(const IdealSpec& spec,
                              const TruncatedBasis& basis,
                              std::uint32_t truncation) {
    if (!spec.focussed)
        throw std::invalid_argument("series route requires a focussed spec");
    if (truncation > basis.weight_bound)
        throw std::invalid_argument(
            "truncation exceeds the basis weight bound");
    MonomialIdeal staircase = leading_ideal(basis);
    std::vector<VarId> vars;
    for (std::uint32_t level = 1; level <= truncation; ++level)
        for (std::uint32_t c = 1; c <= spec.coords; ++c)
            vars.push_back(VarId{c, level});
    return standard_monomial_series(staircase, vars, truncation);
}

TruncatedSeries hp_focussed(const IdealSpec& spec, std::uint32_t truncation,
                            const MonomialOrder& order) {
    if (!spec.focussed)
        throw std::invalid_argument("series route requires a focussed spec");
    if (truncation > spec.weight_bound)
        throw std::invalid_argument("truncation exceeds the spec weight bound");
    TruncatedBasis basis =
        buchberger_truncated(jet_generators(spec, order), spec.weight_bound,
                             order);
    return hp_from_basis(spec, basis, truncation);
}

TruncatedSeries closed_form_hp(const ClosedFormKind& kind,
                               std::uint32_t truncation) {
    const std::uint32_t N = truncation;
    TruncatedSeries s = TruncatedSeries::one(N);
    if (const auto* sm = std::get_if<Smooth>(&kind)) {
        if (sm->dim < 1) throw std::invalid_argument("dimension must be >= 1");
        for (std::uint32_t i = 1; i <= N; ++i)
            for (std::uint32_t d = 0; d < sm->dim; ++d)
                s.apply_geometric_factor(i);
        return s;
    }
    if (const auto* nf = std::get_if<NFold>(&kind)) {
        if (nf->n < 2) throw std::invalid_argument("multiplicity must be >= 2");
        return restricted_product(N, 2 * nf->n + 1, {0, nf->n, nf->n + 1});
    }
    if (std::get_if<RationalDoublePoint>(&kind)) {
        for (std::uint32_t d = 0; d < 3; ++d) s.apply_geometric_factor(1);
        for (std::uint32_t i = 2; i <= N; ++i)
            for (std::uint32_t d = 0; d < 2; ++d) s.apply_geometric_factor(i);
        return s;
    }
    if (const auto* nc = std::get_if<NormalCrossings>(&kind)) {
        if (nc->dim < 1) throw std::invalid_argument("dimension must be >= 1");
        if (nc->factors < 1 || nc->factors > nc->dim + 1)
            throw std::invalid_argument(
                "factor count must lie between 1 and dim + 1");
        for (std::uint32_t i = 1; i <= N; ++i) {
            std::uint32_t reps = i < nc->factors ? nc->dim + 1 : nc->dim;
            for (std::uint32_t d = 0; d < reps; ++d) s.apply_geometric_factor(i);
        }
        return s;
    }
    const auto& cm = std::get<CanonicalMaxMult>(kind);
    if (cm.n < 2) throw std::invalid_argument("multiplicity must be >= 2");
    for (std::uint32_t i = 1; i <= N; ++i) {
        std::uint32_t reps = i + 2 <= cm.n ? cm.n : cm.n - 1;
        for (std::uint32_t d = 0; d < reps; ++d) s.apply_geometric_factor(i);
    }
    return s;
}

std::optional<MultiplicityProbe> multiplicity_probe(const TruncatedSeries& s,
                                                    std::uint32_t dim) {
    if (s.truncation() < 1 || s[0] != 1)
        throw std::invalid_argument("series must start at 1");
    TruncatedSeries smooth = closed_form_hp(Smooth{dim}, s.truncation());
    for (std::uint32_t r = 1; r <= s.truncation(); ++r)
        if (s[r] != smooth[r])
            return MultiplicityProbe{r, smooth[r] - s[r]};
    return std::nullopt;
}

IdealSpec nfold_spec(std::uint32_t n, std::uint32_t weight_bound) {
    if (n < 2) throw std::invalid_argument("multiplicity must be >= 2");
    IdealSpec spec;
    spec.coords = 1;
    spec.base_generators.push_back(
        Polynomial::single(Rational(1), Monomial::var(yvar(0), n), {}));
    spec.focussed = true;
    spec.weight_bound = weight_bound;
    return spec;
}

MonomialIdeal nfold_leading_ideal(std::uint32_t n, std::uint32_t max_weight) {
    if (n < 2) throw std::invalid_argument("multiplicity must be >= 2");
    std::vector<Monomial> gens;
    for (std::uint32_t q = 1;
         static_cast<std::uint64_t>(q) * n <= max_weight; ++q) {
        for (std::uint32_t r = 0; r < n; ++r) {
            std::uint64_t w = static_cast<std::uint64_t>(q) * n + r;
            if (w > max_weight) break;
            Monomial m = Monomial::var(yvar(q), n - r);
            if (r > 0) m = m * Monomial::var(yvar(q + 1), r);
            gens.push_back(std::move(m));
        }
    }
    return MonomialIdeal(std::move(gens));
}

}  // namespace arcs
