#include "arcseries/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "arcseries/poly_text.hpp"

namespace arcs {

namespace {

void require_homogeneous(const Polynomial& p, const char* what) {
    if (!p.weight_homogeneous())
        throw std::invalid_argument(std::string(what) +
                                    " must be weight homogeneous");
}

}  // namespace

DivisionResult divide(const Polynomial& f,
                      const std::vector<Polynomial>& divisors) {
    require_homogeneous(f, "dividend");
    for (const Polynomial& d : divisors) {
        if (d.is_zero()) throw std::invalid_argument("zero divisor");
        if (!(d.order() == f.order()))
            throw std::invalid_argument("operands carry different monomial orders");
        require_homogeneous(d, "divisor");
        if (d.has_level0())
            throw std::invalid_argument("divisors must avoid weight-0 variables");
    }

    DivisionResult out;
    out.quotients.assign(divisors.size(), Polynomial::zero(f.order()));
    out.remainder = Polynomial::zero(f.order());
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Monomial& dm = divisors[i].leading_monomial();
            if (!dm.divides(lt.mono)) continue;
            Rational c = lt.coef / divisors[i].leading_coefficient();
            Monomial m = lt.mono.divided_by(dm);
            out.quotients[i] =
                out.quotients[i] + Polynomial::single(c, m, f.order());
            p = p - divisors[i].times(c, m);
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial t = Polynomial::single(lt.coef, lt.mono, f.order());
            out.remainder = out.remainder + t;
            p = p - t;
        }
    }
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s-polynomial of a zero polynomial");
    if (!(f.order() == g.order()))
        throw std::invalid_argument("operands carry different monomial orders");
    Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Rational cf = make_rational(1, 1) / f.leading_coefficient();
    Rational cg = make_rational(1, 1) / g.leading_coefficient();
    return f.times(cf, lcm.divided_by(f.leading_monomial())) -
           g.times(cg, lcm.divided_by(g.leading_monomial()));
}

namespace {

struct Pair {
    std::uint64_t weight;
    Monomial lcm;
    std::uint32_t i, j;  // i < j
};

struct PairLess {
    MonomialOrder order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.weight != b.weight) return a.weight < b.weight;
        int c = compare(a.lcm, b.lcm, order);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

TruncatedBasis buchberger_truncated(const std::vector<Polynomial>& generators,
                                    std::uint32_t weight_bound,
                                    const MonomialOrder& order) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : generators) {
        if (g.is_zero()) continue;
        require_homogeneous(g, "generator");
        if (g.has_level0())
            throw std::invalid_argument(
                "generators must avoid weight-0 variables");
        basis.push_back(g.with_order(order).monic());
    }

    auto sorted_view = [&]() {
        std::vector<Polynomial> view(basis);
        std::sort(view.begin(), view.end(),
                  [&](const Polynomial& a, const Polynomial& b) {
                      if (a.weight() != b.weight()) return a.weight() < b.weight();
                      return compare(a.leading_monomial(), b.leading_monomial(),
                                     order) < 0;
                  });
        return view;
    };

    std::set<Pair, PairLess> queue{PairLess{order}};
    std::set<std::pair<std::uint32_t, std::uint32_t>> pending;
    auto add_pair = [&](std::uint32_t i, std::uint32_t j) {
        const Monomial& a = basis[i].leading_monomial();
        const Monomial& b = basis[j].leading_monomial();
        if (a.coprime_with(b)) return;  // S(f, g) reduces to zero
        Monomial l = Monomial::lcm(a, b);
        if (l.weight() > weight_bound) return;  // beyond the certified range
        queue.insert(Pair{l.weight(), std::move(l), i, j});
        pending.insert({i, j});
    };
    for (std::uint32_t j = 1; j < basis.size(); ++j)
        for (std::uint32_t i = 0; i < j; ++i) add_pair(i, j);

    auto is_pending = [&](std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        return pending.count({a, b}) != 0;
    };

    while (!queue.empty()) {
        Pair pair = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pair.i, pair.j});

        // chain criterion: a third element dividing the lcm whose two pairs
        // are both already settled makes this pair redundant
        bool redundant = false;
        for (std::uint32_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == pair.i || k == pair.j) continue;
            if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
            if (!is_pending(pair.i, k) && !is_pending(pair.j, k))
                redundant = true;
        }
        if (redundant) continue;

        Polynomial s = s_polynomial(basis[pair.i], basis[pair.j]);
        if (s.is_zero()) continue;
        Polynomial r = divide(s, sorted_view()).remainder;
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        std::uint32_t t = static_cast<std::uint32_t>(basis.size()) - 1;
        for (std::uint32_t i = 0; i < t; ++i) add_pair(i, t);
    }

    // minimalise: drop elements whose leading monomial another one divides.
    // A dividing leading monomial has strictly smaller weight (quotients of
    // weight 0 are impossible over weight >= 1 variables), so scanning in
    // ascending (weight, lm) order against survivors only is enough.
    std::vector<Polynomial> minimal = sorted_view();
    std::vector<Polynomial> kept;
    for (const Polynomial& g : minimal) {
        bool covered = false;
        for (const Polynomial& h : kept)
            if (h.leading_monomial().divides(g.leading_monomial())) {
                covered = true;
                break;
            }
        if (!covered) kept.push_back(g);
    }

    // tail-reduce in the same ascending order: every possible reducer of a
    // tail monomial sorts strictly earlier, so one pass fully reduces
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = divide(kept[i], others).remainder;
    }

    TruncatedBasis out;
    out.elements = std::move(kept);
    out.weight_bound = weight_bound;
    out.order = order;
    return out;
}

MonomialIdeal leading_ideal(const TruncatedBasis& basis) {
    std::vector<Monomial> lms;
    lms.reserve(basis.elements.size());
    for (const Polynomial& g : basis.elements)
        lms.push_back(g.leading_monomial());
    return MonomialIdeal(std::move(lms));
}

std::string basis_to_json(const TruncatedBasis& basis,
                          const std::string& spec_hash) {
    nlohmann::ordered_json j;
    j["specHash"] = spec_hash;
    j["weightBound"] = basis.weight_bound;
    j["order"] = order_tag(basis.order);
    nlohmann::ordered_json elems = nlohmann::ordered_json::array();
    for (const Polynomial& g : basis.elements) elems.push_back(to_string(g));
    j["elements"] = std::move(elems);
    return j.dump();
}

StoredBasis basis_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed basis file: ") +
                                    e.what());
    }
    if (!j.is_object() || !j.contains("specHash") || !j.contains("weightBound") ||
        !j.contains("order") || !j.contains("elements"))
        throw std::invalid_argument(
            "basis file needs specHash, weightBound, order, elements");
    if (!j["specHash"].is_string() || !j["order"].is_string() ||
        !j["weightBound"].is_number_unsigned() || !j["elements"].is_array())
        throw std::invalid_argument("basis file field has the wrong type");
    StoredBasis out;
    out.spec_hash = j["specHash"].get<std::string>();
    out.basis.weight_bound = j["weightBound"].get<std::uint32_t>();
    out.basis.order = order_from_tag(j["order"].get<std::string>());
    for (const auto& e : j["elements"]) {
        if (!e.is_string())
            throw std::invalid_argument("basis element must be a string");
        out.basis.elements.push_back(
            parse_polynomial(e.get<std::string>(), out.basis.order));
    }
    return out;
}

}  // namespace arcs
