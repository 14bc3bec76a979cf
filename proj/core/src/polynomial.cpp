#include "arcseries/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace arcs {

namespace {

void require_same_order(const Polynomial& a, const Polynomial& b) {
    if (!(a.order() == b.order()))
        throw std::invalid_argument("operands carry different monomial orders");
}

struct DescendingBy {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b, order) > 0;
    }
};

}  // namespace

Polynomial::Polynomial(std::vector<Term> terms, MonomialOrder order)
    : terms_(std::move(terms)), order_(order) {
    normalize();
}

void Polynomial::normalize() {
    std::map<Monomial, Rational, DescendingBy> acc(DescendingBy{order_});
    for (Term& t : terms_) {
        if (sgn(t.coef) == 0) continue;
        auto [it, fresh] = acc.try_emplace(std::move(t.mono), std::move(t.coef));
        if (!fresh) it->second += t.coef;  // try_emplace left t.coef intact here
    }
    terms_.clear();
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) terms_.push_back({std::move(c), m});
}

Polynomial Polynomial::constant(Rational c, MonomialOrder order) {
    Polynomial p(order);
    if (sgn(c) != 0) p.terms_.push_back({std::move(c), Monomial{}});
    return p;
}

Polynomial Polynomial::single(Rational c, Monomial m, MonomialOrder order) {
    Polynomial p(order);
    if (sgn(c) != 0) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_order(*this, rhs);
    Polynomial out(order_);
    out.terms_.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() || j != rhs.terms_.end()) {
        int c;
        if (i == terms_.end()) c = -1;
        else if (j == rhs.terms_.end()) c = 1;
        else c = compare(i->mono, j->mono, order_);
        if (c > 0) {
            out.terms_.push_back(*i++);
        } else if (c < 0) {
            out.terms_.push_back(*j++);
        } else {
            Rational s = i->coef + j->coef;
            if (sgn(s) != 0) out.terms_.push_back({std::move(s), i->mono});
            ++i, ++j;
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(order_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({-t.coef, t.mono});
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + (-rhs);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_order(*this, rhs);
    std::map<Monomial, Rational, DescendingBy> acc(DescendingBy{order_});
    for (const Term& a : terms_) {
        for (const Term& b : rhs.terms_) {
            Monomial m = a.mono * b.mono;
            Rational c = a.coef * b.coef;
            auto [it, fresh] = acc.try_emplace(std::move(m), std::move(c));
            if (!fresh) it->second += c;  // try_emplace left c intact here
        }
    }
    Polynomial out(order_);
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) out.terms_.push_back({std::move(c), m});
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (sgn(c) == 0) return Polynomial(order_);
    Polynomial out(order_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.coef * c, t.mono});
    return out;
}

Polynomial Polynomial::times(const Rational& c, const Monomial& m) const {
    if (sgn(c) == 0) return Polynomial(order_);
    Polynomial out(order_);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.coef * c, t.mono * m});
    return out;
}

Polynomial Polynomial::monic() const {
    const Rational& lc = leading_coefficient();
    Rational inv = make_rational(lc.get_den(), lc.get_num());
    return scaled(inv);
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    return Polynomial(terms_, order);
}

std::uint64_t Polynomial::weight() const {
    // terms are descending under a weight-first order, so the front is heaviest
    return terms_.empty() ? 0 : terms_.front().mono.weight();
}

std::uint64_t Polynomial::degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::weight_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t w = terms_.front().mono.weight();
    for (const Term& t : terms_)
        if (t.mono.weight() != w) return false;
    return true;
}

bool Polynomial::has_level0() const {
    for (const Term& t : terms_)
        if (t.mono.has_level0()) return true;
    return false;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (order_ == rhs.order_) return terms_ == rhs.terms_;
    return terms_ == rhs.with_order(order_).terms_;
}

Polynomial derive(const Polynomial& p) {
    std::vector<Term> out;
    out.reserve(p.term_count() * 2);
    for (const Term& t : p.terms()) {
        for (const auto& [v, e] : t.mono.entries()) {
            Monomial m = t.mono.divided_by(Monomial::var(v)) * Monomial::var(raised(v));
            out.push_back({t.coef * e, std::move(m)});
        }
    }
    return Polynomial(std::move(out), p.order());
}

Polynomial substitute_zero(const Polynomial& p, const std::vector<VarId>& vars) {
    std::vector<VarId> dead(vars);
    std::sort(dead.begin(), dead.end());
    std::vector<Term> keep;
    keep.reserve(p.term_count());
    for (const Term& t : p.terms()) {
        bool hit = false;
        for (const auto& [v, e] : t.mono.entries()) {
            (void)e;
            if (std::binary_search(dead.begin(), dead.end(), v)) {
                hit = true;
                break;
            }
        }
        if (!hit) keep.push_back(t);
    }
    return Polynomial(std::move(keep), p.order());
}

Polynomial substitute_level0(const Polynomial& p) {
    std::vector<Term> keep;
    keep.reserve(p.term_count());
    for (const Term& t : p.terms())
        if (!t.mono.has_level0()) keep.push_back(t);
    return Polynomial(std::move(keep), p.order());
}

}  // namespace arcs
