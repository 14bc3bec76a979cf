#include "arcseries/monomial_ideal.hpp"

#include <algorithm>

namespace arcs {

bool MonomialIdeal::canonical_less(const Monomial& a, const Monomial& b) {
    return compare(a, b, MonomialOrder{}) < 0;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators)
    : gens_(std::move(generators)) {
    minimalize();
}

void MonomialIdeal::minimalize() {
    std::sort(gens_.begin(), gens_.end(), canonical_less);
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    // a proper divisor can still sort after its multiple when the quotient
    // has weight 0 (level-0 variables), so check every distinct pair
    std::vector<Monomial> kept;
    kept.reserve(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens_.size() && !redundant; ++j)
            if (j != i && gens_[j].divides(gens_[i])) redundant = true;
        if (!redundant) kept.push_back(gens_[i]);
    }
    gens_ = std::move(kept);
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
    if (contains(m)) return *this;
    MonomialIdeal out;
    out.gens_.reserve(gens_.size() + 1);
    for (const Monomial& g : gens_)
        if (!m.divides(g)) out.gens_.push_back(g);
    auto it = std::lower_bound(out.gens_.begin(), out.gens_.end(), m, canonical_less);
    out.gens_.insert(it, m);
    return out;
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
    std::vector<Monomial> quots;
    quots.reserve(gens_.size());
    for (const Monomial& g : gens_)
        quots.push_back(g.divided_by(Monomial::gcd(g, m)));
    return MonomialIdeal(std::move(quots));
}

}  // namespace arcs
