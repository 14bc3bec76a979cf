#include "arcseries/rr_recursion.hpp"

#include <stdexcept>

#include "arcseries/partitions.hpp"

namespace arcs {

MonomialIdeal staircase_ideal(std::uint32_t d, std::uint32_t max_level) {
    if (d < 1) throw std::invalid_argument("staircase ideal starts at level >= 1");
    std::vector<Monomial> gens;
    for (std::uint32_t i = d; i <= max_level; ++i) {
        gens.push_back(Monomial::var(yvar(i), 2));
        if (i + 1 <= max_level)
            gens.push_back(Monomial::var(yvar(i)) * Monomial::var(yvar(i + 1)));
    }
    return MonomialIdeal(std::move(gens));
}

TruncatedSeries h_series(std::uint32_t d, std::uint32_t truncation) {
    if (d < 1) throw std::invalid_argument("h series starts at level >= 1");
    std::vector<VarId> vars;
    for (std::uint32_t i = d; i <= truncation; ++i) vars.push_back(yvar(i));
    return standard_monomial_series(staircase_ideal(d, truncation), vars,
                                    truncation);
}

TruncatedSeries rr_sum_side(std::uint32_t truncation) {
    TruncatedSeries acc = TruncatedSeries::one(truncation);
    TruncatedSeries term = TruncatedSeries::one(truncation);
    for (std::uint32_t j = 1;
         static_cast<std::uint64_t>(j) * j <= truncation; ++j) {
        term = term.shifted(2 * j - 1);  // t^{(j-1)^2} -> t^{j^2}
        term.apply_geometric_factor(j);
        acc = acc + term;
    }
    return acc;
}

const TruncatedSeries& AndrewsBaxter::limit() const {
    if (!converged)
        throw std::logic_error("recursion not run far enough to stabilise");
    return A[d_max];
}

AndrewsBaxter andrews_baxter(std::uint32_t d_max, std::uint32_t truncation) {
    if (d_max < 2) throw std::invalid_argument("recursion needs d_max >= 2");
    AndrewsBaxter r;
    r.d_max = d_max;
    r.truncation = truncation;
    r.converged = d_max >= truncation + 3;
    r.A.assign(d_max + 1u, TruncatedSeries(truncation));
    r.B.assign(d_max + 1u, TruncatedSeries(truncation));
    r.A[1] = TruncatedSeries::one(truncation);
    r.A[2] = TruncatedSeries::one(truncation);
    for (std::uint32_t d = 3; d <= d_max; ++d) {
        r.B[d] = r.A[d - 2].shifted(d - 2);
        r.A[d] = r.A[d - 1] + r.B[d];
    }
    return r;
}

}  // namespace arcs
