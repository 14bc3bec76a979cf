#pragma once

#include <cstdint>
#include <vector>

#include "arcseries/monomial_ideal.hpp"
#include "arcseries/series.hpp"

namespace arcs {

// The staircase ideal (y_i^2, y_i y_{i+1} : i >= d), restricted to the
// variables y_d .. y_{max_level}.
MonomialIdeal staircase_ideal(std::uint32_t d, std::uint32_t max_level);

// Hilbert series of the quotient by the staircase ideal starting at level d,
// through t^truncation.  Counts partitions into parts >= d in which no value
// appears twice and no two consecutive values both appear.
TruncatedSeries h_series(std::uint32_t d, std::uint32_t truncation);

// sum_{j>=0} t^{j^2} / ((1-t)(1-t^2)...(1-t^j)) through t^truncation.
TruncatedSeries rr_sum_side(std::uint32_t truncation);

// The coupled recurrences A_1 = A_2 = 1, B_2 = 0, and for d >= 3
//   B_d = t^{d-2} A_{d-2},   A_d = A_{d-1} + B_d,
// which satisfy h(1) = A_d h(d) + B_{d+1} h(d+1) for every d they reach.
// B_d vanishes to order d-2, so A stabilises once d-2 exceeds the
// truncation: d_max >= truncation + 3 pins every retained coefficient.
struct AndrewsBaxter {
    std::uint32_t d_max = 0;
    std::uint32_t truncation = 0;
    bool converged = false;
    std::vector<TruncatedSeries> A;  // indexed 1..d_max; [0] unused
    std::vector<TruncatedSeries> B;  // indexed 2..d_max; [0], [1] unused

    // the stabilised A series; only meaningful when converged
    const TruncatedSeries& limit() const;
};

AndrewsBaxter andrews_baxter(std::uint32_t d_max, std::uint32_t truncation);

}  // namespace arcs
