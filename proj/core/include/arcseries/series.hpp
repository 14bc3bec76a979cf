#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arcseries/rational.hpp"

namespace arcs {

// Power series in t truncated at a fixed order: exact integer coefficients
// c_0..c_N.  Arithmetic never mixes truncations; mismatches throw instead of
// silently retruncating.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::uint32_t truncation)
        : trunc_(truncation), c_(truncation + 1u) {}

    static TruncatedSeries one(std::uint32_t truncation);
    static TruncatedSeries power_of_t(std::uint32_t truncation, std::uint32_t k,
                                      Int coefficient = 1);

    std::uint32_t truncation() const { return trunc_; }
    const std::vector<Int>& coefficients() const { return c_; }
    const Int& operator[](std::uint32_t i) const { return c_.at(i); }
    Int& coeff(std::uint32_t i) { return c_.at(i); }

    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    // multiplication by t^k; coefficients pushed past the truncation vanish
    TruncatedSeries shifted(std::uint32_t k) const;

    // in place multiplication by 1/(1 - t^i), i >= 1: c_j += c_{j-i} forward
    void apply_geometric_factor(std::uint32_t i);

    bool is_zero() const;
    // index of the first nonzero coefficient; nullopt for 0 within truncation
    std::optional<std::uint32_t> order_of_vanishing() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::uint32_t trunc_;
    std::vector<Int> c_;
};

// prod 1/(1 - t^i) over all i >= 1 with i mod modulus not excluded.
// excluded residues must lie in [0, modulus).
TruncatedSeries restricted_product(std::uint32_t truncation, std::uint32_t modulus,
                                   const std::set<std::uint32_t>& excluded);

// {"truncation": N, "coefficients": ["c0", ...]} with decimal strings
std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

// header "index,coefficient" then one row per index
std::string series_to_csv(const TruncatedSeries& s);

}  // namespace arcs
