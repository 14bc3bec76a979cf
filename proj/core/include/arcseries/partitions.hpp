#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "arcseries/monomial_ideal.hpp"
#include "arcseries/series.hpp"

namespace arcs {

// Partitions are stored with weakly decreasing parts; the literature often
// writes the same objects with non-decreasing parts, reverse to convert.
struct Partition {
    std::vector<std::uint32_t> parts;  // weakly decreasing, all > 0

    std::uint64_t sum() const;
    std::uint32_t multiplicity(std::uint32_t value) const;
    friend bool operator==(const Partition&, const Partition&) = default;
};

// parts i with i mod modulus excluded are forbidden
struct Residues {
    std::uint32_t modulus;
    std::set<std::uint32_t> excluded;
};

// lambda_j - lambda_{j+k-1} >= 2 for every window of k consecutive parts
struct GordonGap {
    std::uint32_t k;
};

// mult(v) + mult(v+1) <= k-1 for every value v >= 1
struct MultiplicityWindow {
    std::uint32_t k;
};

// the coordinate-1 monomial prod y_v^{mult(v)} avoids the ideal
struct AvoidMonomialIdeal {
    MonomialIdeal ideal;
};

using PartitionConstraint =
    std::variant<Residues, GordonGap, MultiplicityWindow, AvoidMonomialIdeal>;

bool satisfies(const Partition& p, const PartitionConstraint& c);

// bounded-knapsack count of partitions of m into allowed parts
Int count_residues(std::uint32_t m, const Residues& r);
std::vector<Int> count_residues_upto(std::uint32_t max_m, const Residues& r);

// count of partitions of m with mult(v) + mult(v+1) <= k-1, k >= 2
Int count_gordon(std::uint32_t m, std::uint32_t k);
std::vector<Int> count_gordon_upto(std::uint32_t max_m, std::uint32_t k);

// constrained enumeration, weakly decreasing convention, output sorted
// lexicographically descending; guarded to m <= 60
std::vector<Partition> enumerate_partitions(std::uint32_t m,
                                            const PartitionConstraint& c);

// branch-pruned count by explicit enumeration; same guard as above
Int count_by_enumeration(std::uint32_t m, const PartitionConstraint& c);

struct GordonReport {
    std::uint32_t k = 0;
    std::uint32_t max_n = 0;
    bool ok = false;
    std::optional<std::uint32_t> first_failure;
};

// compares the two partition counts of the Rogers-Ramanujan-Gordon identity
// for all m <= max_n
GordonReport gordon_check(std::uint32_t k, std::uint32_t max_n);
std::string gordon_report_json(const GordonReport& r);

// Hilbert series of R/I truncated at `truncation`, where R is the polynomial
// ring on `variables` graded by variable weights (= levels, all >= 1) and I
// is a monomial ideal with generators supported on those variables.
// Computed by the pivot recursion
//   HP(R/I) = HP(R/(I, v)) + t^{w(v)} HP(R/(I : v))
// with memoisation; the pivot is the variable occurring in the most
// generators, ties broken by VarId order.
TruncatedSeries standard_monomial_series(const MonomialIdeal& ideal,
                                         const std::vector<VarId>& variables,
                                         std::uint32_t truncation);

}  // namespace arcs
