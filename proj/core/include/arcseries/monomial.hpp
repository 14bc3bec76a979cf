#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "arcseries/varid.hpp"

namespace arcs {

// Sparse exponent vector.  Entries are sorted by VarId ascending and carry
// exponents > 0; the empty entry list is the monomial 1.  The total weight
// (sum of level * exponent) is cached because order comparisons branch on it
// first.
class Monomial {
public:
    using Entry = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Entry> entries);
    Monomial(std::initializer_list<Entry> entries);

    static Monomial var(VarId v, std::uint32_t e = 1);

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }
    bool is_single_variable() const {
        return entries_.size() == 1 && entries_[0].second == 1;
    }
    std::uint32_t exponent(VarId v) const;
    std::uint64_t weight() const { return weight_; }
    std::uint64_t degree() const;
    bool has_level0() const;

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& rhs) const;
    // *this / rhs; pre: rhs.divides(*this)
    Monomial divided_by(const Monomial& rhs) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& rhs) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.entries_ == b.entries_;
    }

    // Entry-sequence comparison; a fixed key for canonical containers, not a
    // monomial order.
    static bool entry_less(const Monomial& a, const Monomial& b) {
        return a.entries_ < b.entries_;
    }

private:
    void normalize();
    std::vector<Entry> entries_;
    std::uint64_t weight_ = 0;
};

}  // namespace arcs
