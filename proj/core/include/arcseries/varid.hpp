#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace arcs {

// Jet variable x_coord^(level): coordinate index coord >= 1, jet level >= 0.
// Level 0 is the base coordinate; the weight of a variable is its level.
// All linearisations in the library order variables by (level, coord)
// ascending, so y0 < x2_0 < y1 < x2_1 < y2 < ...
struct VarId {
    std::uint32_t coord = 1;
    std::uint32_t level = 0;

    friend constexpr std::strong_ordering operator<=>(VarId a, VarId b) {
        if (auto c = a.level <=> b.level; c != 0) return c;
        return a.coord <=> b.coord;
    }
    friend constexpr bool operator==(VarId, VarId) = default;
};

constexpr std::uint64_t weight(VarId v) { return v.level; }

// Target of the jet derivation: x_s^(i) -> x_s^(i+1).
constexpr VarId raised(VarId v) { return {v.coord, v.level + 1}; }

inline VarId yvar(std::uint32_t level) { return {1, level}; }

inline std::string to_string(VarId v) {
    if (v.coord == 1) return "y" + std::to_string(v.level);
    return "x" + std::to_string(v.coord) + "_" + std::to_string(v.level);
}

}  // namespace arcs
