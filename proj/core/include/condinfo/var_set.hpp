#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace condinfo {

inline constexpr std::size_t kMaxVariables = 5;

// A subset of variables as a bitmask; variable i is bit i.
struct VarSet {
    std::uint32_t mask = 0;

    constexpr VarSet() = default;
    constexpr explicit VarSet(std::uint32_t m) : mask(m) {}

    static constexpr VarSet single(std::size_t index) { return VarSet(1u << index); }
    static constexpr VarSet full(std::size_t n) { return VarSet((1u << n) - 1u); }

    constexpr bool empty() const { return mask == 0; }
    constexpr bool contains(std::size_t index) const { return (mask >> index) & 1u; }
    constexpr bool subset_of(VarSet other) const { return (mask & ~other.mask) == 0; }
    constexpr int size() const { return std::popcount(mask); }

    friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.mask | b.mask); }
    friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.mask & b.mask); }
    friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.mask & ~b.mask); }
    friend constexpr bool operator==(VarSet, VarSet) = default;
    friend constexpr auto operator<=>(VarSet, VarSet) = default;
};

// Concatenated names in index order, e.g. "ABD". Empty set prints as "".
std::string format_varset(VarSet s, std::span<const std::string> names);

// Throws std::invalid_argument unless 1 <= n <= kMaxVariables.
inline void check_arity(std::size_t n)
{
    if (n == 0 || n > kMaxVariables)
        throw std::invalid_argument("variable count must be between 1 and " +
                                    std::to_string(kMaxVariables) + ", got " + std::to_string(n));
}

}  // namespace condinfo
