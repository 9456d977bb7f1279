#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace disc
{

inline constexpr int kMaxSupportWidth = 64;

/// A set of circuits, bit i <=> circuit of colex index i. Doubles as the hypercube
/// vector phi(X) = chi_{F(X)}.
struct Support
{
    std::uint64_t bits = 0;

    static Support singleton(int index) { return Support{std::uint64_t{1} << index}; }
    static Support full(int width)
    {
        return Support{width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1};
    }

    int size() const noexcept { return __builtin_popcountll(bits); }
    bool empty() const noexcept { return bits == 0; }
    bool contains(int index) const noexcept { return (bits >> index) & 1U; }
    bool subset_of(Support other) const noexcept { return (bits & ~other.bits) == 0; }
    Support toggled(int index) const noexcept { return Support{bits ^ (std::uint64_t{1} << index)}; }

    friend Support operator|(Support a, Support b) noexcept { return {a.bits | b.bits}; }
    friend Support operator&(Support a, Support b) noexcept { return {a.bits & b.bits}; }
    friend Support operator^(Support a, Support b) noexcept { return {a.bits ^ b.bits}; }
    friend Support operator-(Support a, Support b) noexcept { return {a.bits & ~b.bits}; }
    friend auto operator<=>(const Support&, const Support&) = default;
};

/// N characters, index 0 leftmost.
std::string to_bitstring(Support s, int width);
Support parse_bitstring(std::string_view text);

/// The bitstring read as a binary number (index 0 most significant); used for
/// the canonical element order.
inline std::uint64_t order_key(Support s, int width) noexcept
{
    std::uint64_t key = 0;
    for (int i = 0; i < width; ++i) {
        key = (key << 1) | ((s.bits >> i) & 1U);
    }
    return key;
}

}  // namespace disc
