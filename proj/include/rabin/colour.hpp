#pragma once
// colour.hpp - colour indices and small colour sets.
//
// Colour 0 is the root colour c0, colours 1..k-1 are the ordinary colours
// c1 < ... < ch, and kBottom is the dummy leaf colour, greater than all.

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace rabin {

using Colour = std::uint8_t;

inline constexpr Colour kRootColour = 0;
inline constexpr Colour kBottom = std::numeric_limits<Colour>::max();

// Colour sets are bit masks, which caps the colour count.
inline constexpr unsigned kMaxColours = 63;

class ColourSet {
public:
    constexpr ColourSet() = default;
    constexpr explicit ColourSet(std::uint64_t bits) : bits_(bits) {}
    constexpr ColourSet(std::initializer_list<Colour> cs)
    {
        for (Colour c : cs) insert(c);
    }

    // {lo, lo+1, ..., hi-1}
    static constexpr ColourSet range(Colour lo, Colour hi)
    {
        ColourSet s;
        for (unsigned c = lo; c < hi; ++c) s.insert(static_cast<Colour>(c));
        return s;
    }

    constexpr bool contains(Colour c) const
    {
        return c < 64 && ((bits_ >> c) & 1u);
    }
    constexpr void insert(Colour c) { bits_ |= std::uint64_t{1} << c; }
    constexpr void erase(Colour c) { bits_ &= ~(std::uint64_t{1} << c); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr unsigned size() const { return std::popcount(bits_); }
    constexpr std::uint64_t bits() const { return bits_; }

    // Least member strictly greater than `after` (-1 for "any"), or -1.
    constexpr int next_above(int after) const
    {
        std::uint64_t rest = after >= 63 ? 0 : bits_ & (~std::uint64_t{0} << (after + 1));
        return rest == 0 ? -1 : std::countr_zero(rest);
    }
    constexpr int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
    constexpr int max() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    constexpr bool intersects(ColourSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(ColourSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr ColourSet operator|(ColourSet a, ColourSet b) { return ColourSet(a.bits_ | b.bits_); }
    friend constexpr ColourSet operator&(ColourSet a, ColourSet b) { return ColourSet(a.bits_ & b.bits_); }
    // set difference
    friend constexpr ColourSet operator-(ColourSet a, ColourSet b) { return ColourSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(ColourSet, ColourSet) = default;

    std::vector<Colour> members() const
    {
        std::vector<Colour> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<Colour>(std::countr_zero(b)));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

inline std::string colour_name(Colour c)
{
    return c == kBottom ? std::string("BOT") : std::to_string(unsigned{c});
}

} // namespace rabin
