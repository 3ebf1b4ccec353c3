#pragma once
// bit_label.hpp - variable-length bit-string labels ordered by 0 < ε < 1.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rabin {

class BitLabel {
public:
    BitLabel() = default;

    /// From a string of '0'/'1' characters; "" is ε.
    explicit BitLabel(std::string_view bits)
    {
        for (char c : bits) {
            if (c != '0' && c != '1') throw std::invalid_argument("bit label must contain only 0 and 1");
            bits_.push_back(c == '1');
        }
    }

    static BitLabel zeros(std::size_t n)
    {
        BitLabel l;
        l.bits_.assign(n, false);
        return l;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    void push_back(bool b) { bits_.push_back(b); }
    void pop_back() { bits_.pop_back(); }
    bool back() const { return bits_.back(); }

    std::string str() const
    {
        std::string s;
        for (bool b : bits_) s += b ? '1' : '0';
        return s;
    }

    friend bool operator==(const BitLabel&, const BitLabel&) = default;

    // A string that ends before the other compares as ε against the other's
    // next bit: below a 1, above a 0.
    friend std::strong_ordering operator<=>(const BitLabel& a, const BitLabel& b)
    {
        const std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a.size() == b.size()) return std::strong_ordering::equal;
        if (a.size() < b.size()) return b[n] ? std::strong_ordering::less : std::strong_ordering::greater;
        return a[n] ? std::strong_ordering::greater : std::strong_ordering::less;
    }

private:
    std::vector<bool> bits_;
};

/// Immediate successor of `w` among bit strings of length at most `a`,
/// or nullopt when `w` is 1^a (the greatest such string).
inline std::optional<BitLabel> nextbit(std::size_t a, const BitLabel& w)
{
    if (w.size() > a) throw std::invalid_argument("nextbit: label longer than the bit budget");
    BitLabel out = w;
    if (w.size() < a) {
        out.push_back(true);
        while (out.size() < a) out.push_back(false);
        return out;
    }
    while (!out.empty() && out.back()) out.pop_back();
    if (out.empty()) return std::nullopt;
    out.pop_back();
    return out;
}

/// Successor among strings of length exactly `w.size()` (binary increment).
inline std::optional<BitLabel> next_fixed_width(const BitLabel& w)
{
    std::string s = w.str();
    std::size_t i = s.size();
    while (i > 0 && s[i - 1] == '1') s[--i] = '0';
    if (i == 0) return std::nullopt;
    s[i - 1] = '1';
    return BitLabel(s);
}

} // namespace rabin
