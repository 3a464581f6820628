#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace jacquet
{

// Exact element of (1/2)Z, stored as twice its value.
class HalfInt
{
public:
    constexpr HalfInt() = default;
    // Implicit from integers so that exponents read naturally: HalfInt x = 2;
    constexpr HalfInt(std::int64_t n) : m_twice(2 * n) {}

    static constexpr HalfInt from_twice(std::int64_t twice)
    {
        HalfInt h;
        h.m_twice = twice;
        return h;
    }

    constexpr std::int64_t twice() const
    {
        return m_twice;
    }
    constexpr bool is_integer() const
    {
        return m_twice % 2 == 0;
    }

    constexpr HalfInt operator-() const
    {
        return from_twice(-m_twice);
    }
    constexpr HalfInt &operator+=(HalfInt o)
    {
        m_twice += o.m_twice;
        return *this;
    }
    constexpr HalfInt &operator-=(HalfInt o)
    {
        m_twice -= o.m_twice;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt x, HalfInt y)
    {
        return x += y;
    }
    friend constexpr HalfInt operator-(HalfInt x, HalfInt y)
    {
        return x -= y;
    }
    // Integer scaling stays inside (1/2)Z.
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt x)
    {
        return from_twice(k * x.m_twice);
    }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    // "p/2" when non-integral, plain integer otherwise.
    std::string to_string() const;
    // Accepts "3", "-3", "5/2", "-5/2". Throws std::invalid_argument.
    static HalfInt parse(std::string_view text);

private:
    std::int64_t m_twice = 0;
};

// Least integer >= x.
constexpr std::int64_t ceil(HalfInt x)
{
    const auto t = x.twice();
    return t >= 0 ? (t + 1) / 2 : -((-t) / 2);
}

// Greatest integer <= x.
constexpr std::int64_t floor(HalfInt x)
{
    const auto t = x.twice();
    return t >= 0 ? t / 2 : -((-t + 1) / 2);
}

inline std::ostream &operator<<(std::ostream &os, HalfInt x)
{
    return os << x.to_string();
}

} // namespace jacquet

template <>
struct std::hash<jacquet::HalfInt> {
    std::size_t operator()(jacquet::HalfInt x) const noexcept
    {
        return std::hash<std::int64_t>{}(x.twice());
    }
};
