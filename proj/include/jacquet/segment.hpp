#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <jacquet/halfint.hpp>
#include <jacquet/labels.hpp>

namespace jacquet
{

// Zelevinsky segment [nu^a rho, nu^b rho]. b = a - 1 is the empty segment,
// which stands for the unit class 1.
class Segment
{
public:
    // Throws InvalidSegment unless b - a is an integer >= -1.
    Segment(GLLabel rho, HalfInt a, HalfInt b);

    static Segment empty_at(GLLabel rho, HalfInt a)
    {
        return Segment(rho, a, a - 1);
    }

    const GLLabel &rho() const
    {
        return m_rho;
    }
    HalfInt a() const
    {
        return m_a;
    }
    HalfInt b() const
    {
        return m_b;
    }

    bool empty() const
    {
        return m_b < m_a;
    }
    // Number of cuspidal constituents.
    std::int64_t length() const
    {
        return (m_b - m_a).twice() / 2 + 1;
    }
    // Rank of the GL group over E carrying delta(segment).
    std::int64_t rank() const
    {
        return length() * m_rho.dim();
    }

    // "d(a,b@rho)", or "1" when empty.
    std::string to_string() const;

    friend bool operator==(const Segment &, const Segment &) = default;
    // Canonical order: label name, then a, then b.
    friend std::strong_ordering operator<=>(const Segment &x, const Segment &y)
    {
        if (auto c = x.m_rho <=> y.m_rho; c != 0) {
            return c;
        }
        if (auto c = x.m_a <=> y.m_a; c != 0) {
            return c;
        }
        return x.m_b <=> y.m_b;
    }

private:
    GLLabel m_rho;
    HalfInt m_a;
    HalfInt m_b;
};

// [nu^-b rho~, nu^-a rho~].
Segment dual(const Segment &s);

// Exponent center (a + b) / 2. Throws EmptySegment.
HalfInt center(const Segment &s);

// a > 0. Throws EmptySegment.
bool is_strongly_positive(const Segment &s);

// Sum of the nu-exponents of the constituents, zero when empty.
HalfInt exponent_sum(const Segment &s);

} // namespace jacquet
