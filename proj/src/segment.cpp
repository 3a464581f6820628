#include <jacquet/segment.hpp>

#include <jacquet/errors.hpp>

namespace jacquet
{

Segment::Segment(GLLabel rho, HalfInt a, HalfInt b) : m_rho(rho), m_a(a), m_b(b)
{
    const auto diff = b - a;
    if (!diff.is_integer()) {
        throw InvalidSegment("segment [" + a.to_string() + "," + b.to_string() + "]@" + rho.name()
                             + ": bounds must differ by an integer");
    }
    if (diff < HalfInt(-1)) {
        throw InvalidSegment("segment [" + a.to_string() + "," + b.to_string() + "]@" + rho.name()
                             + ": b must be >= a - 1");
    }
}

std::string Segment::to_string() const
{
    if (empty()) {
        return "1";
    }
    return "d(" + m_a.to_string() + "," + m_b.to_string() + "@" + m_rho.name() + ")";
}

Segment dual(const Segment &s)
{
    return Segment(s.rho().dual(), -s.b(), -s.a());
}

HalfInt center(const Segment &s)
{
    if (s.empty()) {
        throw EmptySegment("exponent center of the empty segment");
    }
    // a + b is always an integer since b - a is.
    return HalfInt::from_twice((s.a().twice() + s.b().twice()) / 2);
}

bool is_strongly_positive(const Segment &s)
{
    if (s.empty()) {
        throw EmptySegment("strong positivity of the empty segment");
    }
    return s.a() > HalfInt(0);
}

HalfInt exponent_sum(const Segment &s)
{
    if (s.empty()) {
        return HalfInt(0);
    }
    return HalfInt::from_twice(s.length() * (s.a().twice() + s.b().twice()) / 2);
}

} // namespace jacquet
