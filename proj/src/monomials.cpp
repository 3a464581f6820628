#include <jacquet/monomials.hpp>

#include <algorithm>
#include <iterator>

#include <jacquet/errors.hpp>

namespace jacquet
{

GLMonomial::GLMonomial(std::vector<Segment> segments)
{
    std::erase_if(segments, [](const Segment &s) { return s.empty(); });
    std::sort(segments.begin(), segments.end());
    m_segments = std::move(segments);
}

std::int64_t GLMonomial::rank() const
{
    std::int64_t r = 0;
    for (const auto &s : m_segments) {
        r += s.rank();
    }
    return r;
}

GLMonomial operator*(const GLMonomial &x, const GLMonomial &y)
{
    if (x.is_one()) {
        return y;
    }
    if (y.is_one()) {
        return x;
    }
    GLMonomial out;
    out.m_segments.reserve(x.m_segments.size() + y.m_segments.size());
    std::merge(x.m_segments.begin(), x.m_segments.end(), y.m_segments.begin(), y.m_segments.end(),
               std::back_inserter(out.m_segments));
    return out;
}

std::string GLMonomial::to_string() const
{
    if (m_segments.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &s : m_segments) {
        if (!out.empty()) {
            out += " x ";
        }
        out += s.to_string();
    }
    return out;
}

GLMonomial dual(const GLMonomial &m)
{
    std::vector<Segment> segs;
    segs.reserve(m.segments().size());
    for (const auto &s : m.segments()) {
        segs.push_back(dual(s));
    }
    return GLMonomial(std::move(segs));
}

GUClass::GUClass(GULabel sigma, GLMonomial segments, TwistTag twist)
    : m_gl(std::move(segments)), m_sigma(sigma),
      m_twist(twist.erase_if([&](const GLLabel &rho) { return sigma.is_twist_fixed(rho); }))
{
}

std::string GUClass::to_string() const
{
    std::string out = m_gl.to_string() + " |x| " + m_sigma.name();
    if (!m_twist.trivial()) {
        out += " <w:" + m_twist.to_string() + ">";
    }
    return out;
}

std::string TensorTerm::to_string() const
{
    std::string out;
    for (const auto &f : m_gl) {
        if (!out.empty()) {
            out += " (x) ";
        }
        out += f.to_string();
    }
    if (m_gu) {
        if (!out.empty()) {
            out += " (x) ";
        }
        out += m_gu->to_string();
    }
    return out;
}

TensorTerm operator*(const TensorTerm &x, const TensorTerm &y)
{
    if (x.has_gu() || y.has_gu()) {
        throw KindMismatch("tensor product of terms with a GU factor");
    }
    if (x.gl().size() != y.gl().size()) {
        throw KindMismatch("tensor product of terms of arity " + std::to_string(x.gl().size()) + " and "
                           + std::to_string(y.gl().size()));
    }
    std::vector<GLMonomial> f;
    f.reserve(x.gl().size());
    for (std::size_t i = 0; i < x.gl().size(); ++i) {
        f.push_back(x.gl(i) * y.gl(i));
    }
    return TensorTerm(std::move(f));
}

} // namespace jacquet
