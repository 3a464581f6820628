#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <jacquet/labels.hpp>
#include <jacquet/segment.hpp>

namespace jacquet
{

// Class of delta(D1) x ... x delta(Dj) in R_GL. Segments are nonempty and
// kept in canonical order; the empty product is the unit of R_GL(0).
class GLMonomial
{
public:
    GLMonomial() = default;
    // Drops empty segments and sorts.
    explicit GLMonomial(std::vector<Segment> segments);
    GLMonomial(std::initializer_list<Segment> segments) : GLMonomial(std::vector<Segment>(segments)) {}

    const std::vector<Segment> &segments() const
    {
        return m_segments;
    }
    bool is_one() const
    {
        return m_segments.empty();
    }
    std::int64_t rank() const;

    friend GLMonomial operator*(const GLMonomial &x, const GLMonomial &y);

    std::string to_string() const;

    friend bool operator==(const GLMonomial &, const GLMonomial &) = default;
    friend std::strong_ordering operator<=>(const GLMonomial &x, const GLMonomial &y)
    {
        return x.m_segments <=> y.m_segments;
    }

private:
    std::vector<Segment> m_segments;
};

// Conjugate dual of a product: dual of every factor.
GLMonomial dual(const GLMonomial &m);

// Formal class delta(D1) x ... x delta(Dk) |x| (twist . sigma_cusp).
// Canonicalization drops twist entries of labels sigma declares twist-fixed.
class GUClass
{
public:
    explicit GUClass(GULabel sigma, GLMonomial segments = {}, TwistTag twist = {});

    const GLMonomial &gl() const
    {
        return m_gl;
    }
    const GULabel &sigma() const
    {
        return m_sigma;
    }
    const TwistTag &twist() const
    {
        return m_twist;
    }
    bool is_cuspidal() const
    {
        return m_gl.is_one();
    }
    std::int64_t rank() const
    {
        return m_gl.rank() + m_sigma.rank();
    }

    std::string to_string() const;

    friend bool operator==(const GUClass &, const GUClass &) = default;
    friend std::strong_ordering operator<=>(const GUClass &x, const GUClass &y)
    {
        if (auto c = x.m_gl <=> y.m_gl; c != 0) {
            return c;
        }
        if (auto c = x.m_sigma <=> y.m_sigma; c != 0) {
            return c;
        }
        return x.m_twist <=> y.m_twist;
    }

private:
    GLMonomial m_gl;
    GULabel m_sigma;
    TwistTag m_twist;
};

// Pure tensor x1 (x) ... (x) xr, optionally followed by a GU factor.
class TensorTerm
{
public:
    TensorTerm() = default;
    explicit TensorTerm(std::vector<GLMonomial> gl, std::optional<GUClass> gu = std::nullopt)
        : m_gl(std::move(gl)), m_gu(std::move(gu))
    {
    }

    const std::vector<GLMonomial> &gl() const
    {
        return m_gl;
    }
    const GLMonomial &gl(std::size_t i) const
    {
        return m_gl[i];
    }
    const std::optional<GUClass> &gu() const
    {
        return m_gu;
    }
    bool has_gu() const
    {
        return m_gu.has_value();
    }
    std::size_t arity() const
    {
        return m_gl.size() + (m_gu ? 1u : 0u);
    }

    std::string to_string() const;

    friend bool operator==(const TensorTerm &, const TensorTerm &) = default;
    friend std::strong_ordering operator<=>(const TensorTerm &x, const TensorTerm &y)
    {
        if (auto c = x.m_gl <=> y.m_gl; c != 0) {
            return c;
        }
        if (x.m_gu.has_value() != y.m_gu.has_value()) {
            return x.m_gu.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (!x.m_gu) {
            return std::strong_ordering::equal;
        }
        return *x.m_gu <=> *y.m_gu;
    }

private:
    std::vector<GLMonomial> m_gl;
    std::optional<GUClass> m_gu;
};

// Componentwise product of all-GL tensors of equal arity. Throws KindMismatch.
TensorTerm operator*(const TensorTerm &x, const TensorTerm &y);

} // namespace jacquet
