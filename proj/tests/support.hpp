#pragma once

#include <random>
#include <string>
#include <vector>

#include <jacquet/halfint.hpp>
#include <jacquet/labels.hpp>
#include <jacquet/monomials.hpp>

namespace jt
{

using namespace jacquet;

inline HalfInt h(const char *text)
{
    return HalfInt::parse(text);
}

// A private registry with a small zoo of labels.
struct Zoo {
    LabelRegistry reg;
    GLLabel rho = reg.declare_gl("rho", 1, true);
    GLLabel pi = reg.declare_gl("pi", 2, true);
    GLLabel tau = reg.declare_gl("tau", 1, false);
    GULabel sigma = reg.declare_gu("sigma", 2, {{rho, 2}, {pi, HalfInt::from_twice(1)}}, {rho, pi});
    GULabel bare = reg.declare_gu("bare", 0);

    std::vector<GLLabel> labels() const
    {
        return {rho, pi, tau};
    }
};

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : m_rng(seed) {}

    int uniform(int lo, int hi)
    {
        return std::uniform_int_distribution<int>(lo, hi)(m_rng);
    }

    HalfInt halfint(int lo_twice, int hi_twice)
    {
        return HalfInt::from_twice(uniform(lo_twice, hi_twice));
    }

    // Nonempty segment with start in [-3, 3] and length 1..max_len.
    Segment segment(const std::vector<GLLabel> &labels, int max_len)
    {
        const GLLabel &rho = labels[uniform(0, static_cast<int>(labels.size()) - 1)];
        const HalfInt a = halfint(-6, 6);
        return Segment(rho, a, a + (uniform(1, max_len) - 1));
    }

    std::vector<Segment> segments(const std::vector<GLLabel> &labels, int max_count, int max_len, int min_count = 1)
    {
        std::vector<Segment> out;
        const int k = uniform(min_count, max_count);
        for (int i = 0; i < k; ++i) {
            out.push_back(segment(labels, max_len));
        }
        return out;
    }

    GLMonomial monomial(const std::vector<GLLabel> &labels, int max_count, int max_len)
    {
        return GLMonomial(segments(labels, max_count, max_len, 0));
    }

    std::mt19937_64 &rng()
    {
        return m_rng;
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace jt
