#include <jacquet/structure.hpp>

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include <jacquet/grothendieck.hpp>

namespace jacquet
{

namespace
{

GLMonomial delta(const GLLabel &rho, HalfInt x, HalfInt y)
{
    if (y < x) {
        return {};
    }
    return GLMonomial{Segment(rho, x, y)};
}

struct MstarCache {
    std::shared_mutex mutex;
    std::map<Segment, TensorSum> table;
};

MstarCache &mstar_cache(const Segment &s)
{
    return s.rho().registry().attachment<MstarCache>();
}

void check_arity(const TensorTerm &m, const TensorTerm &t)
{
    if (m.gl().size() != 3 || m.has_gu()) {
        throw KindMismatch("twisted_rtimes: left operand must be a three-factor GL tensor, got " + m.to_string());
    }
    if (t.gl().size() != 1 || !t.has_gu()) {
        throw KindMismatch("twisted_rtimes: right operand must be GL (x) GU, got " + t.to_string());
    }
}

// Terms of m*(m) whose first factor has the given rank.
TensorSum mstar_gl_graded(const GLMonomial &m, std::int64_t first_rank)
{
    TensorSum out;
    const auto &segs = m.segments();
    std::vector<HalfInt> cut(segs.size());

    auto rec = [&](auto &&self, std::size_t idx, std::int64_t rank) -> void {
        if (idx == segs.size()) {
            if (rank != first_rank) {
                return;
            }
            std::vector<Segment> upper;
            std::vector<Segment> lower;
            for (std::size_t s = 0; s < segs.size(); ++s) {
                upper.emplace_back(segs[s].rho(), cut[s] + 1, segs[s].b());
                lower.emplace_back(segs[s].rho(), segs[s].a(), cut[s]);
            }
            out.add(TensorTerm({GLMonomial(std::move(upper)), GLMonomial(std::move(lower))}));
            return;
        }
        const auto &s = segs[idx];
        const auto dim = s.rho().dim();
        // Upper piece [i+1, b] has rank (b - i) * dim.
        for (HalfInt i = s.a() - 1; i <= s.b(); i += 1) {
            const auto r = rank + (s.b() - i).twice() / 2 * dim;
            if (r > first_rank) {
                continue;
            }
            cut[idx] = i;
            self(self, idx + 1, r);
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace

std::int64_t ParabolicShape::total() const
{
    return std::accumulate(blocks.begin(), blocks.end(), std::int64_t(0));
}

TensorSum mstar_gl(const Segment &s)
{
    TensorSum out;
    if (s.empty()) {
        return tensor_unit(2);
    }
    for (HalfInt i = s.a() - 1; i <= s.b(); i += 1) {
        out.add(TensorTerm({delta(s.rho(), i + 1, s.b()), delta(s.rho(), s.a(), i)}));
    }
    return out;
}

TensorSum mstar_gl(const GLMonomial &m, Exec exec)
{
    auto acc = tensor_unit(2);
    for (const auto &s : m.segments()) {
        acc = tensor_multiply(acc, mstar_gl(s), exec);
    }
    return acc;
}

TensorSum mstar_gl(const GLSum &x, Exec exec)
{
    TensorSum out;
    for (const auto &[t, m] : x) {
        out += m * mstar_gl(t, exec);
    }
    return out;
}

std::vector<TensorTerm> mstar_big_expansion(const Segment &s)
{
    std::vector<TensorTerm> out;
    if (s.empty()) {
        out.emplace_back(std::vector<GLMonomial>(3));
        return out;
    }
    const auto &rho = s.rho();
    for (HalfInt i = s.a() - 1; i <= s.b(); i += 1) {
        for (HalfInt j = i; j <= s.b(); j += 1) {
            out.emplace_back(std::vector<GLMonomial>{delta(rho, s.a(), i), delta(rho, j + 1, s.b()),
                                                     delta(rho, i + 1, j)});
        }
    }
    return out;
}

TensorSum mstar_big(const Segment &s)
{
    auto &cache = mstar_cache(s);
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.table.find(s); it != cache.table.end()) {
            return it->second;
        }
    }
    TensorSum out;
    for (auto &t : mstar_big_expansion(s)) {
        out.add(std::move(t));
    }
    std::unique_lock lock(cache.mutex);
    cache.table.try_emplace(s, out);
    return out;
}

TensorSum mstar_big(const GLMonomial &m, Exec exec)
{
    auto acc = tensor_unit(3);
    for (const auto &s : m.segments()) {
        acc = tensor_multiply(acc, mstar_big(s), exec);
    }
    return acc;
}

TensorSum mstar_big(const GLSum &x, Exec exec)
{
    TensorSum out;
    for (const auto &[t, m] : x) {
        out += m * mstar_big(t, exec);
    }
    return out;
}

std::size_t mstar_cache_size(LabelRegistry &registry)
{
    auto &cache = registry.attachment<MstarCache>();
    std::shared_lock lock(cache.mutex);
    return cache.table.size();
}

TwistTag central_character(const GLMonomial &m)
{
    TwistTag out;
    for (const auto &s : m.segments()) {
        out = merge(out, TwistTag::single(s.rho(), s.length(), exponent_sum(s)));
    }
    return out;
}

TensorTerm twisted_rtimes(const TensorTerm &m, const TensorTerm &t, GroupMode mode)
{
    check_arity(m, t);
    const auto &p1 = m.gl(0);
    const auto &sigma = *t.gu();
    auto gl = dual(p1) * m.gl(1) * t.gl(0);
    auto twist = mode == GroupMode::GU ? merge(sigma.twist(), central_character(p1)) : sigma.twist();
    return TensorTerm({std::move(gl)}, GUClass(sigma.sigma(), m.gl(2) * sigma.gl(), std::move(twist)));
}

TensorSum twisted_rtimes(const TensorSum &m, const TensorSum &t, GroupMode mode, Exec exec)
{
    const auto ms = detail::flatten(m);
    auto out = detail::expand<TensorTerm>(
        ms.size(),
        [&](std::size_t i, TensorSum &acc) {
            const auto &[mt, mm] = ms[i];
            for (const auto &[tt, tm] : t) {
                acc.add(twisted_rtimes(*mt, tt, mode), *mm * tm);
            }
        },
        exec);
    enforce_term_limit(out, "twisted_rtimes");
    return out;
}

namespace
{

TensorSum anchor(const GUClass &g)
{
    return TensorSum(TensorTerm({GLMonomial()}, GUClass(g.sigma(), {}, g.twist())));
}

} // namespace

TensorSum mu_star(const GUClass &g, GroupMode mode, Exec exec)
{
    auto acc = anchor(g);
    const auto &segs = g.gl().segments();
    // delta(D1) x ... x delta(Dk) |x| s = delta(D1) |x| (... |x| (delta(Dk) |x| s)).
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
        acc = twisted_rtimes(mstar_big(*it), acc, mode, exec);
    }
    return acc;
}

TensorSum mu_star(const GUSum &x, GroupMode mode, Exec exec)
{
    TensorSum out;
    for (const auto &[g, m] : x) {
        out += m * mu_star(g, mode, exec);
    }
    enforce_term_limit(out, "mu_star");
    return out;
}

TensorSum mu_star_by_product(const GUClass &g, GroupMode mode, Exec exec)
{
    return twisted_rtimes(mstar_big(g.gl(), exec), anchor(g), mode, exec);
}

TensorSum gl_split(const GLMonomial &m, std::span<const std::int64_t> blocks)
{
    TensorSum out;
    if (blocks.empty()) {
        if (m.is_one()) {
            out.add(TensorTerm(std::vector<GLMonomial>{}));
        }
        return out;
    }
    if (blocks.size() == 1) {
        if (m.rank() == blocks[0]) {
            out.add(TensorTerm({m}));
        }
        return out;
    }
    for (const auto &[pair, mult] : mstar_gl_graded(m, blocks[0])) {
        for (const auto &[rest, rmult] : gl_split(pair.gl(1), blocks.subspan(1))) {
            std::vector<GLMonomial> f;
            f.reserve(blocks.size());
            f.push_back(pair.gl(0));
            f.insert(f.end(), rest.gl().begin(), rest.gl().end());
            out.add(TensorTerm(std::move(f)), mult * rmult);
        }
    }
    return out;
}

TensorSum jacquet_by_shape(const GUClass &g, const ParabolicShape &shape, GroupMode mode, Exec exec)
{
    for (auto b : shape.blocks) {
        if (b <= 0) {
            throw ShapeOverflow("parabolic shape blocks must be positive");
        }
    }
    const auto total = shape.total();
    if (total > g.gl().rank()) {
        throw ShapeOverflow("shape of total rank " + std::to_string(total) + " exceeds the GL rank "
                            + std::to_string(g.gl().rank()) + " of " + g.to_string());
    }
    const auto mu = mu_star(g, mode, exec);
    const auto terms = detail::flatten(mu);
    auto out = detail::expand<TensorTerm>(
        terms.size(),
        [&](std::size_t i, TensorSum &acc) {
            const auto &[t, m] = terms[i];
            if (t->gl(0).rank() != total) {
                return;
            }
            for (const auto &[split, sm] : gl_split(t->gl(0), shape.blocks)) {
                acc.add(TensorTerm(split.gl(), t->gu()), *m * sm);
            }
        },
        exec);
    enforce_term_limit(out, "jacquet_by_shape");
    return out;
}

} // namespace jacquet
