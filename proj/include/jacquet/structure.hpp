#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <jacquet/exec.hpp>
#include <jacquet/formal_sum.hpp>
#include <jacquet/group_mode.hpp>

namespace jacquet
{

// Ordered partition s = (n1, ..., nk) of GL block ranks over E.
struct ParabolicShape {
    std::vector<std::int64_t> blocks;

    std::int64_t total() const;
};

// m*(delta([a,b])) = sum_{i=a-1}^{b} delta([i+1,b]) (x) delta([a,i]).
TensorSum mstar_gl(const Segment &s);
TensorSum mstar_gl(const GLMonomial &m, Exec exec = Exec::parallel);
TensorSum mstar_gl(const GLSum &x, Exec exec = Exec::parallel);

// The (L+1)(L+2)/2 raw terms of the three-factor comultiplication of one
// segment, in (i, j) order, before they are collected into a sum:
//   delta([a,i]) (x) delta([j+1,b]) (x) delta([i+1,j]),  a-1 <= i <= j <= b.
std::vector<TensorTerm> mstar_big_expansion(const Segment &s);
// Memoized per segment.
TensorSum mstar_big(const Segment &s);
// Extended multiplicatively to products and linearly to sums.
TensorSum mstar_big(const GLMonomial &m, Exec exec = Exec::parallel);
TensorSum mstar_big(const GLSum &x, Exec exec = Exec::parallel);

// omega_pi for pi a product of segment deltas: one unit of omega_rho per
// cuspidal constituent, with the nu-exponents summed.
TwistTag central_character(const GLMonomial &m);

// (p1 (x) p2 (x) p3) ~x (p4 (x) s) = dual(p1) x p2 x p4 (x) p3 |x| omega_{p1} s
// (GU), or without the omega factor (U).
TensorTerm twisted_rtimes(const TensorTerm &m, const TensorTerm &t, GroupMode mode);
TensorSum twisted_rtimes(const TensorSum &m, const TensorSum &t, GroupMode mode, Exec exec = Exec::parallel);

// mu*(delta(D1) x ... x delta(Dk) |x| sigma), folding the pairing over the
// segments, anchored at mu*(sigma_cusp) = 1 (x) sigma_cusp.
TensorSum mu_star(const GUClass &g, GroupMode mode, Exec exec = Exec::parallel);
TensorSum mu_star(const GUSum &x, GroupMode mode, Exec exec = Exec::parallel);
// Same value through M* of the whole GL product paired once with the anchor.
TensorSum mu_star_by_product(const GUClass &g, GroupMode mode, Exec exec = Exec::parallel);

// Terms of m*(m) iterated into blocks.size() factors of exactly those ranks.
TensorSum gl_split(const GLMonomial &m, std::span<const std::int64_t> blocks);

// Semisimplified Jacquet module r_s(g) as a sum of
// (|blocks| GL factors) (x) GU factor. Throws ShapeOverflow.
TensorSum jacquet_by_shape(const GUClass &g, const ParabolicShape &shape, GroupMode mode,
                           Exec exec = Exec::parallel);

// Entry count of the M* memo table of a registry.
std::size_t mstar_cache_size(LabelRegistry &registry);

} // namespace jacquet
