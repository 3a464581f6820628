#include <jacquet/grothendieck.hpp>

namespace jacquet
{

GLSum gl_multiply(const GLSum &x, const GLSum &y, Exec exec)
{
    const auto xs = detail::flatten(x);
    auto out = detail::expand<GLMonomial>(
        xs.size(),
        [&](std::size_t i, GLSum &acc) {
            const auto &[xt, xm] = xs[i];
            for (const auto &[yt, ym] : y) {
                acc.add(*xt * yt, *xm * ym);
            }
        },
        exec);
    enforce_term_limit(out, "gl_multiply");
    return out;
}

TensorSum tensor_multiply(const TensorSum &x, const TensorSum &y, Exec exec)
{
    if (x.kind() && y.kind() && *x.kind() != *y.kind()) {
        throw KindMismatch("tensor_multiply: arity mismatch");
    }
    const auto xs = detail::flatten(x);
    auto out = detail::expand<TensorTerm>(
        xs.size(),
        [&](std::size_t i, TensorSum &acc) {
            const auto &[xt, xm] = xs[i];
            for (const auto &[yt, ym] : y) {
                acc.add(*xt * yt, *xm * ym);
            }
        },
        exec);
    enforce_term_limit(out, "tensor_multiply");
    return out;
}

TensorSum tensor_unit(std::size_t arity)
{
    return TensorSum(TensorTerm(std::vector<GLMonomial>(arity)));
}

} // namespace jacquet
