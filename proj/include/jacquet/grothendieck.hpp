#pragma once

#include <jacquet/exec.hpp>
#include <jacquet/formal_sum.hpp>

namespace jacquet
{

// Product in R_GL: bilinear extension of monomial concatenation.
GLSum gl_multiply(const GLSum &x, const GLSum &y, Exec exec = Exec::parallel);

// Componentwise product in R_GL^(x r). Throws KindMismatch on arity mismatch
// or if a GU factor is present.
TensorSum tensor_multiply(const TensorSum &x, const TensorSum &y, Exec exec = Exec::parallel);

inline GLSum operator*(const GLSum &x, const GLSum &y)
{
    return gl_multiply(x, y);
}

// The unit 1 (x) ... (x) 1 of the r-fold tensor power.
TensorSum tensor_unit(std::size_t arity);

} // namespace jacquet
