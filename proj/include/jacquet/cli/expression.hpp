#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <jacquet/monomials.hpp>

namespace jacquet::cli
{

// Resolves label names while parsing. In implicit mode unknown names are
// declared on the spot (GL: dim 1, conjugate self-dual; GU: rank 0, no
// reducibility data); otherwise they raise UnknownLabel.
class LabelScope
{
public:
    LabelScope(LabelRegistry &registry, bool implicit) : m_registry(&registry), m_implicit(implicit) {}

    GLLabel gl(std::string_view name) const;
    GULabel gu(std::string_view name) const;
    LabelRegistry &registry() const
    {
        return *m_registry;
    }

private:
    LabelRegistry *m_registry;
    bool m_implicit;
};

// Parsed "d(a,b@rho) x ... |x| sigma". Segments keep their written order.
struct Expression {
    std::vector<Segment> gl_part;
    std::optional<GULabel> gu_anchor;

    GLMonomial gl() const
    {
        return GLMonomial(gl_part);
    }
    // Throws DomainError if there is no anchor.
    GUClass gu_class() const;
    // Inverse of parse_expression.
    std::string to_string() const;

    friend bool operator==(const Expression &, const Expression &) = default;
};

//   expr   := glpart ("|x|" IDENT)?
//   glpart := delta ("x" delta)* | "1"
//   delta  := "d(" num "," num "@" IDENT ")"
//   num    := INT | INT "/" "2" | "-" num
// Whitespace is insignificant. Throws ParseError with line and column.
Expression parse_expression(std::string_view text, const LabelScope &scope);

// Tensor term: glpart ("(x)" glpart)* ("|x|" IDENT)?, where the GU anchor
// attaches to the last factor.
TensorTerm parse_tensor_term(std::string_view text, const LabelScope &scope);

std::string print_tensor_term(const TensorTerm &t);

} // namespace jacquet::cli
