#include <jacquet/cli/expression.hpp>

#include <cctype>

#include <jacquet/errors.hpp>

namespace jacquet::cli
{

GLLabel LabelScope::gl(std::string_view name) const
{
    if (auto l = m_registry->find_gl(name)) {
        return *l;
    }
    if (!m_implicit) {
        throw UnknownLabel("unknown GL label '" + std::string(name) + "'");
    }
    // "x~" names the dual of x, which is then taken to be non-self-dual.
    if (name.size() > 1 && name.back() == '~') {
        const auto base_name = name.substr(0, name.size() - 1);
        const auto base = m_registry->find_gl(base_name);
        if (base && base->conj_self_dual()) {
            throw UnknownLabel("'" + std::string(base_name) + "' is conjugate self-dual; '" + std::string(name)
                               + "' is not a label");
        }
        return (base ? *base : m_registry->declare_gl(base_name, 1, false)).dual();
    }
    return m_registry->declare_gl(name, 1, true);
}

GULabel LabelScope::gu(std::string_view name) const
{
    if (auto l = m_registry->find_gu(name)) {
        return *l;
    }
    if (!m_implicit) {
        throw UnknownLabel("unknown GU label '" + std::string(name) + "'");
    }
    return m_registry->declare_gu(name, 0);
}

GUClass Expression::gu_class() const
{
    if (!gu_anchor) {
        throw DomainError("expression has no |x| anchor");
    }
    return GUClass(*gu_anchor, gl());
}

std::string Expression::to_string() const
{
    std::string out;
    for (const auto &s : gl_part) {
        if (!out.empty()) {
            out += " x ";
        }
        out += s.to_string();
    }
    if (out.empty()) {
        out = "1";
    }
    if (gu_anchor) {
        out += " |x| " + gu_anchor->name();
    }
    return out;
}

namespace
{

class Parser
{
public:
    Parser(std::string_view text, const LabelScope &scope) : m_text(text), m_scope(scope) {}

    std::vector<Segment> glpart()
    {
        skip_ws();
        std::vector<Segment> out;
        if (peek() == '1') {
            advance();
            return out;
        }
        out.push_back(delta());
        while (true) {
            skip_ws();
            // "x" separator, but not the "x" of "|x|" or "(x)".
            if (peek() != 'x') {
                break;
            }
            advance();
            out.push_back(delta());
        }
        return out;
    }

    bool accept(std::string_view tok)
    {
        skip_ws();
        if (m_text.substr(m_pos, tok.size()) != tok) {
            return false;
        }
        for (std::size_t i = 0; i < tok.size(); ++i) {
            advance();
        }
        return true;
    }

    void expect(std::string_view tok)
    {
        if (!accept(tok)) {
            fail("expected '" + std::string(tok) + "'");
        }
    }

    std::string ident()
    {
        skip_ws();
        const std::size_t start = m_pos;
        if (!(std::isalpha(uc(peek())) || peek() == '_')) {
            fail("expected a label name");
        }
        while (std::isalnum(uc(peek())) || peek() == '_' || peek() == '~' || peek() == '\'') {
            advance();
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    std::int64_t integer()
    {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            advance();
            skip_ws();
        }
        if (!std::isdigit(uc(peek()))) {
            fail("expected an integer");
        }
        std::int64_t v = 0;
        while (std::isdigit(uc(peek()))) {
            if (v > (INT64_MAX / 4 - 9) / 10) {
                fail("integer too large");
            }
            v = 10 * v + (peek() - '0');
            advance();
        }
        return neg ? -v : v;
    }

    HalfInt num()
    {
        skip_ws();
        if (peek() == '-') {
            advance();
            return -num();
        }
        if (!std::isdigit(uc(peek()))) {
            fail("expected a number");
        }
        const std::int64_t n = integer();
        if (accept("/")) {
            skip_ws();
            if (peek() != '2') {
                fail("only the denominator 2 is allowed");
            }
            advance();
            if (std::isdigit(uc(peek()))) {
                fail("only the denominator 2 is allowed");
            }
            return HalfInt::from_twice(n);
        }
        return HalfInt(n);
    }

    Segment delta()
    {
        skip_ws();
        const auto line = m_line;
        const auto col = m_col;
        expect("d(");
        const HalfInt a = num();
        expect(",");
        const HalfInt b = num();
        expect("@");
        const std::string rho = ident();
        expect(")");
        if (b < a) {
            throw ParseError("segment literal with b < a; the unit is written 1", line, col);
        }
        if (!(b - a).is_integer()) {
            throw ParseError("segment bounds must differ by an integer", line, col);
        }
        return Segment(m_scope.gl(rho), a, b);
    }

    TwistTag twist()
    {
        TwistTag out;
        do {
            const GLLabel rho = m_scope.gl(ident());
            expect("^");
            const std::int64_t power = integer();
            expect(":nu^");
            const HalfInt nu = num();
            out = merge(out, TwistTag::single(rho, power, nu));
        } while (accept(","));
        return out;
    }

    void finish()
    {
        skip_ws();
        if (m_pos != m_text.size()) {
            fail("unexpected trailing input");
        }
    }

    const LabelScope &scope() const
    {
        return m_scope;
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        std::string near = m_pos < m_text.size() ? "'" + std::string(1, m_text[m_pos]) + "'" : "end of input";
        throw ParseError(what + " near " + near, m_line, m_col);
    }

private:
    static unsigned char uc(char c)
    {
        return static_cast<unsigned char>(c);
    }
    char peek() const
    {
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }
    void advance()
    {
        if (m_text[m_pos] == '\n') {
            ++m_line;
            m_col = 1;
        } else {
            ++m_col;
        }
        ++m_pos;
    }
    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(uc(m_text[m_pos]))) {
            advance();
        }
    }

    std::string_view m_text;
    const LabelScope &m_scope;
    std::size_t m_pos = 0;
    std::size_t m_line = 1;
    std::size_t m_col = 1;
};

} // namespace

Expression parse_expression(std::string_view text, const LabelScope &scope)
{
    Parser p(text, scope);
    Expression e;
    e.gl_part = p.glpart();
    if (p.accept("|x|")) {
        e.gu_anchor = scope.gu(p.ident());
    }
    p.finish();
    return e;
}

TensorTerm parse_tensor_term(std::string_view text, const LabelScope &scope)
{
    Parser p(text, scope);
    std::vector<GLMonomial> factors;
    std::optional<GUClass> gu;
    while (true) {
        auto segs = p.glpart();
        if (p.accept("|x|")) {
            const GULabel sigma = scope.gu(p.ident());
            TwistTag tw;
            if (p.accept("<w:")) {
                tw = p.twist();
                p.expect(">");
            }
            gu = GUClass(sigma, GLMonomial(std::move(segs)), tw);
            break;
        }
        factors.emplace_back(std::move(segs));
        if (!p.accept("(x)")) {
            break;
        }
    }
    p.finish();
    return TensorTerm(std::move(factors), std::move(gu));
}

std::string print_tensor_term(const TensorTerm &t)
{
    return t.to_string();
}

} // namespace jacquet::cli
