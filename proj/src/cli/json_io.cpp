#include <jacquet/cli/json_io.hpp>

#include <stdexcept>

#include <jacquet/errors.hpp>

namespace jacquet::cli
{

json to_json(HalfInt x)
{
    return x.to_string();
}

HalfInt halfint_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return HalfInt(j.get<std::int64_t>());
    }
    if (!j.is_string()) {
        throw DomainError("expected a half-integer, got " + j.dump());
    }
    try {
        return HalfInt::parse(j.get<std::string>());
    } catch (const std::invalid_argument &) {
        throw DomainError("not a half-integer: " + j.dump());
    }
}

json to_json(const Segment &s)
{
    return {{"rho", s.rho().name()}, {"a", to_json(s.a())}, {"b", to_json(s.b())}};
}

json to_json(const GLMonomial &m)
{
    json out = json::array();
    for (const auto &s : m.segments()) {
        out.push_back(to_json(s));
    }
    return out;
}

json to_json(const TwistTag &t)
{
    json out = json::object();
    for (const auto &[rho, e] : t.entries()) {
        out[rho.name()] = {{"power", e.power}, {"nu_sum", to_json(e.nu_sum)}};
    }
    return out;
}

json to_json(const GUClass &g)
{
    return {{"segments", to_json(g.gl())}, {"sigma", g.sigma().name()}, {"twist", to_json(g.twist())}};
}

json to_json(const TensorTerm &t)
{
    json out = json::array();
    for (const auto &f : t.gl()) {
        out.push_back(to_json(f));
    }
    if (t.gu()) {
        out.push_back(to_json(*t.gu()));
    }
    return out;
}

json to_json(const Multiplicity &m)
{
    // Plain numbers while they fit; exact strings beyond.
    if (m >= INT64_MIN && m <= INT64_MAX) {
        return m.convert_to<std::int64_t>();
    }
    return m.str();
}

Segment segment_from_json(const json &j, const LabelScope &scope)
{
    if (!j.is_object() || !j.contains("rho") || !j.contains("a") || !j.contains("b")) {
        throw DomainError("segment must be {\"rho\", \"a\", \"b\"}: " + j.dump());
    }
    return Segment(scope.gl(j.at("rho").get<std::string>()), halfint_from_json(j.at("a")),
                   halfint_from_json(j.at("b")));
}

namespace
{

GLMonomial monomial_from_json(const json &j, const LabelScope &scope)
{
    if (!j.is_array()) {
        throw DomainError("GL factor must be a list of segments: " + j.dump());
    }
    std::vector<Segment> segs;
    for (const auto &s : j) {
        segs.push_back(segment_from_json(s, scope));
    }
    return GLMonomial(std::move(segs));
}

} // namespace

GUClass gu_class_from_json(const json &j, const LabelScope &scope)
{
    TwistTag tw;
    if (j.contains("twist")) {
        for (const auto &[name, e] : j.at("twist").items()) {
            tw = merge(tw, TwistTag::single(scope.gl(name), e.at("power").get<std::int64_t>(),
                                            halfint_from_json(e.at("nu_sum"))));
        }
    }
    return GUClass(scope.gu(j.at("sigma").get<std::string>()), monomial_from_json(j.at("segments"), scope), tw);
}

TensorTerm tensor_term_from_json(const json &j, const LabelScope &scope)
{
    if (!j.is_array()) {
        throw DomainError("tensor term must be a list of factors: " + j.dump());
    }
    std::vector<GLMonomial> gl;
    std::optional<GUClass> gu;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].is_object()) {
            if (i + 1 != j.size()) {
                throw DomainError("GU factor must come last: " + j.dump());
            }
            gu = gu_class_from_json(j[i], scope);
        } else {
            gl.push_back(monomial_from_json(j[i], scope));
        }
    }
    return TensorTerm(std::move(gl), std::move(gu));
}

TensorSum tensor_sum_from_json(const json &j, const LabelScope &scope)
{
    TensorSum out;
    for (const auto &e : j) {
        const auto &m = e.at("mult");
        Multiplicity mult = m.is_string() ? Multiplicity(m.get<std::string>()) : Multiplicity(m.get<std::int64_t>());
        out.add(tensor_term_from_json(e.at("term"), scope), mult);
    }
    return out;
}

json to_json(const JordSequence &s)
{
    json b = json::array();
    for (auto x : s.b) {
        b.push_back(to_json(x));
    }
    return {{"rho", s.rho.name()}, {"a", to_json(s.a)}, {"b", b}};
}

json to_json(const LJDatum &d)
{
    json jord = json::array();
    for (const auto &s : d.jord) {
        jord.push_back(to_json(s));
    }
    return {{"sigma", d.sigma.name()}, {"jord", jord}};
}

LJDatum lj_datum_from_json(const json &j, const LabelScope &scope)
{
    if (!j.is_object() || !j.contains("sigma") || !j.contains("jord")) {
        throw DomainError("LJ datum must be {\"sigma\", \"jord\"}");
    }
    LJDatum d{{}, scope.gu(j.at("sigma").get<std::string>())};
    for (const auto &e : j.at("jord")) {
        JordSequence s{scope.gl(e.at("rho").get<std::string>()), halfint_from_json(e.at("a")), {}};
        for (const auto &b : e.at("b")) {
            s.b.push_back(halfint_from_json(b));
        }
        d.jord.push_back(std::move(s));
    }
    return d;
}

json to_json(const SignedPermutation &w)
{
    return {{"perm", w.perm()},
            {"signs", w.signs()},
            {"cycles", w.cycle_notation()},
            {"sign_vector", w.sign_string()},
            {"length", w.length()}};
}

json to_json(const GeomParams &p)
{
    return {{"n", p.n}, {"i1", p.i1}, {"i2", p.i2}, {"d", p.d}, {"k", p.k}};
}

} // namespace jacquet::cli
