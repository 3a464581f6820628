#include <jacquet/cli/declarations.hpp>

#include <fstream>
#include <sstream>

#include <jacquet/errors.hpp>

namespace jacquet::cli
{

Declarations load_declarations(const json &j, LabelRegistry &registry)
{
    if (!j.is_object()) {
        throw DomainError("declarations must be a JSON object");
    }
    Declarations out;
    const LabelScope scope(registry, false);
    for (const auto &e : j.value("gl", json::array())) {
        out.gl.push_back(registry.declare_gl(e.at("name").get<std::string>(), e.value("dim", 1),
                                             e.value("conj_self_dual", true)));
    }
    for (const auto &e : j.value("gu", json::array())) {
        std::map<GLLabel, HalfInt> red;
        const json reducibility = e.value("reducibility", json::object());
        for (const auto &[rho, a] : reducibility.items()) {
            const HalfInt v = halfint_from_json(a);
            if (v < HalfInt(0)) {
                throw DomainError("reducibility point of " + rho + " must be >= 0");
            }
            red.emplace(scope.gl(rho), v);
        }
        std::set<GLLabel> fixed;
        for (const auto &rho : e.value("twist_fixed", json::array())) {
            fixed.insert(scope.gl(rho.get<std::string>()));
        }
        out.gu.push_back(registry.declare_gu(e.at("name").get<std::string>(), e.value("rank", 0), std::move(red),
                                             std::move(fixed)));
    }
    return out;
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return json::parse(buf.str());
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what(), 0, e.byte);
    }
}

} // namespace jacquet::cli
