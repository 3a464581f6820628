#include <jacquet/cli/commands.hpp>

#include <charconv>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <jacquet/cli/declarations.hpp>
#include <jacquet/cli/expression.hpp>
#include <jacquet/cli/json_io.hpp>
#include <jacquet/errors.hpp>
#include <jacquet/spclassifier.hpp>
#include <jacquet/structure.hpp>
#include <jacquet/weyl.hpp>

namespace jacquet::cli
{

namespace
{

struct Options {
    std::string expr;
    std::string group = "GU";
    std::string format = "text";
    std::string decls;
    std::string shape_text;
    std::vector<std::int64_t> shape;
    std::string term;
    int n = 0;
    int i1 = 0;
    int i2 = 0;
    int bound = 4;
    bool oracle = false;
    std::string sigma;
    std::vector<std::string> rhos;
    std::string max_b = "5";
    bool strict_jord = false;
    std::string datum;
};

class Session
{
public:
    Session(const Options &o, std::ostream &out, std::ostream &err)
        : m_opt(o), m_out(out), m_err(err), m_scope(m_registry, o.decls.empty())
    {
        if (!o.decls.empty()) {
            load_declarations(read_json_file(o.decls), m_registry);
        }
    }

    GroupMode mode() const
    {
        return m_opt.group == "U" ? GroupMode::U : GroupMode::GU;
    }
    JordConvention convention() const
    {
        return m_opt.strict_jord ? JordConvention::strict : JordConvention::permissive;
    }
    bool json_out() const
    {
        return m_opt.format == "json";
    }

    int mustar()
    {
        const Expression e = parse_expression(m_opt.expr, m_scope);
        const TensorSum r = mu_star(e.gu_class(), mode());
        emit_sum("mustar", e, r, {{"group", to_string(mode())}});
        return exit_ok;
    }

    int mstar()
    {
        const Expression e = parse_expression(m_opt.expr, m_scope);
        const TensorSum r = mstar_big(e.gl());
        emit_sum("mstar", e, r, json::object());
        return exit_ok;
    }

    int jacquet()
    {
        const Expression e = parse_expression(m_opt.expr, m_scope);
        const TensorSum r = jacquet_by_shape(e.gu_class(), ParabolicShape{m_opt.shape}, mode());
        emit_sum("jacquet", e, r, {{"group", to_string(mode())}, {"shape", m_opt.shape}});
        return exit_ok;
    }

    int mult()
    {
        const Expression e = parse_expression(m_opt.expr, m_scope);
        const TensorTerm t = parse_tensor_term(m_opt.term, m_scope);
        const TensorSum r = jacquet_by_shape(e.gu_class(), ParabolicShape{m_opt.shape}, mode());
        const Multiplicity m = r.coefficient(t);
        if (json_out()) {
            json doc = {{"command", "mult"},         {"input", e.to_string()}, {"group", to_string(mode())},
                        {"shape", m_opt.shape},      {"term", to_json(t)},     {"term_text", t.to_string()},
                        {"multiplicity", to_json(m)}};
            m_out << doc.dump(2) << '\n';
        } else {
            m_out << m.str() << '\n';
        }
        return exit_ok;
    }

    int weyl()
    {
        const auto params = enumerate_geom_params(m_opt.n, m_opt.i1, m_opt.i2);
        json reps = json::array();
        if (!json_out()) {
            m_out << fmt::format("W(C_{}) double cosets for i1={} i2={}: {} representatives\n", m_opt.n, m_opt.i1,
                                 m_opt.i2, params.size());
        }
        for (const auto &p : params) {
            const SignedPermutation q = q_rep(p);
            if (json_out()) {
                json item = to_json(q);
                item["d"] = p.d;
                item["k"] = p.k;
                reps.push_back(item);
            } else {
                m_out << fmt::format("d={} k={}  {:<12} {}  length {}\n", p.d, p.k, q.cycle_notation(),
                                     q.sign_string(), q.length());
            }
        }
        json doc = {{"command", "weyl"}, {"n", m_opt.n}, {"i1", m_opt.i1}, {"i2", m_opt.i2},
                    {"representatives", reps}};
        int code = exit_ok;
        if (m_opt.oracle) {
            const OracleReport r = compare_with_oracle(m_opt.n, m_opt.i1, m_opt.i2, m_opt.bound);
            json missing = json::array();
            json extra = json::array();
            for (const auto &w : r.brute_force) {
                if (!r.closed_form.contains(w)) {
                    missing.push_back(to_json(w));
                }
            }
            for (const auto &w : r.closed_form) {
                if (!r.brute_force.contains(w)) {
                    extra.push_back(to_json(w));
                }
            }
            doc["oracle"] = {{"match", r.match},
                             {"brute_force_count", r.brute_force.size()},
                             {"missing", missing},
                             {"extra", extra}};
            if (!json_out()) {
                m_out << (r.match ? "MATCH" : "MISMATCH") << '\n';
            }
            if (!r.match) {
                m_err << "closed form disagrees with the brute-force representatives\n";
                code = exit_domain;
            }
        }
        if (json_out()) {
            m_out << doc.dump(2) << '\n';
        }
        return code;
    }

    int enum_sp()
    {
        const GULabel sigma = m_scope.gu(m_opt.sigma);
        std::vector<GLLabel> labels;
        for (const auto &r : m_opt.rhos) {
            labels.push_back(m_scope.gl(r));
        }
        const HalfInt max_b = HalfInt::parse(m_opt.max_b);
        const auto entries = enumerate_sp(labels, sigma, max_b, mode(), convention());
        json data = json::array();
        if (!json_out()) {
            m_out << fmt::format("{} data for sigma={} max_b={} ({}, {})\n", entries.size(), sigma.name(),
                                 max_b.to_string(), to_string(mode()),
                                 m_opt.strict_jord ? "strict" : "permissive");
        }
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto &e = entries[i];
            for (const auto &w : e.diagnostics.warnings) {
                m_err << "warning: datum " << i << ": " << w << '\n';
            }
            if (json_out()) {
                data.push_back({{"datum", to_json(e.datum)},
                                {"inducing", e.inducing.rep.to_string()},
                                {"inducing_class", to_json(e.inducing.rep)},
                                {"exponents_ok", e.diagnostics.exponents_ok},
                                {"leading_multiplicity", to_json(e.diagnostics.leading_multiplicity)},
                                {"warnings", e.diagnostics.warnings}});
            } else {
                m_out << fmt::format("[{}] {}\n    {}\n    constraints {}, leading multiplicity {}\n", i,
                                     datum_text(e.datum), e.inducing.rep.to_string(),
                                     e.diagnostics.exponents_ok ? "ok" : "VIOLATED",
                                     e.diagnostics.leading_multiplicity.str());
            }
        }
        if (json_out()) {
            json doc = {{"command", "enum-sp"},
                        {"sigma", sigma.name()},
                        {"max_b", to_json(max_b)},
                        {"group", to_string(mode())},
                        {"convention", m_opt.strict_jord ? "strict" : "permissive"},
                        {"count", entries.size()},
                        {"data", data}};
            m_out << doc.dump(2) << '\n';
        }
        return exit_ok;
    }

    int check_lj()
    {
        const LJDatum d = lj_datum_from_json(read_json_file(m_opt.datum), m_scope);
        const ValidationReport rep = validate_lj(d, convention());
        json doc = {{"command", "check-lj"}, {"datum", to_json(d)}, {"valid", rep.ok()}};
        json conds = json::array();
        for (const auto &c : rep.conditions) {
            conds.push_back({{"clause", c.clause}, {"passed", c.passed}, {"message", c.message}});
        }
        doc["conditions"] = conds;
        if (!json_out()) {
            m_out << rep.to_string();
        }
        if (rep.ok()) {
            const InducingRep ind = build_inducing_rep(d, convention());
            const Multiplicity m = leading_term_multiplicity(d, mode(), convention());
            for (const auto &w : ind.warnings) {
                m_err << "warning: " << w << '\n';
            }
            doc["inducing"] = ind.rep.to_string();
            doc["inducing_class"] = to_json(ind.rep);
            doc["leading_multiplicity"] = to_json(m);
            doc["warnings"] = ind.warnings;
            if (!json_out()) {
                m_out << "inducing: " << ind.rep.to_string() << '\n'
                      << "leading multiplicity: " << m.str() << '\n';
            }
        }
        if (json_out()) {
            m_out << doc.dump(2) << '\n';
        }
        return rep.ok() ? exit_ok : exit_domain;
    }

private:
    void emit_sum(const char *command, const Expression &e, const TensorSum &r, json extra)
    {
        if (json_out()) {
            json doc = {{"command", command}, {"input", e.to_string()}, {"count", r.size()}, {"terms", to_json(r)}};
            doc.update(extra);
            m_out << doc.dump(2) << '\n';
            return;
        }
        m_out << r.size() << " terms\n";
        for (const auto &[t, m] : r) {
            m_out << fmt::format("{:>4}  {}\n", m.str(), t.to_string());
        }
    }

    static std::string datum_text(const LJDatum &d)
    {
        std::string out;
        for (const auto &s : d.jord) {
            std::string bs;
            for (auto b : s.b) {
                bs += (bs.empty() ? "" : ",") + b.to_string();
            }
            out += fmt::format("{}{}: a={} b=({})", out.empty() ? "" : "; ", s.rho.name(), s.a.to_string(), bs);
        }
        return out + " | " + d.sigma.name();
    }

    const Options &m_opt;
    std::ostream &m_out;
    std::ostream &m_err;
    LabelRegistry m_registry;
    LabelScope m_scope;
};

void add_group(CLI::App *cmd, Options &o)
{
    cmd->add_option("--group", o.group, "GU or U")->check(CLI::IsMember({"GU", "U"}));
}

void add_format(CLI::App *cmd, Options &o)
{
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

std::optional<std::vector<std::int64_t>> parse_shape(const std::string &text)
{
    std::vector<std::int64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::int64_t v = 0;
        const auto b = item.find_first_not_of(' ');
        const auto e = item.find_last_not_of(' ');
        if (b == std::string::npos) {
            return std::nullopt;
        }
        const char *first = item.data() + b;
        const char *last = item.data() + e + 1;
        auto [p, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || p != last) {
            return std::nullopt;
        }
        out.push_back(v);
    }
    return out;
}

CLI::Validator shape_check()
{
    return CLI::Validator(
        [](std::string &s) { return parse_shape(s) ? std::string() : "bad shape '" + s + "'; expected n1,n2,..."; },
        "SHAPE");
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Jacquet modules of induced representations of GU(n,n) and U(n,n)", "jacquet"};
    app.require_subcommand(1);

    auto *mustar = app.add_subcommand("mustar", "mu* of an induced class");
    mustar->add_option("expr", o.expr, "e.g. \"d(1,1@rho) |x| sigma\"")->required();
    add_group(mustar, o);
    add_format(mustar, o);
    mustar->add_option("--decls", o.decls, "declarations JSON")->check(CLI::ExistingFile);

    auto *mstar = app.add_subcommand("mstar", "M* of the GL part");
    mstar->add_option("expr", o.expr)->required();
    add_format(mstar, o);
    mstar->add_option("--decls", o.decls)->check(CLI::ExistingFile);

    auto *jac = app.add_subcommand("jacquet", "Jacquet module r_s");
    jac->add_option("expr", o.expr)->required();
    jac->add_option("--shape", o.shape_text, "n1,n2,... (empty for the trivial parabolic)")
        ->required()
        ->check(shape_check());
    add_group(jac, o);
    add_format(jac, o);
    jac->add_option("--decls", o.decls)->check(CLI::ExistingFile);

    auto *mult = app.add_subcommand("mult", "multiplicity of a term in r_s");
    mult->add_option("expr", o.expr)->required();
    mult->add_option("--term", o.term, "e.g. \"d(1,1@rho) (x) 1 |x| sigma\"")->required();
    mult->add_option("--shape", o.shape_text)->required()->check(shape_check());
    add_group(mult, o);
    add_format(mult, o);
    mult->add_option("--decls", o.decls)->check(CLI::ExistingFile);

    auto *weyl = app.add_subcommand("weyl", "double-coset representatives in W(C_n)");
    weyl->add_option("--n", o.n)->required();
    weyl->add_option("--i1", o.i1)->required();
    weyl->add_option("--i2", o.i2)->required();
    weyl->add_flag("--oracle", o.oracle, "compare with brute-force enumeration");
    weyl->add_option("--bound", o.bound, "largest n the brute force accepts")->capture_default_str();
    add_format(weyl, o);

    auto *enumsp = app.add_subcommand("enum-sp", "enumerate LJ data with diagnostics");
    enumsp->add_option("--decls", o.decls)->check(CLI::ExistingFile)->required();
    enumsp->add_option("--sigma", o.sigma)->required();
    enumsp->add_option("--rhos", o.rhos)->delimiter(',')->required();
    enumsp->add_option("--max-b", o.max_b, "bound on the exponents, e.g. 5/2")
        ->capture_default_str()
        ->check([](const std::string &s) {
            try {
                HalfInt::parse(s);
                return std::string();
            } catch (const std::invalid_argument &) {
                return "not a half-integer: " + s;
            }
        });
    enumsp->add_flag("--strict-jord", o.strict_jord, "forbid empty segments");
    add_group(enumsp, o);
    add_format(enumsp, o);

    auto *check = app.add_subcommand("check-lj", "validate an LJ datum");
    check->add_option("--decls", o.decls)->check(CLI::ExistingFile)->required();
    check->add_option("--datum", o.datum)->check(CLI::ExistingFile)->required();
    check->add_flag("--strict-jord", o.strict_jord);
    add_group(check, o);
    add_format(check, o);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    o.shape = parse_shape(o.shape_text).value_or(std::vector<std::int64_t>{});
    try {
        Session s(o, out, err);
        if (*mustar) {
            return s.mustar();
        }
        if (*mstar) {
            return s.mstar();
        }
        if (*jac) {
            return s.jacquet();
        }
        if (*mult) {
            return s.mult();
        }
        if (*weyl) {
            return s.weyl();
        }
        if (*enumsp) {
            return s.enum_sp();
        }
        return s.check_lj();
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const json::exception &e) {
        err << "error: malformed JSON input: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
}

} // namespace jacquet::cli
