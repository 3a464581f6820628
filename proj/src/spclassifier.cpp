#include <jacquet/spclassifier.hpp>

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>

#include <jacquet/errors.hpp>
#include <jacquet/structure.hpp>

namespace jacquet
{

namespace
{

bool violates_strict_bound(const JordSequence &s, std::size_t idx)
{
    // b_i >= a - k + i with i = idx + 1.
    return s.b[idx] < s.a - s.k() + static_cast<std::int64_t>(idx + 1);
}

} // namespace

std::string JordSequence::violation(JordConvention conv) const
{
    if (a < HalfInt(0)) {
        return "reducibility point " + a.to_string() + " is negative";
    }
    if (static_cast<std::int64_t>(b.size()) != k()) {
        return "sequence has length " + std::to_string(b.size()) + ", expected ceil(" + a.to_string()
               + ") = " + std::to_string(k());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!(b[i] - a).is_integer()) {
            return "b_" + std::to_string(i + 1) + " = " + b[i].to_string() + " does not differ from a = "
                   + a.to_string() + " by an integer";
        }
    }
    if (!b.empty() && !(b[0] > HalfInt(-1))) {
        return "b_1 = " + b[0].to_string() + " must exceed -1";
    }
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (!(b[i - 1] < b[i])) {
            return "sequence is not strictly increasing at b_" + std::to_string(i + 1);
        }
    }
    if (conv == JordConvention::strict) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (violates_strict_bound(*this, i)) {
                return "b_" + std::to_string(i + 1) + " = " + b[i].to_string()
                       + " gives an empty segment (strict convention)";
            }
        }
    }
    return {};
}

std::vector<Segment> JordSequence::segments() const
{
    std::vector<Segment> out;
    out.reserve(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        out.emplace_back(rho, a - k() + static_cast<std::int64_t>(j + 1), b[j]);
    }
    return out;
}

std::vector<JordSequence> enumerate_jord(const GLLabel &rho, HalfInt a, HalfInt max_b, JordConvention conv)
{
    if (a < HalfInt(0)) {
        throw DomainError("enumerate_jord: reducibility point must be >= 0");
    }
    if (max_b < a) {
        throw DomainError("enumerate_jord: max_b must be >= a");
    }
    const auto k = ceil(a);
    std::vector<JordSequence> out;
    JordSequence current{rho, a, std::vector<HalfInt>(static_cast<std::size_t>(k))};
    // a - k is the least element of a + Z exceeding -1.
    const HalfInt lowest = a - k;

    auto rec = [&](auto &&self, std::int64_t i, HalfInt from) -> void {
        if (i == k) {
            out.push_back(current);
            return;
        }
        HalfInt start = from;
        if (conv == JordConvention::strict) {
            start = std::max(start, a - k + (i + 1));
        }
        // Leave room for the k - i - 1 larger entries.
        for (HalfInt x = start; x + (k - i - 1) <= max_b; x += 1) {
            current.b[static_cast<std::size_t>(i)] = x;
            self(self, i + 1, x + 1);
        }
    };
    rec(rec, 0, lowest);
    return out;
}

bool ValidationReport::ok() const
{
    return std::all_of(conditions.begin(), conditions.end(), [](const auto &c) { return c.passed; });
}

std::optional<ConditionResult> ValidationReport::first_failure() const
{
    for (const auto &c : conditions) {
        if (!c.passed) {
            return c;
        }
    }
    return std::nullopt;
}

std::string ValidationReport::to_string() const
{
    std::string out;
    for (const auto &c : conditions) {
        out += c.clause + " " + (c.passed ? "pass" : "FAIL");
        if (!c.message.empty()) {
            out += ": " + c.message;
        }
        out += '\n';
    }
    out += ok() ? "valid\n" : "invalid\n";
    return out;
}

ValidationReport validate_lj(const LJDatum &datum, JordConvention conv)
{
    ConditionResult c1{"(i)", true, {}};
    ConditionResult c2{"(ii)", true, {}};
    ConditionResult c3{"(iii)", true, {}};
    auto fail = [](ConditionResult &c, std::string msg) {
        if (c.passed) {
            c.passed = false;
            c.message = std::move(msg);
        }
    };

    std::set<GLLabel> seen;
    for (const auto &seq : datum.jord) {
        const auto &rho = seq.rho;
        if (!seen.insert(rho).second) {
            fail(c1, "label '" + rho.name() + "' appears more than once");
            continue;
        }
        if (!rho.conj_self_dual()) {
            fail(c1, "label '" + rho.name() + "' is not conjugate self-dual");
        }
        const auto declared = datum.sigma.reducibility_of(rho);
        if (!declared) {
            fail(c1, "no reducibility point declared for '" + rho.name() + "' on '" + datum.sigma.name() + "'");
            continue;
        }
        if (*declared != seq.a) {
            fail(c1, "datum uses a = " + seq.a.to_string() + " for '" + rho.name() + "' but '"
                         + datum.sigma.name() + "' declares " + declared->to_string());
        }
        if (!(*declared > HalfInt(0)) && !seq.b.empty()) {
            fail(c1, "nonempty sequence for '" + rho.name() + "' with reducibility point 0");
        }
        const auto k = ceil(*declared);
        if (static_cast<std::int64_t>(seq.b.size()) != k) {
            fail(c2, "label '" + rho.name() + "': " + std::to_string(seq.b.size()) + " exponents, expected ceil("
                         + declared->to_string() + ") = " + std::to_string(k));
            continue;
        }
        JordSequence normalized{rho, *declared, seq.b};
        if (auto v = normalized.violation(conv); !v.empty()) {
            fail(c3, "label '" + rho.name() + "': " + v);
        }
    }
    return ValidationReport{{c1, c2, c3}};
}

InducingRep build_inducing_rep(const LJDatum &datum, JordConvention conv)
{
    const auto report = validate_lj(datum, conv);
    if (auto f = report.first_failure()) {
        throw InvalidDatum("invalid LJ datum, condition " + f->clause + ": " + f->message);
    }
    InducingRep out{GUClass(datum.sigma), {}, {}};
    std::vector<Segment> all;
    for (const auto &seq : datum.jord) {
        bool nonempty = false;
        for (const auto &s : seq.segments()) {
            if (!s.empty()) {
                all.push_back(s);
                nonempty = true;
            }
        }
        if (nonempty && !datum.sigma.is_twist_fixed(seq.rho)) {
            out.warnings.push_back("omega_" + seq.rho.name() + " " + datum.sigma.name() + " ~ "
                                   + datum.sigma.name() + " is not declared");
        }
    }
    out.ordered_segments = all;
    std::stable_sort(out.ordered_segments.begin(), out.ordered_segments.end(),
                     [](const Segment &x, const Segment &y) {
                         if (auto c = center(x) <=> center(y); c != 0) {
                             return c < 0;
                         }
                         return x < y;
                     });
    out.rep = GUClass(datum.sigma, GLMonomial(std::move(all)));
    return out;
}

bool check_exponent_constraints(std::span<const Segment> segments, HalfInt a)
{
    const auto k = static_cast<std::int64_t>(segments.size());
    if (k > ceil(a)) {
        return false;
    }
    for (std::int64_t i = 0; i < k; ++i) {
        const auto &s = segments[static_cast<std::size_t>(i)];
        if (s.empty() || !(s.rho() == segments[0].rho())) {
            return false;
        }
        if (s.a() != a - k + (i + 1)) {
            return false;
        }
        if (!is_strongly_positive(s)) {
            return false;
        }
        if (i > 0 && !(segments[static_cast<std::size_t>(i - 1)].b() < s.b())) {
            return false;
        }
    }
    return true;
}

std::string NecessaryConditions::to_string() const
{
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    return std::string("conjugate self-dual: ") + yn(conj_self_dual) + "\ntwist-fixed: " + yn(twist_fixed)
           + "\nreducibility declared: " + yn(reducibility_declared) + "\nreducibility positive: "
           + yn(reducibility_positive) + "\nverdict: " + (sp_possible() ? "SP possible" : "SP impossible") + "\n";
}

NecessaryConditions sp_necessary_conditions(const GLLabel &rho, const GULabel &sigma)
{
    NecessaryConditions out;
    out.conj_self_dual = rho.conj_self_dual();
    out.twist_fixed = sigma.is_twist_fixed(rho);
    const auto a = sigma.reducibility_of(rho);
    out.reducibility_declared = a.has_value();
    out.reducibility_positive = a && *a > HalfInt(0);
    return out;
}

TensorTerm leading_term(const InducingRep &ind)
{
    std::vector<GLMonomial> factors;
    factors.reserve(ind.ordered_segments.size());
    for (const auto &s : ind.ordered_segments) {
        factors.push_back(GLMonomial{s});
    }
    return TensorTerm(std::move(factors), GUClass(ind.rep.sigma()));
}

namespace
{

ParabolicShape shape_of(const InducingRep &ind)
{
    ParabolicShape shape;
    for (const auto &s : ind.ordered_segments) {
        shape.blocks.push_back(s.rank());
    }
    return shape;
}

Multiplicity leading_multiplicity_of(const InducingRep &ind, GroupMode mode, Exec exec)
{
    const auto r = jacquet_by_shape(ind.rep, shape_of(ind), mode, exec);
    return r.coefficient(leading_term(ind));
}

} // namespace

Multiplicity leading_term_multiplicity(const LJDatum &datum, GroupMode mode, JordConvention conv, Exec exec)
{
    return leading_multiplicity_of(build_inducing_rep(datum, conv), mode, exec);
}

std::vector<SpEntry> enumerate_sp(std::span<const GLLabel> labels, const GULabel &sigma, HalfInt max_b,
                                  GroupMode mode, JordConvention conv, Exec exec)
{
    std::vector<std::vector<JordSequence>> per_label;
    for (const auto &rho : labels) {
        const auto nec = sp_necessary_conditions(rho, sigma);
        if (!nec.reducibility_declared) {
            throw UndeclaredReducibility("no reducibility point declared for '" + rho.name() + "' on '"
                                         + sigma.name() + "'");
        }
        if (!nec.sp_possible()) {
            throw DomainError("label '" + rho.name() + "' fails the necessary conditions for strong positivity:\n"
                              + nec.to_string());
        }
        per_label.push_back(enumerate_jord(rho, *sigma.reducibility_of(rho), max_b, conv));
    }

    // Lexicographic product, first label varying slowest.
    std::vector<LJDatum> data;
    std::vector<std::size_t> odometer(per_label.size(), 0);
    const bool any_empty = std::any_of(per_label.begin(), per_label.end(), [](const auto &v) { return v.empty(); });
    if (!any_empty) {
        for (;;) {
            LJDatum d{{}, sigma};
            for (std::size_t l = 0; l < per_label.size(); ++l) {
                d.jord.push_back(per_label[l][odometer[l]]);
            }
            data.push_back(std::move(d));
            std::size_t pos = per_label.size();
            while (pos > 0 && ++odometer[pos - 1] == per_label[pos - 1].size()) {
                odometer[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) {
                break;
            }
        }
    }

    std::vector<std::optional<SpEntry>> slots(data.size());
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&](std::size_t i) {
        auto ind = build_inducing_rep(data[i], conv);
        SpDiagnostics diag;
        diag.exponents_ok = true;
        for (const auto &seq : data[i].jord) {
            std::vector<Segment> own;
            for (const auto &s : seq.segments()) {
                if (!s.empty()) {
                    own.push_back(s);
                }
            }
            diag.exponents_ok = diag.exponents_ok && check_exponent_constraints(own, seq.a);
        }
        diag.leading_multiplicity = leading_multiplicity_of(ind, mode, Exec::serial);
        diag.warnings = ind.warnings;
        slots[i] = SpEntry{data[i], std::move(ind), std::move(diag)};
    };
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < data.size(); ++i) {
            work(i);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(data.size()); ++i) {
            try {
                work(static_cast<std::size_t>(i));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        }
        if (error) {
            std::rethrow_exception(error);
        }
    }
    std::vector<SpEntry> out;
    out.reserve(slots.size());
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

} // namespace jacquet
