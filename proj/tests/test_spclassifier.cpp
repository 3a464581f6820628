#include <doctest.h>

#include <set>

#include <jacquet/errors.hpp>
#include <jacquet/spclassifier.hpp>
#include <jacquet/structure.hpp>

#include "oracles/jord_brute.hpp"
#include "support.hpp"

using namespace jt;

namespace
{

std::vector<std::vector<HalfInt>> bs(const std::vector<JordSequence> &seqs)
{
    std::vector<std::vector<HalfInt>> out;
    for (const auto &s : seqs) {
        out.push_back(s.b);
    }
    return out;
}

std::vector<HalfInt> ints(std::initializer_list<const char *> xs)
{
    std::vector<HalfInt> out;
    for (auto x : xs) {
        out.push_back(h(x));
    }
    return out;
}

struct SpZoo {
    LabelRegistry reg;
    GLLabel rho = reg.declare_gl("rho", 1, true);
    GLLabel pi = reg.declare_gl("pi", 2, true);
    GLLabel tau = reg.declare_gl("tau", 1, false);
    GLLabel loose = reg.declare_gl("loose", 1, true);
    GULabel sigma = reg.declare_gu("sigma", 1,
                                   {{rho, 2}, {pi, HalfInt::from_twice(1)}, {tau, 1}, {loose, 1}}, {rho, pi, tau});

    GULabel with_a(HalfInt a, const GLLabel &l)
    {
        return reg.declare_gu("s_" + l.name() + "_" + std::to_string(a.twice()), 0, {{l, a}}, {l});
    }
};

} // namespace

TEST_CASE("enumerate_jord: examples")
{
    SpZoo z;
    const auto six = enumerate_jord(z.rho, 2, 3);
    CHECK(bs(six)
          == std::vector<std::vector<HalfInt>>{ints({"0", "1"}), ints({"0", "2"}), ints({"0", "3"}),
                                               ints({"1", "2"}), ints({"1", "3"}), ints({"2", "3"})});
    const auto four = enumerate_jord(z.rho, h("1/2"), h("5/2"));
    CHECK(bs(four)
          == std::vector<std::vector<HalfInt>>{ints({"-1/2"}), ints({"1/2"}), ints({"3/2"}), ints({"5/2"})});
    const auto zero = enumerate_jord(z.rho, 0, 3);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].b.empty());
    CHECK(enumerate_jord(z.rho, 2, 3, JordConvention::strict).size() == 3);
    CHECK(enumerate_jord(z.rho, h("1/2"), h("5/2"), JordConvention::strict).size() == 3);
    CHECK_THROWS_AS(enumerate_jord(z.rho, -1, 3), DomainError);
    CHECK_THROWS_AS(enumerate_jord(z.rho, 2, 1), DomainError);
}

TEST_CASE("enumerate_jord: matches the brute-force filter")
{
    SpZoo z;
    for (int ta = 0; ta <= 7; ++ta) {
        const HalfInt a = HalfInt::from_twice(ta);
        for (int extra = 0; extra <= 6; ++extra) {
            const HalfInt max_b = a + HalfInt::from_twice(extra);
            for (auto conv : {JordConvention::permissive, JordConvention::strict}) {
                const auto seqs = enumerate_jord(z.rho, a, max_b, conv);
                CHECK(bs(seqs) == oracle::jord_brute(a, max_b, conv == JordConvention::strict));
                for (const auto &s : seqs) {
                    CHECK(s.violation(conv).empty());
                    // Permissive lower bound b_i >= a - k + i - 1.
                    for (std::size_t i = 0; i < s.b.size(); ++i) {
                        CHECK(s.b[i] >= a - s.k() + static_cast<std::int64_t>(i));
                    }
                }
            }
        }
    }
}

TEST_CASE("jord sequence: violations")
{
    SpZoo z;
    CHECK(JordSequence{z.rho, 2, ints({"1", "1"})}.violation() != "");
    CHECK(JordSequence{z.rho, 2, ints({"-1", "1"})}.violation() != "");
    CHECK(JordSequence{z.rho, 2, ints({"1/2", "1"})}.violation() != "");
    CHECK(JordSequence{z.rho, 2, ints({"1"})}.violation() != "");
    CHECK(JordSequence{z.rho, 2, ints({"0", "1"})}.violation().empty());
    CHECK(JordSequence{z.rho, 2, ints({"0", "1"})}.violation(JordConvention::strict) != "");
    const auto segs = JordSequence{z.rho, 2, ints({"0", "3"})}.segments();
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].empty());
    CHECK(segs[1] == Segment(z.rho, 2, 3));
}

TEST_CASE("validate_lj: clauses")
{
    SpZoo z;
    const LJDatum good{{{z.rho, 2, ints({"1", "2"})}}, z.sigma};
    CHECK(validate_lj(good).ok());
    const LJDatum dup{{{z.rho, 2, ints({"1", "2"})}, {z.rho, 2, ints({"0", "2"})}}, z.sigma};
    CHECK(validate_lj(dup).first_failure()->clause == "(i)");
    const LJDatum not_csd{{{z.tau, 1, ints({"1"})}}, z.sigma};
    CHECK(validate_lj(not_csd).first_failure()->clause == "(i)");
    const LJDatum wrong_a{{{z.rho, 1, ints({"1"})}}, z.sigma};
    CHECK(validate_lj(wrong_a).first_failure()->clause == "(i)");
    GLLabel undeclared = z.reg.declare_gl("undeclared", 1, true);
    CHECK(validate_lj(LJDatum{{{undeclared, 1, ints({"1"})}}, z.sigma}).first_failure()->clause == "(i)");
    const LJDatum short_seq{{{z.rho, 2, ints({"1"})}}, z.sigma};
    CHECK(validate_lj(short_seq).first_failure()->clause == "(ii)");
    const LJDatum decreasing{{{z.rho, 2, ints({"2", "1"})}}, z.sigma};
    const auto rep = validate_lj(decreasing);
    CHECK(rep.first_failure()->clause == "(iii)");
    CHECK(rep.to_string().find("(iii) FAIL") != std::string::npos);
    CHECK(validate_lj(LJDatum{{}, z.sigma}).ok());
}

TEST_CASE("build_inducing_rep: examples")
{
    SpZoo z;
    const auto ind = build_inducing_rep({{{z.rho, 2, ints({"1", "2"})}}, z.sigma});
    CHECK(ind.rep == GUClass(z.sigma, GLMonomial{Segment(z.rho, 1, 1), Segment(z.rho, 2, 2)}));
    CHECK(ind.warnings.empty());
    const auto first_empty = build_inducing_rep({{{z.rho, 2, ints({"0", "3"})}}, z.sigma});
    CHECK(first_empty.rep == GUClass(z.sigma, GLMonomial{Segment(z.rho, 2, 3)}));
    CHECK(build_inducing_rep({{}, z.sigma}).rep == GUClass(z.sigma));
    const auto warned = build_inducing_rep({{{z.loose, 1, ints({"1"})}}, z.sigma});
    CHECK(warned.warnings.size() == 1);
    CHECK_THROWS_AS(build_inducing_rep({{{z.rho, 2, ints({"2", "1"})}}, z.sigma}), InvalidDatum);
    // Two labels: ordering by center, then canonical order.
    const auto two = build_inducing_rep({{{z.rho, 2, ints({"1", "3"})}, {z.pi, h("1/2"), ints({"3/2"})}}, z.sigma});
    REQUIRE(two.ordered_segments.size() == 3);
    // [1,1]@rho and [1/2,3/2]@pi share center 1; pi sorts first by name.
    CHECK(two.ordered_segments[0] == Segment(z.pi, h("1/2"), h("3/2")));
    CHECK(two.ordered_segments[1] == Segment(z.rho, 1, 1));
    CHECK(two.ordered_segments[2] == Segment(z.rho, 2, 3));
}

TEST_CASE("check_exponent_constraints: examples")
{
    SpZoo z;
    const Segment s11(z.rho, 1, 1), s22(z.rho, 2, 2), s13(z.rho, 1, 3);
    CHECK(check_exponent_constraints(std::vector<Segment>{s11, s22}, 2));
    CHECK(!check_exponent_constraints(std::vector<Segment>{s13, s22}, 2));
    CHECK(!check_exponent_constraints(std::vector<Segment>{Segment(z.rho, 0, 0), s11, s22}, 2));
    CHECK(check_exponent_constraints(std::vector<Segment>{Segment(z.rho, 2, 5)}, 2));
    CHECK(!check_exponent_constraints(std::vector<Segment>{Segment(z.rho, 1, 5)}, 2));
    CHECK(!check_exponent_constraints(std::vector<Segment>{s11, Segment(z.pi, 2, 2)}, 2));
    CHECK(check_exponent_constraints(std::vector<Segment>{}, 2));
}

TEST_CASE("sp_necessary_conditions: examples")
{
    SpZoo z;
    const auto both = sp_necessary_conditions(z.rho, z.sigma);
    CHECK(both.conj_self_dual);
    CHECK(both.twist_fixed);
    CHECK(both.sp_possible());
    const auto nsd = sp_necessary_conditions(z.tau, z.sigma);
    CHECK(!nsd.conj_self_dual);
    CHECK(!nsd.sp_possible());
    CHECK(nsd.to_string().find("SP impossible") != std::string::npos);
    const auto nfix = sp_necessary_conditions(z.loose, z.sigma);
    CHECK(!nfix.twist_fixed);
    CHECK(!nfix.sp_possible());
    const auto undeclared = sp_necessary_conditions(z.reg.declare_gl("u", 1, true), z.sigma);
    CHECK(!undeclared.reducibility_declared);
}

TEST_CASE("leading_term_multiplicity: examples")
{
    SpZoo z;
    CHECK(leading_term_multiplicity({{{z.rho, 2, ints({"1", "2"})}}, z.sigma}, GroupMode::GU) == 1);
    CHECK(leading_term_multiplicity({{}, z.sigma}, GroupMode::GU) == 1);
    const GULabel s2 = z.reg.declare_gu("s2", 0, {{z.pi, 2}}, {z.pi});
    CHECK(leading_term_multiplicity({{{z.pi, 2, ints({"1", "2"})}}, s2}, GroupMode::GU) == 1);
    // Start exponents off the prescribed ones never reach the engine.
    CHECK_THROWS_AS(leading_term_multiplicity({{{z.rho, 2, ints({"1", "1"})}}, z.sigma}, GroupMode::GU),
                    InvalidDatum);
}

TEST_CASE("enumerate_sp: examples and errors")
{
    SpZoo z;
    const GULabel s = z.with_a(2, z.rho);
    const std::vector<GLLabel> one{z.rho};
    const auto six = enumerate_sp(one, s, 3, GroupMode::GU);
    CHECK(six.size() == 6);
    for (const auto &e : six) {
        CHECK(e.diagnostics.leading_multiplicity == 1);
        CHECK(e.diagnostics.exponents_ok);
        CHECK(e.diagnostics.warnings.empty());
    }
    const GULabel s_two = z.reg.declare_gu("two", 0, {{z.rho, h("1/2")}, {z.pi, 1}}, {z.rho, z.pi});
    const std::vector<GLLabel> two{z.rho, z.pi};
    const auto prod = enumerate_sp(two, s_two, 2, GroupMode::GU);
    CHECK(prod.size() == enumerate_jord(z.rho, h("1/2"), 2).size() * enumerate_jord(z.pi, 1, 2).size());
    // First label varies slowest.
    CHECK(prod[0].datum.jord[0].b == prod[1].datum.jord[0].b);
    const auto none = enumerate_sp(std::vector<GLLabel>{}, s, 3, GroupMode::GU);
    REQUIRE(none.size() == 1);
    CHECK(none[0].inducing.rep == GUClass(s));
    CHECK(none[0].diagnostics.leading_multiplicity == 1);
    CHECK_THROWS_AS(enumerate_sp(std::vector<GLLabel>{z.pi}, s, 3, GroupMode::GU), UndeclaredReducibility);
    CHECK_THROWS_AS(enumerate_sp(std::vector<GLLabel>{z.loose}, z.sigma, 3, GroupMode::GU), DomainError);
    CHECK_THROWS_AS(enumerate_sp(std::vector<GLLabel>{z.tau}, z.sigma, 3, GroupMode::GU), DomainError);
}

TEST_CASE("enumerate_sp: deterministic under the parallel schedule")
{
    SpZoo z;
    const GULabel s_two = z.reg.declare_gu("two", 0, {{z.rho, h("3/2")}, {z.pi, 1}}, {z.rho, z.pi});
    const std::vector<GLLabel> two{z.rho, z.pi};
    const auto par = enumerate_sp(two, s_two, 3, GroupMode::GU, JordConvention::permissive, Exec::parallel);
    const auto ser = enumerate_sp(two, s_two, 3, GroupMode::GU, JordConvention::permissive, Exec::serial);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].datum == ser[i].datum);
        CHECK(par[i].inducing.rep == ser[i].inducing.rep);
        CHECK(par[i].diagnostics.leading_multiplicity == ser[i].diagnostics.leading_multiplicity);
    }
}

namespace
{

// Cuspidal leading term: segments in center order, each read from its top
// exponent down.
TensorTerm cuspidal_leading_term(const InducingRep &ind)
{
    std::vector<GLMonomial> f;
    for (const auto &s : ind.ordered_segments) {
        for (HalfInt x = s.b(); x >= s.a(); x = x - 1) {
            f.push_back(GLMonomial{Segment(s.rho(), x, x)});
        }
    }
    return TensorTerm(std::move(f), GUClass(ind.rep.sigma()));
}

} // namespace

TEST_CASE("full cuspidal Jacquet modules of inducing representations")
{
    SpZoo z;
    for (int ta : {1, 2, 3, 4}) {
        const HalfInt a = HalfInt::from_twice(ta);
        for (const GLLabel &rho : {z.rho, z.pi}) {
            const GULabel s = z.with_a(a, rho);
            const std::vector<GLLabel> one{rho};
            for (const auto &e : enumerate_sp(one, s, 3, GroupMode::GU)) {
                ParabolicShape cusp;
                std::multiset<HalfInt> support;
                for (const auto &seg : e.inducing.ordered_segments) {
                    for (HalfInt x = seg.a(); x <= seg.b(); x = x + 1) {
                        cusp.blocks.push_back(rho.dim());
                        support.insert(x);
                    }
                }
                const TensorSum r = jacquet_by_shape(e.inducing.rep, cusp, GroupMode::GU);
                TensorSum positive;
                for (const auto &[t, m] : r) {
                    // Unique partial cuspidal support.
                    CHECK(t.gu()->gl().is_one());
                    CHECK(t.gu()->sigma() == s);
                    std::multiset<HalfInt> exps;
                    bool pos = true;
                    for (const auto &f : t.gl()) {
                        const HalfInt x = f.segments().at(0).a();
                        exps.insert(x);
                        pos = pos && x > HalfInt(0);
                    }
                    if (pos && exps == support) {
                        positive.add(t, m);
                    }
                }
                CHECK(positive.coefficient(cuspidal_leading_term(e.inducing)) == 1);
            }
        }
    }
}
