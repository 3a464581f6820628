#include <doctest.h>

#include <jacquet/errors.hpp>
#include <jacquet/segment.hpp>

#include "support.hpp"

using namespace jt;

TEST_CASE("segment: construction and text form")
{
    Zoo z;
    const Segment s(z.rho, h("1/2"), h("5/2"));
    CHECK(s.length() == 3);
    CHECK(s.rank() == 3);
    CHECK(s.to_string() == "d(1/2,5/2@rho)");
    CHECK(Segment(z.pi, 1, 2).rank() == 4);
    const Segment e = Segment::empty_at(z.rho, 3);
    CHECK(e.empty());
    CHECK(e.length() == 0);
    CHECK(e.to_string() == "1");
    CHECK_THROWS_AS(Segment(z.rho, 2, 0), InvalidSegment);
    CHECK_THROWS_AS(Segment(z.rho, 1, h("3/2")), InvalidSegment);
}

TEST_CASE("segment: dual")
{
    Zoo z;
    CHECK(dual(Segment(z.rho, 1, 2)) == Segment(z.rho, -2, -1));
    const Segment e = Segment::empty_at(z.rho, 2);
    CHECK(dual(e).empty());
    CHECK(dual(e) == Segment(z.rho, -1, -2));
    const Segment t(z.tau, h("-1/2"), h("3/2"));
    CHECK(dual(t).rho().name() == "tau~");
    CHECK(dual(dual(t)) == t);
}

TEST_CASE("segment: center and strong positivity")
{
    Zoo z;
    CHECK(center(Segment(z.rho, h("1/2"), h("5/2"))) == h("3/2"));
    CHECK(center(Segment(z.rho, h("7/2"), h("7/2"))) == h("7/2"));
    CHECK(center(Segment(z.rho, 1, 2)) == h("3/2"));
    CHECK_THROWS_AS(center(Segment::empty_at(z.rho, 1)), EmptySegment);
    CHECK(is_strongly_positive(Segment(z.rho, h("1/2"), h("3/2"))));
    CHECK(!is_strongly_positive(Segment(z.rho, 0, 2)));
    CHECK(!is_strongly_positive(Segment(z.rho, -1, 1)));
    CHECK_THROWS_AS(is_strongly_positive(Segment::empty_at(z.rho, 1)), EmptySegment);
    CHECK(exponent_sum(Segment(z.rho, h("1/2"), h("5/2"))) == h("9/2"));
    CHECK(exponent_sum(Segment::empty_at(z.rho, 1)) == HalfInt(0));
}

TEST_CASE("segment: dual laws on random segments")
{
    Zoo z;
    Gen g(3);
    const auto labels = z.labels();
    for (int it = 0; it < 2000; ++it) {
        const Segment s = g.uniform(0, 9) == 0 ? Segment::empty_at(z.tau, g.halfint(-6, 6)) : g.segment(labels, 5);
        CHECK(dual(dual(s)) == s);
        CHECK(dual(s).length() == s.length());
        if (!s.empty()) {
            CHECK(center(dual(s)) == -center(s));
            CHECK(exponent_sum(dual(s)) == -exponent_sum(s));
        }
    }
}
