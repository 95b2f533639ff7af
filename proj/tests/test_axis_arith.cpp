#include "doctest.h"

#include "euclid/axis_arith.hpp"
#include "support/testutil.hpp"

using namespace euclid;
using namespace eutest;

using AA = AxisArith<CB>;

namespace {

AA::Frame F() { return AA::standard_frame(); }

CPt ax(long n, long d = 1) { return CPt{S(n, d), S(0)}; }
CPt axs(const Scalar& s) { return CPt{s, Scalar(0)}; }

Scalar val(const Partial<CPt>& p) {
    REQUIRE(p.defined());
    REQUIRE(p->y.is_zero());
    return p->x;
}

}  // namespace

TEST_CASE("coordinates") {
    auto f = F();
    CHECK(val(AA::coord_x(pt(0, 0), f)).is_zero());
    CHECK(val(AA::coord_y(pt(0, 0), f)).is_zero());
    auto p = pt(3, -2);
    CHECK((val(AA::coord_x(p, f)) - S(3)).is_zero());
    CHECK((val(AA::coord_y(p, f)) - S(-2)).is_zero());
    CHECK(val(AA::coord_y(pt(7, 0), f)).is_zero());
}

TEST_CASE("make_point and the coordinate round trip") {
    auto f = F();
    auto o = AA::make_point(ax(0), ax(0), f);
    REQUIRE(o.defined());
    CHECK(CPlane::point_eq(*o, pt(0, 0)));
    auto p = AA::make_point(ax(3), ax(-2), f);
    REQUIRE(p.defined());
    CHECK(CPlane::point_eq(*p, pt(3, -2)));
    RatGen g(2026);
    for (int i = 0; i < 30; ++i) {
        CPt q = ptq(g(), g());
        auto cx = AA::coord_x(q, f), cy = AA::coord_y(q, f);
        REQUIRE(cx.defined());
        REQUIRE(cy.defined());
        auto back = AA::make_point(*cx, *cy, f);
        REQUIRE(back.defined());
        CHECK(CPlane::point_eq(*back, q));
    }
}

TEST_CASE("geometric addition is exactly field addition") {
    auto f = F();
    CHECK((val(AA::geo_add(ax(0), ax(7, 3), f)) - S(7, 3)).is_zero());
    CHECK((val(AA::geo_add(ax(2), ax(3), f)) - S(5)).is_zero());
    CHECK(val(AA::geo_add(ax(-1), ax(1), f)).is_zero());
    RatGen g(5);
    for (int i = 0; i < 25; ++i) {
        mpq_class a = g(), b = g();
        CHECK((val(AA::geo_add(ax(0) , ax(0), f))).is_zero());
        Scalar got = val(AA::geo_add(axs(Scalar(a)), axs(Scalar(b)), f));
        CHECK((got - Scalar(mpq_class(a + b))).is_zero());
    }
    // surd inputs
    Scalar r2 = *sqrt(Scalar(2));
    Scalar got = val(AA::geo_add(axs(r2), axs(-r2 + Scalar(1)), f));
    CHECK((got - Scalar(1)).is_zero());
}

TEST_CASE("positive and negative parts") {
    auto f = F();
    CHECK((val(AA::abs_val(ax(-3), f)) - S(3)).is_zero());
    CHECK((val(AA::abs_val(ax(3), f)) - S(3)).is_zero());
    CHECK(val(AA::neg_part(ax(5), f)).is_zero());
    CHECK((val(AA::pos_part(ax(5), f)) - S(5)).is_zero());
    CHECK((val(AA::neg_part(ax(-5, 2), f)) - S(5, 2)).is_zero());
    CHECK(val(AA::pos_part(ax(-5, 2), f)).is_zero());
    CHECK(val(AA::pos_part(ax(0), f)).is_zero());
    CHECK(val(AA::neg_part(ax(0), f)).is_zero());
    RatGen g(9);
    for (int i = 0; i < 15; ++i) {
        Scalar a{g()};
        Scalar p = val(AA::pos_part(axs(a), f)), n = val(AA::neg_part(axs(a), f));
        CHECK(p.sign() >= 0);
        CHECK(n.sign() >= 0);
        CHECK((p - n - a).is_zero());
    }
}

TEST_CASE("the two addition definitions agree") {
    auto f = F();
    RatGen g(31);
    for (int i = 0; i < 12; ++i) {
        Scalar a{g()}, b{g()};
        Scalar u = val(AA::geo_add(axs(a), axs(b), f));
        Scalar v = val(AA::geo_add_parts(axs(a), axs(b), f));
        CHECK((u - v).is_zero());
        CHECK((u - (a + b)).is_zero());
    }
}

TEST_CASE("Hilbert multiplication, unsigned") {
    auto f = F();
    CHECK(val(AA::hilbert_mul_unsigned(ax(0), ax(0), f)).is_zero());
    CHECK((val(AA::hilbert_mul_unsigned(ax(2), ax(3), f)) - S(6)).is_zero());
    CHECK((val(AA::hilbert_mul_unsigned(ax(1), ax(1), f)) - S(1)).is_zero());
    // squaring exercises the tangent-circle path
    CHECK((val(AA::hilbert_mul_unsigned(ax(3, 2), ax(3, 2), f)) - S(9, 4)).is_zero());
    CHECK_THROWS_AS(AA::hilbert_mul_unsigned(ax(-1), ax(2), f), contract_error);
}

TEST_CASE("signed multiplication agrees exactly with the field") {
    auto f = F();
    CHECK(val(AA::geo_mul(ax(0), ax(5), f)).is_zero());
    CHECK((val(AA::geo_mul(ax(-2), ax(3), f)) + S(6)).is_zero());
    Scalar r2 = *sqrt(Scalar(2));
    CHECK((val(AA::geo_mul(axs(r2), axs(r2), f)) - S(2)).is_zero());
    RatGen g(17);
    for (int i = 0; i < 10; ++i) {
        Scalar a{g()}, b{g()};
        CHECK((val(AA::geo_mul(axs(a), axs(b), f)) - a * b).is_zero());
    }
    // agreement with the unsigned construction on nonnegative pairs
    for (int i = 0; i < 6; ++i) {
        Scalar a{g(0, 6)}, b{g(0, 6)};
        Scalar u = val(AA::geo_mul(axs(a), axs(b), f));
        Scalar v = val(AA::hilbert_mul_unsigned(axs(a), axs(b), f));
        CHECK((u - v).is_zero());
    }
}

TEST_CASE("geometric reciprocal") {
    auto f = F();
    CHECK((val(AA::geo_reciprocal(ax(1), f)) - S(1)).is_zero());
    CHECK((val(AA::geo_reciprocal(ax(2), f)) - S(1, 2)).is_zero());
    CHECK((val(AA::geo_reciprocal(ax(-4, 3), f)) + S(3, 4)).is_zero());
    CHECK(AA::geo_reciprocal(ax(0), f).reason() == Undef::Zero);
    RatGen g(23);
    for (int i = 0; i < 8; ++i) {
        mpq_class a = g();
        if (a == 0) continue;
        Scalar r = val(AA::geo_reciprocal(axs(Scalar(a)), f));
        CHECK((Scalar(a) * r - Scalar(1)).is_zero());
    }
}

TEST_CASE("geometric square root") {
    auto f = F();
    CHECK(val(AA::geo_square_root(ax(0), f)).is_zero());
    CHECK((val(AA::geo_square_root(ax(4), f)) - S(2)).is_zero());
    CHECK((val(AA::geo_square_root(ax(9, 4), f)) - S(3, 2)).is_zero());
    Scalar z = val(AA::geo_square_root(ax(2), f));
    CHECK((z * z - Scalar(2)).is_zero());
    CHECK(z.sign() > 0);
    CHECK(AA::geo_square_root(ax(-1), f).reason() == Undef::Negative);
    // matches the field sqrt exactly
    RatGen g(29);
    for (int i = 0; i < 6; ++i) {
        mpq_class a = g(0, 8);
        Scalar got = val(AA::geo_square_root(axs(Scalar(a)), f));
        CHECK((got - *sqrt(Scalar(a))).is_zero());
    }
}

TEST_CASE("triangle circumcenter") {
    auto f = F();
    auto e = AA::circumcenter(pt(0, 0), pt(2, 0), pt(1, 1));
    REQUIRE(e.defined());
    CHECK(CPlane::cong(*e, pt(0, 0), *e, pt(2, 0)));
    CHECK(CPlane::cong(*e, pt(2, 0), *e, pt(1, 1)));
    CHECK(CPlane::point_eq(*e, pt(1, 0)));
    CHECK_FALSE(AA::circumcenter(pt(0, 0), pt(1, 0), pt(2, 0)).defined());
    // one-sided with a = b: circle tangent at a
    auto t = AA::circumcenter_one_sided(pt(0, 0), pt(0, 0), pt(0, 2), f.x_axis);
    REQUIRE(t.defined());
    CHECK(CPlane::point_eq(*t, pt(0, 1)));
    CHECK(CPlane::cong(*t, pt(0, 0), *t, pt(0, 2)));
}

TEST_CASE("Pythagoras on possibly degenerate right triangles") {
    auto f = F();
    RatGen g(41);
    for (int i = 0; i < 8; ++i) {
        // legs along perpendicular lines through q, p or r may equal q
        CPt q = ptq(g(), g());
        mpq_class s = g(), u = g();
        CPt p = ptq(q.x.rational_value() + s, q.y.rational_value());
        CPt r = ptq(q.x.rational_value(), q.y.rational_value() + u);
        Scalar pq2 = CPlane::dist2(p, q), qr2 = CPlane::dist2(q, r), pr2 = CPlane::dist2(p, r);
        CHECK((pq2 + qr2 - pr2).is_zero());
    }
}
