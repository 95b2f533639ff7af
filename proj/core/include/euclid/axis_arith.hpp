#ifndef EUCLID_AXIS_ARITH_HPP
#define EUCLID_AXIS_ARITH_HPP

#include "euclid/constructions.hpp"

namespace euclid {

// Geometrization of arithmetic: coordinates, signed addition, Hilbert
// multiplication, reciprocal and Descartes square root, each built from the
// uniform constructions so that the output coincides exactly with the field
// backend's native arithmetic on the x-axis.
template <class B>
struct AxisArith {
    using P = Plane<B>;
    using C = Constructions<B>;
    using S = typename B::S;
    using Pt = typename P::Pt;
    using Ln = typename P::Ln;

    // 0, 1 on the x-axis and I on the y-axis with 0I = 01.
    struct Frame {
        Pt origin, unit, i_point;
        Ln x_axis, y_axis;
    };

    static Frame standard_frame() {
        Pt o = P::point(0, 0), u = P::point(1, 0), i = P::point(0, 1);
        return Frame{o, u, i, Ln{o, u}, Ln{o, i}};
    }

    static void require_on_axis(const Pt& a, const Frame& f, const char* who) {
        if (!P::on_line(a, f.x_axis))
            throw contract_error(std::string(who) + ": point not on the x-axis");
    }

    // ---- coordinates -------------------------------------------------

    // Projection onto the x-axis.
    static Partial<Pt> coord_x(const Pt& p, const Frame& f) {
        return C::project(p, f.x_axis);
    }

    // Projection onto the y-axis, rotated clockwise down to the x-axis.
    static Partial<Pt> coord_y(const Pt& p, const Frame& f) {
        auto yp = C::project(p, f.y_axis);
        if (!yp.defined()) return yp;
        return C::rotate(f.i_point, f.origin, f.unit, *yp);
    }

    // The point with coordinates (x, y): rotate y up to the y-axis, erect the
    // perpendicular U at x, drop the perpendicular from the rotated point.
    static Partial<Pt> make_point(const Pt& x, const Pt& y, const Frame& f) {
        require_on_axis(x, f, "make_point");
        require_on_axis(y, f, "make_point");
        auto z = C::rotate(f.unit, f.origin, f.i_point, y);
        if (!z.defined()) return z;
        auto U = C::perp(x, f.x_axis);
        if (!U.defined()) return Partial<Pt>::undefined(U.reason());
        auto K = C::perp(*z, *U);
        if (!K.defined()) return Partial<Pt>::undefined(K.reason());
        return P::intersect_lines(*K, *U);
    }

    // ---- segment toolkit on the axis ---------------------------------

    // A point strictly right of x: ext(0,1,0,x) = 1 + |x|.
    static Partial<Pt> right_of(const Pt& x, const Frame& f) {
        return P::extend(f.origin, f.unit, f.origin, x);
    }
    static Partial<Pt> left_of(const Pt& x, const Frame& f) {
        auto r = right_of(x, f);
        if (!r.defined()) return r;
        return C::reflect_line(*r, f.y_axis);
    }

    // x - |y| on the axis: extend toward the left from x by |0y|.
    static Partial<Pt> sub_mag(const Pt& x, const Pt& y, const Frame& f) {
        auto r = right_of(x, f);
        if (!r.defined()) return r;
        return P::extend(*r, x, f.origin, y);
    }
    // x + |y|.
    static Partial<Pt> add_mag(const Pt& x, const Pt& y, const Frame& f) {
        auto l = left_of(x, f);
        if (!l.defined()) return l;
        return P::extend(*l, x, f.origin, y);
    }

    // |x| = ext(-1,0,0,x): no square roots, no parallel postulate.
    static Partial<Pt> abs_val(const Pt& x, const Frame& f) {
        require_on_axis(x, f, "abs_val");
        auto minus_one = C::reflect_line(f.unit, f.y_axis);
        if (!minus_one.defined()) return minus_one;
        return P::extend(*minus_one, f.origin, f.origin, x);
    }

    static Partial<Pt> negate(const Pt& x, const Frame& f) {
        return C::reflect_line(x, f.y_axis);
    }

    // Half of the axis segment 0x, by the uniform midpoint on the axis.
    static Partial<Pt> half(const Pt& x, const Frame& f) {
        return C::uniform_midpoint(f.origin, x, f.origin, f.unit);
    }

    // ---- signed addition (rotate-project-rotate) ----------------------

    static Partial<Pt> geo_add(const Pt& A, const Pt& Bp, const Frame& f) {
        require_on_axis(A, f, "geo_add");
        require_on_axis(Bp, f, "geo_add");
        // replace R with a point left of O, A and B: -(|OA| + |OB| + 1)
        auto e1 = P::extend(f.unit, f.origin, f.origin, A);
        if (!e1.defined()) return e1;
        auto e2 = P::extend(f.unit, *e1, f.origin, Bp);
        if (!e2.defined()) return e2;
        auto R = P::extend(f.unit, *e2, f.origin, f.unit);
        if (!R.defined()) return R;
        // C on the perpendicular at O with R-O-C a right turn: the frame's I
        auto H = C::perp(Bp, f.x_axis);
        if (!H.defined()) return Partial<Pt>::undefined(H.reason());
        auto D = C::project(f.i_point, *H);
        if (!D.defined()) return D;
        auto U = C::rotate(*R, f.origin, f.i_point, A);
        if (!U.defined()) return U;
        auto V = C::project(*U, *H);
        if (!V.defined()) return V;
        return C::rotate(*D, Bp, *R, *V);
    }

    // ---- positive and negative parts ----------------------------------

    // negPart(a) >= 0 with a = posPart(a) - negPart(a); built from the
    // extension-based |a| and the uniform midpoint, no square roots.
    static Partial<Pt> neg_part(const Pt& a, const Frame& f) {
        auto av = abs_val(a, f);
        if (!av.defined()) return av;
        auto diff = sub_mag(a, *av, f);  // a - |a| <= 0
        if (!diff.defined()) return diff;
        auto h = half(*diff, f);
        if (!h.defined()) return h;
        return negate(*h, f);
    }
    static Partial<Pt> pos_part(const Pt& a, const Frame& f) {
        auto na = negate(a, f);
        if (!na.defined()) return na;
        auto np = neg_part(*na, f);
        if (!np.defined()) return np;
        return np;  // posPart(a) = negPart(-a)
    }

    // Hartshorne-style addition via positive/negative parts; equal to
    // geo_add, kept as the paper's alternative definition.
    static Partial<Pt> geo_add_parts(const Pt& a, const Pt& b, const Frame& f) {
        auto ap = pos_part(a, f), bp = pos_part(b, f);
        auto an = neg_part(a, f), bn = neg_part(b, f);
        for (auto* v : {&ap, &bp, &an, &bn})
            if (!v->defined()) return *v;
        auto pos = add_mag(*ap, *bp, f);
        if (!pos.defined()) return pos;
        auto negs = add_mag(*an, *bn, f);
        if (!negs.defined()) return negs;
        return sub_mag(*pos, *negs, f);
    }

    // ---- multiplication ------------------------------------------------

    // One-sided triangle circumscription: the center equidistant from a, b on
    // the axis-like line L and c off it; tangent circle when a = b.
    static Partial<Pt> circumcenter_one_sided(const Pt& a, const Pt& b, const Pt& c,
                                              const Ln& L) {
        if (!P::on_line(a, L) || !P::on_line(b, L) || P::on_line(c, L))
            throw contract_error("circumcenter_one_sided: bad configuration");
        auto x = C::uniform_midpoint(a, b, L.a, L.b);
        if (!x.defined()) return x;
        auto K = C::perp(*x, L);
        if (!K.defined()) return Partial<Pt>::undefined(K.reason());
        auto m = C::midpoint(a, c);  // a != c since c is off L
        if (!m.defined()) return m;
        auto ac = P::line(a, c);
        if (!ac.defined()) return Partial<Pt>::undefined(ac.reason());
        auto M = C::perp(*m, *ac);
        if (!M.defined()) return Partial<Pt>::undefined(M.reason());
        return P::intersect_lines(*M, *K);
    }

    // General circumcenter of three pairwise-distinct points; undefined when
    // collinear.
    static Partial<Pt> circumcenter(const Pt& a, const Pt& b, const Pt& c) {
        if (P::point_eq(a, b) || P::point_eq(b, c) || P::point_eq(a, c))
            throw contract_error("circumcenter: points must be pairwise distinct");
        if (P::collinear(a, b, c))
            return Partial<Pt>::undefined(Undef::Parallel);
        auto mab = C::midpoint(a, b), mbc = C::midpoint(b, c);
        if (!mab.defined()) return mab;
        if (!mbc.defined()) return mbc;
        auto lab = P::line(a, b), lbc = P::line(b, c);
        auto pab = C::perp(*mab, *lab), pbc = C::perp(*mbc, *lbc);
        if (!pab.defined()) return Partial<Pt>::undefined(pab.reason());
        if (!pbc.defined()) return Partial<Pt>::undefined(pbc.reason());
        return P::intersect_lines(*pab, *pbc);
    }

    // Hilbert multiplication for nonnegative arguments: circle through I, a,
    // b (tangent when a = b), other y-axis intersection, rotated back down.
    static Partial<Pt> hilbert_mul_unsigned(const Pt& a, const Pt& b, const Frame& f) {
        require_on_axis(a, f, "hilbert_mul_unsigned");
        require_on_axis(b, f, "hilbert_mul_unsigned");
        if (B::sign(axis_value(a, f)) < 0 || B::sign(axis_value(b, f)) < 0)
            throw contract_error("hilbert_mul_unsigned: negative input");
        auto e = circumcenter_one_sided(a, b, f.i_point, f.x_axis);
        if (!e.defined()) return e;
        auto circ = P::circle(*e, a);
        auto d = C::other(f.i_point, f.y_axis, circ);
        if (!d.defined()) return d;
        return C::rotate(f.i_point, f.origin, f.unit, *d);
    }

    // Signed product via positive and negative parts:
    // (a+b+ + a-b-) - (a-b+ + a+b-).
    static Partial<Pt> geo_mul(const Pt& a, const Pt& b, const Frame& f) {
        auto ap = pos_part(a, f), an = neg_part(a, f);
        auto bp = pos_part(b, f), bn = neg_part(b, f);
        for (auto* v : {&ap, &an, &bp, &bn})
            if (!v->defined()) return *v;
        auto pp = hilbert_mul_unsigned(*ap, *bp, f);
        auto nn = hilbert_mul_unsigned(*an, *bn, f);
        auto np = hilbert_mul_unsigned(*an, *bp, f);
        auto pn = hilbert_mul_unsigned(*ap, *bn, f);
        for (auto* v : {&pp, &nn, &np, &pn})
            if (!v->defined()) return *v;
        auto plus = add_mag(*pp, *nn, f);
        if (!plus.defined()) return plus;
        auto minus = add_mag(*np, *pn, f);
        if (!minus.defined()) return minus;
        return sub_mag(*plus, *minus, f);
    }

    // Reciprocal: the tangent-circle script.  Undefined(zero) at 0; on the
    // bounded backend an infinitesimal input reports out-of-ring, the
    // geometric face of the EF1 failure.
    static Partial<Pt> geo_reciprocal(const Pt& a, const Frame& f) {
        require_on_axis(a, f, "geo_reciprocal");
        if (B::sign(axis_value(a, f)) == 0)
            return Partial<Pt>::undefined(Undef::Zero);
        auto H = C::perp(f.i_point, f.y_axis);
        if (!H.defined()) return Partial<Pt>::undefined(H.reason());
        auto M = P::line(a, f.i_point);
        if (!M.defined()) return Partial<Pt>::undefined(M.reason());
        auto m = C::midpoint(a, f.i_point);
        if (!m.defined()) return m;
        auto J = C::perp(*m, *M);
        if (!J.defined()) return Partial<Pt>::undefined(J.reason());
        auto e = P::intersect_lines(*H, *J);
        if (!e.defined()) return e;
        auto circ = P::circle(*e, a);
        return C::other(a, f.x_axis, circ);
    }

    // Descartes square root, uniformly at 0; undefined(negative) for G < 0.
    static Partial<Pt> geo_square_root(const Pt& G, const Frame& f) {
        require_on_axis(G, f, "geo_square_root");
        if (B::sign(axis_value(G, f)) < 0)
            return Partial<Pt>::undefined(Undef::Negative);
        auto F = geo_add(G, f.unit, f);
        if (!F.defined()) return F;
        auto K = C::midpoint(*F, f.origin);
        if (!K.defined()) return K;
        auto circ = P::circle(*K, *F);
        auto axis_line = P::line(f.origin, *F);
        if (!axis_line.defined()) return Partial<Pt>::undefined(axis_line.reason());
        auto L = C::perp(G, *axis_line);
        if (!L.defined()) return Partial<Pt>::undefined(L.reason());
        auto I2 = P::intersect_line_circle_1(*L, circ);
        if (!I2.defined()) return I2;
        auto U = P::intersect_line_circle_1(*L, P::circle(G, *F));
        if (!U.defined()) return U;
        auto R = C::rotate(*U, G, *F, *I2);
        if (!R.defined()) return R;
        auto W = P::line(f.unit, f.origin);
        auto minus_one = P::intersect_line_circle_2(*W, P::circle(f.origin, f.unit));
        if (!minus_one.defined()) return minus_one;
        return P::extend(*minus_one, f.origin, G, *R);
    }

    // Scalar coordinate of an axis point (bridge used by checks and tests).
    static S axis_value(const Pt& a, const Frame& f) {
        (void)f;
        return a.x;
    }
    static Pt axis_point(const S& v, const Frame& f) {
        (void)f;
        return Pt{v, B::from_rational(0)};
    }
};

}  // namespace euclid

#endif
