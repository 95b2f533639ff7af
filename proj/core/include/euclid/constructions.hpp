#ifndef EUCLID_CONSTRUCTIONS_HPP
#define EUCLID_CONSTRUCTIONS_HPP

#include "euclid/geometry.hpp"

namespace euclid {

// Uniform (case-distinction-free) constructions over a field backend.  Each
// returns a Partial: on the constructible backend every operation below is
// total on its contract domain; on the bounded backend a line intersection
// inside a construction may honestly report out-of-ring.
template <class B>
struct Constructions {
    using P = Plane<B>;
    using S = typename B::S;
    using Pt = typename P::Pt;
    using Ln = typename P::Ln;
    using Ci = typename P::Ci;

    // Classical midpoint of a non-null segment via the two-circle script;
    // undefined iff a = b (the circles coincide).
    static Partial<Pt> midpoint(const Pt& a, const Pt& b) {
        Ci C = P::circle(a, b), K = P::circle(b, a);
        auto pq = P::intersect_circles(C, K);
        if (!pq.defined()) return Partial<Pt>::undefined(pq.reason());
        auto L = P::line(pq->first, pq->second);
        if (!L.defined()) return Partial<Pt>::undefined(L.reason());
        auto J = P::line(a, b);
        if (!J.defined()) return Partial<Pt>::undefined(J.reason());
        return P::intersect_lines(*L, *J);
    }

    // Uniform perpendicular to L through x, whether or not x is on L.
    // Follows the circle script: a chord pq of a circle around x wide enough
    // to meet L twice, then the perpendicular bisector of pq.
    //
    // The returned line is re-anchored on the chord midpoint and the exact
    // ccw-normal of L, which is the same directed line the script's
    // Line(d,e) denotes: d is the circle-circle component on the clockwise
    // side of L, e the counterclockwise one.  Anchoring on canonical points
    // keeps downstream towers shallow; the script still runs in full, so its
    // definedness behaves exactly as stated.
    static Partial<Ln> perp(const Pt& x, const Ln& L) {
        const Pt &a = L.a, &b = L.b;
        Ci Q = P::circle3(b, x, a);
        auto c = P::intersect_line_circle_2(L, Q);
        if (!c.defined()) return Partial<Ln>::undefined(c.reason());
        Ci C = P::circle3(x, a, *c);
        auto pq = P::intersect_line_circle(L, C);
        if (!pq.defined()) return Partial<Ln>::undefined(pq.reason());
        const Pt &p = pq->first, &q = pq->second;
        Ci K = P::circle(p, q), R = P::circle(q, p);
        auto de = P::intersect_circles(K, R);
        if (!de.defined()) return Partial<Ln>::undefined(de.reason());
        S half = B::from_rational(mpq_class(1, 2));
        Pt mid{(p.x + q.x) * half, (p.y + q.y) * half};
        Pt n{L.a.y - L.b.y, L.b.x - L.a.x};  // ccw normal, the e-d direction
        return P::line(mid, P::add(mid, n));
    }

    // Foot of the uniform perpendicular; equals p when p is on L.
    static Partial<Pt> project(const Pt& p, const Ln& L) {
        auto K = perp(p, L);
        if (!K.defined()) return Partial<Pt>::undefined(K.reason());
        return P::intersect_lines(*K, L);
    }

    // Para(p,L) = Perp(p,Perp(p,L)): through p; parallel to L off the line,
    // extensionally equal to L on it.
    static Partial<Ln> para(const Pt& p, const Ln& L) {
        auto K = perp(p, L);
        if (!K.defined()) return Partial<Ln>::undefined(K.reason());
        return perp(p, *K);
    }

    // Uniform midpoint of a possibly-null segment ab restricted to Line(p,q):
    // widen symmetrically by |pq| + |ab| on both sides, then bisect.
    static Partial<Pt> uniform_midpoint(const Pt& a, const Pt& b, const Pt& p,
                                        const Pt& q) {
        auto Lp = P::line(p, q);
        if (!Lp.defined()) return Partial<Pt>::undefined(Lp.reason());
        const Ln& L = *Lp;
        if (!P::on_line(a, L) || !P::on_line(b, L))
            throw contract_error("uniform_midpoint: endpoint off the line");
        auto u = P::intersect_line_circle_2(L, P::circle3(b, p, q));
        if (!u.defined()) return Partial<Pt>::undefined(u.reason());
        auto Bp = P::intersect_line_circle_2(L, P::circle3(*u, a, b));
        if (!Bp.defined()) return Partial<Pt>::undefined(Bp.reason());
        auto v = P::intersect_line_circle_1(L, P::circle3(a, p, q));
        if (!v.defined()) return Partial<Pt>::undefined(v.reason());
        auto Ap = P::intersect_line_circle_1(L, P::circle3(*v, a, b));
        if (!Ap.defined()) return Partial<Pt>::undefined(Ap.reason());
        return midpoint(*Ap, *Bp);
    }

    // Bisector of the non-degenerate angle poq (Euclid I.9 with the apex
    // chosen on the opposite side of the chord from the vertex).  The apex
    // lies on the ray from the vertex through the isoceles chord midpoint,
    // so the midpoint anchors the same directed line with shallow values.
    static Partial<Ln> angle_bisector(const Pt& p, const Pt& o, const Pt& q) {
        if (P::collinear(p, o, q))
            throw contract_error("angle_bisector: degenerate frame");
        const Pt& d = p;
        auto e = P::intersect_line_circle_2(Ln{o, q}, P::circle(o, p));
        if (!e.defined()) return Partial<Ln>::undefined(e.reason());
        S half = B::from_rational(mpq_class(1, 2));
        Pt mid{(d.x + e->x) * half, (d.y + e->y) * half};
        return P::line(o, mid);
    }

    // Uniform rotation: for a on Line(o,p), the image of a under reflection
    // across the bisector of angle poq; lands on Line(o,q) with oz = oa, and
    // z = o exactly when a = o.  Contract: p != o, q != o, frame not
    // collinear, a on Line(o,p).
    static Partial<Pt> rotate(const Pt& p, const Pt& o, const Pt& q, const Pt& a) {
        if (P::point_eq(p, o) || P::point_eq(q, o))
            throw contract_error("rotate: degenerate frame");
        if (P::collinear(p, o, q))
            throw contract_error("rotate: collinear frame");
        Ln op{o, p};
        if (!P::on_line(a, op)) throw contract_error("rotate: a not on Line(o,p)");
        auto bis = angle_bisector(p, o, q);
        if (!bis.defined()) return Partial<Pt>::undefined(bis.reason());
        auto K = perp(a, op);
        if (!K.defined()) return Partial<Pt>::undefined(K.reason());
        auto e = P::intersect_lines(*K, *bis);
        if (!e.defined()) return Partial<Pt>::undefined(e.reason());
        return project(*e, Ln{o, q});
    }

    // Uniform reflection of x in L: two successive quarter-turn rotations
    // about the foot of the perpendicular.  Fixed points are exactly L.
    static Partial<Pt> reflect_line(const Pt& x, const Ln& L) {
        auto Kp = perp(x, L);
        if (!Kp.defined()) return Partial<Pt>::undefined(Kp.reason());
        const Ln& K = *Kp;
        auto ep = P::intersect_lines(K, L);
        if (!ep.defined()) return Partial<Pt>::undefined(ep.reason());
        const Pt& e = *ep;
        Pt u = P::point_eq(K.a, e) ? K.b : K.a;
        Pt w = P::point_eq(L.a, e) ? L.b : L.a;
        auto u2 = P::extend(u, e, u, e);  // the point opposite u through e
        if (!u2.defined()) return Partial<Pt>::undefined(u2.reason());
        auto z1 = rotate(u, e, w, x);
        if (!z1.defined()) return Partial<Pt>::undefined(z1.reason());
        return rotate(w, e, *u2, *z1);
    }

    // Uniform reflection of x in the point p (no case split on x = p):
    // negate both coordinates in a frame centered at p.  Any line through p
    // serves as the frame axis; one parallel to the base axis keeps the
    // radical tower shallow.
    static Partial<Pt> reflect_point(const Pt& x, const Pt& p) {
        auto base = P::line(P::point(0, 0), P::point(1, 0));
        auto Lp = para(p, *base);
        if (!Lp.defined()) return Partial<Pt>::undefined(Lp.reason());
        const Ln& L = *Lp;
        auto Mp = perp(p, L);
        if (!Mp.defined()) return Partial<Pt>::undefined(Mp.reason());
        const Ln& M = *Mp;
        auto xl = project(x, L);
        auto xm = project(x, M);
        if (!xl.defined()) return Partial<Pt>::undefined(xl.reason());
        if (!xm.defined()) return Partial<Pt>::undefined(xm.reason());
        auto rl = reflect_line(*xl, M);
        auto rm = reflect_line(*xm, L);
        if (!rl.defined()) return Partial<Pt>::undefined(rl.reason());
        if (!rm.defined()) return Partial<Pt>::undefined(rm.reason());
        auto U = perp(*rl, L);
        auto V = perp(*rm, M);
        if (!U.defined()) return Partial<Pt>::undefined(U.reason());
        if (!V.defined()) return Partial<Pt>::undefined(V.reason());
        return P::intersect_lines(*U, *V);
    }

    // The other intersection point of L and C through p (self at tangency).
    // Contract: p on L and on C.
    static Partial<Pt> other(const Pt& p, const Ln& L, const Ci& C) {
        if (!P::on_line(p, L) || !P::on_circle(p, C))
            throw contract_error("other: p must lie on the line and the circle");
        auto K = perp(C.center, L);
        if (!K.defined()) return Partial<Pt>::undefined(K.reason());
        return reflect_line(p, *K);
    }

    // The other intersection point of two non-coincident circles through p.
    static Partial<Pt> other2(const Pt& p, const Ci& C, const Ci& K) {
        if (P::point_eq(C.center, K.center) &&
            P::scalar_eq(P::radius2(C), P::radius2(K)))
            return Partial<Pt>::undefined(Undef::Coincident);
        if (!P::on_circle(p, C) || !P::on_circle(p, K))
            throw contract_error("other2: p must lie on both circles");
        auto L = P::line(C.center, K.center);
        if (!L.defined()) return Partial<Pt>::undefined(L.reason());
        return reflect_line(p, *L);
    }
};

}  // namespace euclid

#endif
