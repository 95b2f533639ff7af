#ifndef EUCLID_GEOMETRY_HPP
#define EUCLID_GEOMETRY_HPP

#include <utility>
#include <vector>

#include "euclid/backends.hpp"
#include "euclid/partial.hpp"

namespace euclid {

template <class S>
struct Point {
    S x, y;
};

// Directed: Line(a,b) and Line(b,a) have the same points but intersection
// ordering follows (a,b).  Construction enforces a != b.
template <class S>
struct Line {
    Point<S> a, b;
};

// Center plus a radius witness pair: Circle(a,p) stores (a,p), Circle3(a,b,c)
// stores (b,c).  Zero-radius circles are legal.
template <class S>
struct Circle {
    Point<S> center, rc, rd;
};

// The elementary constructions and predicates over a field backend.
template <class B>
struct Plane {
    using S = typename B::S;
    using Pt = Point<S>;
    using Ln = Line<S>;
    using Ci = Circle<S>;

    static S cross(const Pt& u, const Pt& v) { return u.x * v.y - u.y * v.x; }
    static S dot(const Pt& u, const Pt& v) { return u.x * v.x + u.y * v.y; }
    static Pt sub(const Pt& u, const Pt& v) { return {u.x - v.x, u.y - v.y}; }
    static Pt add(const Pt& u, const Pt& v) { return {u.x + v.x, u.y + v.y}; }
    static S dist2(const Pt& u, const Pt& v) { return dot(sub(u, v), sub(u, v)); }

    static bool scalar_eq(const S& a, const S& b) { return B::sign(a - b) == 0; }
    static bool point_eq(const Pt& u, const Pt& v) {
        return scalar_eq(u.x, v.x) && scalar_eq(u.y, v.y);
    }
    static bool in_ring_pt(const Pt& p) { return B::in_ring(p.x) && B::in_ring(p.y); }

    static Pt point(long x, long y) {
        return {B::from_rational(mpq_class(x)), B::from_rational(mpq_class(y))};
    }

    static Partial<Ln> line(const Pt& a, const Pt& b) {
        if (point_eq(a, b)) return Partial<Ln>::undefined(Undef::NullLine);
        return Partial<Ln>(Ln{a, b});
    }
    static Ci circle(const Pt& center, const Pt& through) {
        return Ci{center, center, through};
    }
    static Ci circle3(const Pt& a, const Pt& b, const Pt& c) { return Ci{a, b, c}; }
    static S radius2(const Ci& c) { return dist2(c.rc, c.rd); }

    static bool on_line(const Pt& p, const Ln& l) {
        return B::sign(cross(sub(p, l.a), sub(l.b, l.a))) == 0;
    }
    static bool on_circle(const Pt& p, const Ci& c) {
        return scalar_eq(dist2(p, c.center), radius2(c));
    }
    static bool collinear(const Pt& a, const Pt& b, const Pt& c) {
        return B::sign(cross(sub(c, b), sub(b, a))) == 0;
    }

    // Strict betweenness B(a,b,c): collinear and strictly interior.
    static bool betw(const Pt& a, const Pt& b, const Pt& c) {
        return B::sign(cross(sub(c, b), sub(b, a))) == 0 &&
               B::sign(dot(sub(b, c), sub(a, b))) > 0;
    }
    // Non-strict T(a,b,c).
    static bool betw_nonstrict(const Pt& a, const Pt& b, const Pt& c) {
        return B::sign(cross(sub(c, b), sub(b, a))) == 0 &&
               B::sign(dot(sub(b, c), sub(a, b))) >= 0;
    }

    static bool cong(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
        return scalar_eq(dist2(a, b), dist2(c, d));
    }

    // Non-strict order of s,t along the direction of (p,q); contract: p != q
    // and both s and t on Line(p,q).
    static bool same_order(const Pt& p, const Pt& q, const Pt& s, const Pt& t) {
        if (point_eq(p, q)) throw contract_error("same_order: p = q");
        Ln l{p, q};
        if (!on_line(s, l) || !on_line(t, l))
            throw contract_error("same_order: witness off the line");
        return B::sign(dot(sub(t, s), sub(q, p))) >= 0;
    }

    // Perpendicularity of K and L at a common point m, computed as a zero dot
    // product of directions (equivalent over a field to the witness form).
    static bool perp_at(const Ln& K, const Ln& L, const Pt& m) {
        if (!on_line(m, K) || !on_line(m, L))
            throw contract_error("perp_at: point not on both lines");
        return B::sign(dot(sub(K.b, K.a), sub(L.b, L.a))) == 0;
    }

    // In-ring bound candidates for quotients: 1 + the sum of input coordinate
    // magnitudes, and its square.  On field backends these are ignored.
    static std::vector<S> bound_candidates(std::initializer_list<S> mags) {
        S acc = B::from_rational(1);
        for (const S& m : mags) acc = acc + B::abs(m);
        return {acc, acc * acc};
    }

    // ------------------------------------------------------------------
    // IntersectLines: defined iff the lines meet in exactly one point of the
    // active plane.  Cramer solve; the denominator is the cross product of
    // the directions.  On the bounded backend both coordinates must land in
    // the ring, witnessed by a candidate bound, else out-of-ring.
    // ------------------------------------------------------------------
    static Partial<Pt> intersect_lines(const Ln& K, const Ln& L) {
        Pt d1 = sub(K.b, K.a), d2 = sub(L.b, L.a);
        S den = cross(d1, d2);
        if (B::sign(den) == 0) {
            bool coincide = on_line(L.a, K) && on_line(L.b, K);
            return Partial<Pt>::undefined(coincide ? Undef::Coincident : Undef::Parallel);
        }
        S r1 = cross(K.a, K.b);  // s x t
        S r2 = cross(L.a, L.b);  // u x v
        S numx = d1.x * r2 - d2.x * r1;
        S numy = d1.y * r2 - d2.y * r1;
        auto cands = bound_candidates({K.a.x, K.a.y, K.b.x, K.b.y, L.a.x, L.a.y, L.b.x, L.b.y});
        auto x = B::quotient(numx, den, cands);
        if (!x.defined()) return Partial<Pt>::undefined(x.reason());
        auto y = B::quotient(numy, den, cands);
        if (!y.defined()) return Partial<Pt>::undefined(y.reason());
        return Partial<Pt>(Pt{*x, *y});
    }

    // ------------------------------------------------------------------
    // IntersectLineCircle: the two points occur on L in the same order as
    // L's defining pair; tangency doubles the point.
    // ------------------------------------------------------------------
    static Partial<std::pair<Pt, Pt>> intersect_line_circle(const Ln& L, const Ci& C) {
        using Res = std::pair<Pt, Pt>;
        Pt d = sub(L.b, L.a);
        S alpha = dot(d, d);  // > 0
        S beta = dot(d, sub(C.center, L.a));
        S gamma = dist2(L.a, C.center) - radius2(C);
        S disc = beta * beta - alpha * gamma;
        if (B::sign(disc) < 0)
            return Partial<Res>::undefined(Undef::NoIntersection);
        auto w = B::sqrt(disc);
        if (!w.defined()) return Partial<Res>::undefined(w.reason());
        S rbound = radius_bound(C);
        auto cands = bound_candidates(
            {L.a.x, L.a.y, C.center.x, C.center.y, rbound});
        auto mk = [&](const S& num) { return B::quotient(num, alpha, cands); };
        // parameters (beta -/+ w)/alpha, increasing along d
        auto x1 = mk(L.a.x * alpha + d.x * (beta - *w));
        auto y1 = mk(L.a.y * alpha + d.y * (beta - *w));
        auto x2 = mk(L.a.x * alpha + d.x * (beta + *w));
        auto y2 = mk(L.a.y * alpha + d.y * (beta + *w));
        for (const auto* c : {&x1, &y1, &x2, &y2})
            if (!c->defined()) return Partial<Res>::undefined(c->reason());
        return Partial<Res>(Res{Pt{*x1, *y1}, Pt{*x2, *y2}});
    }

    static Partial<Pt> intersect_line_circle_1(const Ln& L, const Ci& C) {
        return intersect_line_circle(L, C).map(
            [](const std::pair<Pt, Pt>& r) { return r.first; });
    }
    static Partial<Pt> intersect_line_circle_2(const Ln& L, const Ci& C) {
        return intersect_line_circle(L, C).map(
            [](const std::pair<Pt, Pt>& r) { return r.second; });
    }

    // ------------------------------------------------------------------
    // IntersectCircles: first component is the point p with
    // (a-b) x (p-b) > 0, a,b the centers of C,K (the pinned orientation);
    // tangency doubles the point.  The x-coordinate quotient is justified by
    // the bound z = r+R+c, which also decides disjointness.
    // ------------------------------------------------------------------
    static Partial<std::pair<Pt, Pt>> intersect_circles(const Ci& C, const Ci& K) {
        using Res = std::pair<Pt, Pt>;
        const Pt &a = C.center, &b = K.center;
        S r2 = radius2(C), R2 = radius2(K);
        if (point_eq(a, b)) {
            return Partial<Res>::undefined(scalar_eq(r2, R2) ? Undef::Coincident
                                                             : Undef::ConcentricDistinct);
        }
        Pt d = sub(b, a);
        S c2 = dot(d, d);
        S c = *B::sqrt(c2);  // > 0
        S r = *B::sqrt(r2), R = *B::sqrt(R2);
        S num = r2 - R2 + c2;
        S z = r + R + c;  // the quotient bound
        if (B::sign((c + c) * z - B::abs(num)) < 0)
            return Partial<Res>::undefined(Undef::Disjoint);
        auto x = B::quotient(num, c + c, {z});
        if (!x.defined()) return Partial<Res>::undefined(x.reason());
        S y2 = r2 - *x * *x;
        if (B::sign(y2) < 0) return Partial<Res>::undefined(Undef::Disjoint);
        auto y = B::sqrt(y2);
        if (!y.defined()) return Partial<Res>::undefined(y.reason());
        // back-transform: P(+-) = a + T(x, +-y), T = [[d1/c, d2/c],[d2/c, -d1/c]]
        std::vector<S> cands = {z + z, (z + z) * (z + z)};
        auto px1 = B::quotient(d.x * *x + d.y * *y, c, cands);
        auto py1 = B::quotient(d.y * *x - d.x * *y, c, cands);
        auto px2 = B::quotient(d.x * *x - d.y * *y, c, cands);
        auto py2 = B::quotient(d.y * *x + d.x * *y, c, cands);
        for (const auto* q : {&px1, &py1, &px2, &py2})
            if (!q->defined()) return Partial<Res>::undefined(q->reason());
        Pt first{a.x + *px1, a.y + *py1};
        Pt second{a.x + *px2, a.y + *py2};
        return Partial<Res>(Res{first, second});
    }

    static Partial<Pt> intersect_circles_1(const Ci& C, const Ci& K) {
        return intersect_circles(C, K).map(
            [](const std::pair<Pt, Pt>& r) { return r.first; });
    }
    static Partial<Pt> intersect_circles_2(const Ci& C, const Ci& K) {
        return intersect_circles(C, K).map(
            [](const std::pair<Pt, Pt>& r) { return r.second; });
    }

    // Extend(a,b,c,d) = IntersectLineCircle2(Line(a,b), Circle3(b,c,d)):
    // the point x with T(a,b,x) and bx = cd; undefined iff a = b.
    static Partial<Pt> extend(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
        auto l = line(a, b);
        if (!l.defined()) return Partial<Pt>::undefined(l.reason());
        return intersect_line_circle_2(*l, circle3(b, c, d));
    }

    // The point e(x) != x, via extension of the plane context's base segment.
    static Pt distinct_from(const Pt& x, const Pt& alpha, const Pt& beta) {
        auto e = extend(alpha, beta, alpha, x);
        if (!e.defined()) throw contract_error("distinct_from: base points equal");
        return *e;
    }
    static Pt distinct_from(const Pt& x) {
        return distinct_from(x, point(0, 1), point(1, 0));
    }

    // ------------------------------------------------------------------
    // Inner Pasch, analytically: given B(a,p,c), B(b,q,c), p != b, q != a,
    // returns z with B(a,z,q) and B(b,z,p).  Normalizes by translating a to
    // the origin and reflecting p onto the positive x-axis with the
    // involution [[p1/d, p2/d],[p2/d, -p1/d]], d = sqrt(p1^2+p2^2); all
    // quotients are bounded by 1, so the operation succeeds on the bounded
    // backend as well.
    // ------------------------------------------------------------------
    static Partial<Pt> inner_pasch(const Pt& a, const Pt& p, const Pt& c, const Pt& b,
                                   const Pt& q) {
        if (!betw(a, p, c) || !betw(b, q, c) || point_eq(p, b) || point_eq(q, a))
            throw contract_error("inner_pasch: hypotheses violated");
        Pt P = sub(p, a), Bb = sub(b, a), Q = sub(q, a);
        S d2 = dot(P, P);
        S d = *B::sqrt(d2);
        std::vector<S> unit_bound = {B::from_rational(1)};
        auto u1 = B::quotient(P.x, d, unit_bound);
        auto u2 = B::quotient(P.y, d, unit_bound);
        if (!u1.defined()) return Partial<Pt>::undefined(u1.reason());
        if (!u2.defined()) return Partial<Pt>::undefined(u2.reason());
        auto apply = [&](const Pt& v) {
            return Pt{*u1 * v.x + *u2 * v.y, *u2 * v.x - *u1 * v.y};
        };
        Pt Bh = apply(Bb), Qh = apply(Q);
        int sb = B::sign(Bh.y);
        bool flip = sb < 0;
        if (flip) {
            Bh.y = -Bh.y;
            Qh.y = -Qh.y;
        }
        Pt zh{B::from_rational(0), B::from_rational(0)};
        if (B::sign(Bh.y) == 0) {
            // all five points collinear: pick the midpoint of the overlap of
            // the one-dimensional segments (0,Qh.x) and (Bh.x, d)
            auto mn = [&](const S& s1, const S& s2) { return B::sign(s1 - s2) <= 0 ? s1 : s2; };
            auto mx = [&](const S& s1, const S& s2) { return B::sign(s1 - s2) >= 0 ? s1 : s2; };
            S zero = B::from_rational(0);
            S lo = mx(mn(zero, Qh.x), mn(Bh.x, d));
            S hi = mn(mx(zero, Qh.x), mx(Bh.x, d));
            if (B::sign(hi - lo) <= 0)
                throw std::logic_error("inner_pasch: degenerate overlap is empty");
            S half = B::from_rational(mpq_class(1, 2));
            zh = Pt{(lo + hi) * half, zero};
        } else {
            S numf = d * Bh.y;                       // p x b after normalization
            S denf = cross(Qh, sub(Bh, Pt{d, B::from_rational(0)}));
            auto f = B::quotient(numf, denf, unit_bound);  // the paper bounds it by 1
            if (!f.defined()) return Partial<Pt>::undefined(f.reason());
            zh = Pt{Qh.x * *f, Qh.y * *f};
        }
        if (flip) zh.y = -zh.y;
        // the normalization matrix is its own inverse
        Pt zu = apply(zh);
        Pt z = add(zu, a);
        if (!betw(a, z, q) || !betw(b, z, p))
            throw std::logic_error("inner_pasch: postcondition failed");
        return Partial<Pt>(z);
    }

  private:
    static S radius_bound(const Ci& c) {
        return B::abs(c.rc.x - c.rd.x) + B::abs(c.rc.y - c.rd.y);
    }
};

using ConstructiblePlane = Plane<ConstructibleBackend>;
using PuiseuxPlane = Plane<PuiseuxBackend>;
using BoundedPlane = Plane<BoundedPuiseuxBackend>;

}  // namespace euclid

#endif
