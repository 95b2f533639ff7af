#ifndef EUCLID_BACKENDS_HPP
#define EUCLID_BACKENDS_HPP

#include <string>
#include <vector>

#include "euclid/partial.hpp"
#include "euclid/puiseux.hpp"
#include "euclid/scalar.hpp"

namespace euclid {

// A field backend bundles a scalar type with the policy decisions that vary
// between the models: how division is justified, which reciprocals exist, and
// whether verdicts are exact or up to truncation.  Geometry is written once
// against this interface.

struct ConstructibleBackend {
    using S = Scalar;
    static constexpr bool bounded_ring = false;
    static const char* name() { return "constructible"; }

    static S from_rational(const mpq_class& q) { return Scalar(q); }
    static int sign(const S& a) { return a.sign(); }
    static bool zero_verdicts_exact() { return true; }
    static S abs(const S& a) { return a.sign() < 0 ? -a : a; }
    static Partial<S> sqrt(const S& a) { return euclid::sqrt(a); }
    static Partial<S> recip(const S& a) { return euclid::recip(a); }
    // candidates carry in-ring bounds for the bounded backend; fields ignore them
    static Partial<S> quotient(const S& a, const S& b, const std::vector<S>& candidates) {
        (void)candidates;
        return euclid::div(a, b);
    }
    static bool in_ring(const S&) { return true; }
    static double approx(const S& a) { return a.approx(); }
    static std::string text(const S& a) { return a.expr_string(); }
};

struct PuiseuxBackend {
    using S = PuiseuxSeries;
    static constexpr bool bounded_ring = false;
    static const char* name() { return "puiseux"; }

    static S from_rational(const mpq_class& q) { return PuiseuxSeries(Scalar(q)); }
    static int sign(const S& a) { return a.sign(); }
    static bool zero_verdicts_exact() { return false; }
    static S abs(const S& a) { return euclid::abs(a); }
    static Partial<S> sqrt(const S& a) { return euclid::sqrt(a); }
    static Partial<S> recip(const S& a) { return euclid::recip(a); }
    static Partial<S> quotient(const S& a, const S& b, const std::vector<S>& candidates) {
        (void)candidates;
        return euclid::div(a, b);
    }
    static bool in_ring(const S&) { return true; }
    static double approx(const S& a) { return a.approx(); }
    static std::string text(const S& a) { return a.text(); }
};

// The Dehn model's root node: the subring D of finitely bounded elements,
// viewed over the same series arithmetic.  Division succeeds only when some
// candidate bound witnesses |a| <= |b|*z per EF8; otherwise the quotient is
// not known to exist in D and the operation reports out-of-ring.
struct BoundedPuiseuxBackend {
    using S = PuiseuxSeries;
    static constexpr bool bounded_ring = true;
    static const char* name() { return "puiseux-bounded"; }

    static S from_rational(const mpq_class& q) { return PuiseuxSeries(Scalar(q)); }
    static int sign(const S& a) { return a.sign(); }
    static bool zero_verdicts_exact() { return false; }
    static S abs(const S& a) { return euclid::abs(a); }
    static Partial<S> sqrt(const S& a) { return euclid::sqrt(a); }
    static Partial<S> recip(const S& a) { return euclid::recip_bounded(a); }
    static Partial<S> quotient(const S& a, const S& b, const std::vector<S>& candidates) {
        if (b.sign() == 0)
            return Partial<S>::undefined(b.zero_is_exact() ? Undef::Zero
                                                           : Undef::ZeroUpToTruncation);
        S ab = euclid::abs(a), bb = euclid::abs(b);
        for (const S& z : candidates) {
            if ((bb * z - ab).sign() >= 0) {
                auto q = euclid::div(a, b);
                if (q.defined() && q->val() && *q->val() < 0)
                    return Partial<S>::undefined(Undef::OutOfRing);
                return q;
            }
        }
        return Partial<S>::undefined(Undef::OutOfRing);
    }
    static bool in_ring(const S& a) {
        auto v = a.val();
        return !v || *v >= 0;
    }
    static double approx(const S& a) { return a.approx(); }
    static std::string text(const S& a) { return a.text(); }
};

}  // namespace euclid

#endif
