#ifndef EUCLID_PUISEUX_HPP
#define EUCLID_PUISEUX_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "euclid/partial.hpp"
#include "euclid/scalar.hpp"

namespace euclid {

// Truncated Puiseux series in a positive infinitesimal t, with constructible
// real coefficients: sum of c_k * t^(k/denom) for finitely many k.
//
// Every series carries a truncation horizon: coefficients at exponents >= the
// horizon are unknown.  Polynomial results of +,-,* keep an infinite horizon
// and are exact; sqrt and reciprocal of a non-monomial generate expansions cut
// at the configured default order.  Sign and equality verdicts at a finite
// horizon are honest "up to truncation" verdicts, never silently exact.
//
// The ordering is the non-Archimedean one: the sign of a series is the sign of
// its leading (lowest-exponent) nonzero coefficient, so t is positive yet
// smaller than every positive rational.
class PuiseuxSeries {
  public:
    using Horizon = std::optional<mpq_class>;  // nullopt = +infinity (exact)

    PuiseuxSeries();  // exact zero
    PuiseuxSeries(long n);
    PuiseuxSeries(const Scalar& c);
    static PuiseuxSeries t();
    static PuiseuxSeries monomial(const Scalar& coeff, const mpq_class& exponent);
    static PuiseuxSeries zero_up_to(const mpq_class& horizon);

    // Least exponent with a (provably) nonzero coefficient; nullopt when the
    // series has no nonzero coefficient below its horizon.
    std::optional<mpq_class> val() const;

    // Sign of the leading coefficient; 0 when zero up to the horizon.
    int sign() const;
    // True when a zero verdict is unconditional (infinite horizon).
    bool zero_is_exact() const { return !horizon_.has_value(); }
    bool is_zero() const { return sign() == 0; }

    const Horizon& horizon() const { return horizon_; }
    Scalar coeff(const mpq_class& exponent) const;  // 0 if absent
    Scalar leading_coeff() const;                   // contract: sign() != 0

    friend PuiseuxSeries operator+(const PuiseuxSeries&, const PuiseuxSeries&);
    friend PuiseuxSeries operator-(const PuiseuxSeries&, const PuiseuxSeries&);
    friend PuiseuxSeries operator*(const PuiseuxSeries&, const PuiseuxSeries&);
    friend PuiseuxSeries operator-(const PuiseuxSeries&);

    // Serializes as "c0 + c1*t^(p/q) + ... [+ O(t^H)]" with exact coefficients.
    std::string text() const;
    double approx() const;  // t evaluated as 0: the standard part

    struct Term {
        mpq_class exponent;
        Scalar coeff;
    };
    std::vector<Term> terms() const;

  private:
    int64_t denom_ = 1;                 // exponents are multiples of 1/denom_
    std::map<int64_t, Scalar> coeffs_;  // key k  <->  exponent k/denom_
    Horizon horizon_;                   // exponents >= horizon_ unknown

    void prune();
    void normalize_denom();
    void rescale(int64_t new_denom);
    friend PuiseuxSeries scale_shift(const PuiseuxSeries& a, const Scalar& c,
                                     const mpq_class& shift);
    friend Partial<PuiseuxSeries> sqrt(const PuiseuxSeries& a);
    friend Partial<PuiseuxSeries> recip(const PuiseuxSeries& a);
};

// Defined iff the leading coefficient is positive or the series is zero (a
// zero-up-to-truncation radicand yields a zero-up-to-truncation root).  For an
// odd leading exponent the result halves exponents, doubling the denominator.
Partial<PuiseuxSeries> sqrt(const PuiseuxSeries& a);

// Full-field reciprocal: defined iff the series is nonzero below its horizon.
// The valuation of the result is the negated valuation of the input.
Partial<PuiseuxSeries> recip(const PuiseuxSeries& a);
Partial<PuiseuxSeries> div(const PuiseuxSeries& a, const PuiseuxSeries& b);

// Reciprocal inside the bounded subring D of finitely bounded elements:
// defined iff val(a) = 0.  An infinitesimal has a reciprocal in the full field
// but it escapes D; that refusal is the engine of the Dehn demonstration.
Partial<PuiseuxSeries> recip_bounded(const PuiseuxSeries& a);

// EF8, "bounded quotients exist": returns z with a = b*z given |a| <= |b|*bound.
// Throws contract_error when the bound check fails; undefined when b is zero
// up to truncation.
Partial<PuiseuxSeries> bounded_quotient(const PuiseuxSeries& a,
                                        const PuiseuxSeries& b,
                                        const PuiseuxSeries& bound);

PuiseuxSeries abs(const PuiseuxSeries& a);

// Relative expansion depth (in exponent units) for sqrt/reciprocal series.
void set_default_trunc_order(const mpq_class& order);
mpq_class default_trunc_order();

inline bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return (a - b).is_zero();
}
inline bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return !(a == b);
}

}  // namespace euclid

#endif
