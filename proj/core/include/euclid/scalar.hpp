#ifndef EUCLID_SCALAR_HPP
#define EUCLID_SCALAR_HPP

#include <gmpxx.h>

#include <memory>
#include <string>

#include "euclid/partial.hpp"

namespace euclid {

namespace detail {
struct Node;
using NodeRef = std::shared_ptr<const Node>;
}  // namespace detail

// Exact constructible real: an element of the least subfield of R containing
// the rationals and closed under square roots of nonnegative elements.
//
// Representation: normal form over a dynamically grown quadratic tower
// Q(sqrt(r1))(sqrt(r2))..., where each radicand is a positive element of the
// tower below it that is provably not a square there (sqrt denests within the
// existing tower before adjoining, so redundant adjunctions never happen).
// Normal forms are unique, which makes equality structural and sign decidable
// by an exact algebraic recursion; no floating point participates in any
// exact verdict.  MPFR intervals are used only to produce decimal
// approximations with rigorous error bounds.
//
// Scalars are immutable values, cheap to copy, safe to share between threads.
class Scalar {
  public:
    Scalar();  // zero
    Scalar(long n);
    Scalar(const mpq_class& q);
    static Scalar from_rational(const mpq_class& q) { return Scalar(q); }

    // Exact decidable sign: -1, 0, +1.  May throw precision_exhausted, never lies.
    int sign() const;
    bool is_zero() const { return sign() == 0; }

    // Exact rational fast path: set when the value is representable as a
    // rational (propagated through +,-,*,/ and perfect-square roots).
    bool is_rational() const;
    mpq_class rational_value() const;  // contract: is_rational()

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);

    // Textual expression form, e.g. "(sqrt (/ 3 2))".
    std::string expr_string() const;

    // Decimal approximation with a rigorous error bound.
    struct DecimalApprox {
        std::string decimal;  // midpoint, `digits` significant digits
        double error;         // upper bound on |value - printed midpoint|
    };
    DecimalApprox decimal_approx(int digits = 12) const;
    double approx() const;  // interval midpoint at 128 bits, rounded to double

    const detail::NodeRef& node() const { return node_; }
    explicit Scalar(detail::NodeRef n) : node_(std::move(n)) {}

  private:
    detail::NodeRef node_;
};

// Partial field operations (partiality encodes the precondition).
Partial<Scalar> recip(const Scalar& a);                  // defined iff a != 0
Partial<Scalar> div(const Scalar& a, const Scalar& b);   // defined iff b != 0
Partial<Scalar> sqrt(const Scalar& a);                   // defined iff a >= 0

inline Scalar operator+(const Scalar& a, long b) { return a + Scalar(b); }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }
inline bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }
inline bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

// Working-precision cap for the approximation path (sign and equality are
// algebraic and unaffected).  Cap must be >= 64.
void set_precision_cap_bits(long bits);
long precision_cap_bits();

// Parses "3/2", "sqrt(2)", "1 - sqrt(2)*sqrt(2)", "(1+sqrt(5))/2".
Partial<Scalar> parse_scalar(const std::string& text, std::string* error = nullptr);

}  // namespace euclid

#endif
