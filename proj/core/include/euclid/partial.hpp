#ifndef EUCLID_PARTIAL_HPP
#define EUCLID_PARTIAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace euclid {

// Why a construction term failed to denote.  Undefinedness is data, not an
// error: feeding an undefined value into any operation yields an undefined
// value with the original reason preserved (strictness).
enum class Undef {
    None,
    Parallel,            // lines do not meet
    Coincident,          // lines or circles are extensionally equal
    ConcentricDistinct,  // same center, different radius
    Disjoint,            // circles share no point
    NoIntersection,      // line misses circle
    OutOfRing,           // coordinate exists in the field but not in the bounded ring
    NullLine,            // Line(p,p)
    Zero,                // reciprocal of zero
    Negative,            // square root of a negative
    ZeroUpToTruncation,  // series indistinguishable from zero at this truncation
    PrecondViolated,     // checked precondition of a partial operation failed
    Propagated,          // strictness: an input was already undefined
};

inline const char* to_string(Undef u) {
    switch (u) {
    case Undef::None: return "none";
    case Undef::Parallel: return "parallel";
    case Undef::Coincident: return "coincident";
    case Undef::ConcentricDistinct: return "concentric-distinct";
    case Undef::Disjoint: return "disjoint";
    case Undef::NoIntersection: return "no-intersection";
    case Undef::OutOfRing: return "out-of-ring";
    case Undef::NullLine: return "null-line";
    case Undef::Zero: return "zero";
    case Undef::Negative: return "negative";
    case Undef::ZeroUpToTruncation: return "zero-up-to-truncation";
    case Undef::PrecondViolated: return "precondition-violated";
    case Undef::Propagated: return "propagated";
    }
    return "?";
}

// Contract violations (caller passed arguments outside an operation's stated
// preconditions) are hard errors, distinct from honest undefinedness.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Raised only when adaptive refinement hits the configured cap and the
// separation bound needs more precision than the absolute limit allows.
// Never produces a wrong answer; this is a refusal.
struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
class Partial {
  public:
    Partial(T value) : value_(std::move(value)), reason_(Undef::None) {}
    Partial(Undef reason) : reason_(reason) {}
    static Partial undefined(Undef reason) { return Partial(reason); }

    bool defined() const { return value_.has_value(); }
    explicit operator bool() const { return defined(); }
    Undef reason() const { return reason_; }

    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }
    const T& value() const& {
        if (!value_)
            throw contract_error(std::string("access to undefined value (") +
                                 to_string(reason_) + ")");
        return *value_;
    }
    T take() && { return std::move(const_cast<T&>(value())); }

    // Strict propagation helper: maps a defined value, passes undefinedness through.
    template <class Fn>
    auto map(Fn&& fn) const -> Partial<decltype(fn(std::declval<const T&>()))> {
        using U = decltype(fn(std::declval<const T&>()));
        if (!defined()) return Partial<U>::undefined(reason_);
        return Partial<U>(fn(*value_));
    }
    template <class Fn>
    auto and_then(Fn&& fn) const -> decltype(fn(std::declval<const T&>())) {
        using R = decltype(fn(std::declval<const T&>()));
        if (!defined()) return R::undefined(reason_);
        return fn(*value_);
    }

  private:
    std::optional<T> value_;
    Undef reason_;
};

}  // namespace euclid

#endif
