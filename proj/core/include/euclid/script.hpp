#ifndef EUCLID_SCRIPT_HPP
#define EUCLID_SCRIPT_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "euclid/axis_arith.hpp"

namespace euclid::script {

enum class Sort { Point, Line, Circle };

const char* sort_name(Sort s);
std::optional<Sort> sort_from_name(const std::string& s);

struct Expr {
    bool is_call = false;
    std::string name;        // identifier, or construction name for calls
    std::vector<Expr> args;  // call arguments (possibly nested)
};

struct Binding {
    std::string name;
    Expr expr;  // always a call
    std::string comment;
};

// A construction script: typed parameters, single-assignment bindings, one
// return expression.  Scripts always just stand for construction terms.
struct Script {
    std::string name;
    Sort result_sort = Sort::Point;
    std::vector<std::pair<std::string, Sort>> params;
    std::vector<Binding> body;
    Expr result;
    bool uses_frame = false;  // references any of the frame constants 0 1 I L
};

struct ParseError {
    std::string message;
    int line = 0;
    int column = 0;
};

struct OpSignature {
    std::vector<Sort> args;
    Sort result;
    bool needs_frame = false;
};

// Registered construction names and their sorts.
const std::map<std::string, OpSignature>& op_registry();

// Grammar: `SortName name(SortName arg, ...) { (name = Call(args...);? |
// return expr;)* }`, with // line comments and optional semicolons.
std::variant<Script, ParseError> parse(const std::string& source);

// Canonical form; parse(pretty_print(s)) is structurally equal to s.
std::string pretty_print(const Script& s);

bool structurally_equal(const Script& a, const Script& b);

// ---------------------------------------------------------------------------
// Evaluation: strict partiality over a field backend.
// ---------------------------------------------------------------------------

template <class B>
struct Eval {
    using P = Plane<B>;
    using C = Constructions<B>;
    using AA = AxisArith<B>;
    using Pt = typename P::Pt;
    using Ln = typename P::Ln;
    using Ci = typename P::Ci;
    using Frame = typename AA::Frame;
    using Value = std::variant<Pt, Ln, Ci>;

    struct Step {
        std::string name;  // binding name, or "return"
        std::string op;
        bool defined = false;
        Undef reason = Undef::None;
        std::string origin;  // earliest undefined binding this depends on
    };

    struct Result {
        std::vector<std::pair<std::string, Partial<Value>>> bindings;
        Partial<Value> result = Partial<Value>::undefined(Undef::Propagated);
        std::string origin;  // for an undefined result
        std::vector<Step> trace;
    };

    static Result evaluate(const Script& s, const std::vector<Value>& args,
                           const std::optional<Frame>& frame);
};

}  // namespace euclid::script

#include "euclid/script_eval.inl"

#endif
