#include "euclid/script.hpp"

#include <cctype>
#include <sstream>

namespace euclid::script {

const char* sort_name(Sort s) {
    switch (s) {
    case Sort::Point: return "Point";
    case Sort::Line: return "Line";
    case Sort::Circle: return "Circle";
    }
    return "?";
}

std::optional<Sort> sort_from_name(const std::string& s) {
    if (s == "Point") return Sort::Point;
    if (s == "Line") return Sort::Line;
    if (s == "Circle") return Sort::Circle;
    return std::nullopt;
}

const std::map<std::string, OpSignature>& op_registry() {
    using S = Sort;
    static const std::map<std::string, OpSignature> reg = {
        {"IntersectLines", {{S::Line, S::Line}, S::Point}},
        {"IntersectLineCircle1", {{S::Line, S::Circle}, S::Point}},
        {"IntersectLineCircle2", {{S::Line, S::Circle}, S::Point}},
        {"IntersectCircles1", {{S::Circle, S::Circle}, S::Point}},
        {"IntersectCircles2", {{S::Circle, S::Circle}, S::Point}},
        {"Line", {{S::Point, S::Point}, S::Line}},
        {"Circle", {{S::Point, S::Point}, S::Circle}},
        {"Circle3", {{S::Point, S::Point, S::Point}, S::Circle}},
        {"Midpoint", {{S::Point, S::Point}, S::Point}},
        {"Perp", {{S::Point, S::Line}, S::Line}},
        {"Para", {{S::Point, S::Line}, S::Line}},
        {"Project", {{S::Point, S::Line}, S::Point}},
        {"Rotate", {{S::Point, S::Point, S::Point, S::Point}, S::Point}},
        {"Reflect", {{S::Point, S::Line}, S::Point}},
        {"Other", {{S::Point, S::Line, S::Circle}, S::Point}},
        {"Other2", {{S::Point, S::Circle, S::Circle}, S::Point}},
        {"Extend", {{S::Point, S::Point, S::Point, S::Point}, S::Point}},
        {"center", {{S::Circle}, S::Point}},
        {"Add", {{S::Point, S::Point}, S::Point, true}},
        {"HilbertMultiply", {{S::Point, S::Point}, S::Point, true}},
        {"Reciprocal", {{S::Point}, S::Point, true}},
        {"SquareRoot", {{S::Point}, S::Point, true}},
        {"MakePoint", {{S::Point, S::Point}, S::Point, true}},
    };
    return reg;
}

namespace {

// frame constants injected when a Frame is supplied at evaluation time
Sort frame_constant_sort(const std::string& n, bool& found) {
    found = true;
    if (n == "0" || n == "1" || n == "I") return Sort::Point;
    if (n == "L") return Sort::Line;
    found = false;
    return Sort::Point;
}

struct Token {
    enum Kind { Ident, Punct, End } kind = End;
    std::string text;
    int line = 1, col = 1;
};

struct Lexer {
    const std::string& src;
    size_t i = 0;
    int line = 1, col = 1;
    explicit Lexer(const std::string& s) : src(s) {}

    void advance(size_t n = 1) {
        for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }

    void skip_ws_and_comments() {
        for (;;) {
            while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i])))
                advance();
            if (i + 1 < src.size() && src[i] == '/' && src[i + 1] == '/') {
                while (i < src.size() && src[i] != '\n') advance();
                continue;
            }
            break;
        }
    }

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.line = line;
        t.col = col;
        if (i >= src.size()) return t;
        char c = src[i];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.kind = Token::Ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
            return t;
        }
        t.kind = Token::Punct;
        t.text = std::string(1, c);
        advance();
        return t;
    }
};

struct Parser {
    Lexer lex;
    Token tok;
    ParseError err;
    bool failed = false;

    explicit Parser(const std::string& s) : lex(s) { tok = lex.next(); }

    void fail(const std::string& m) {
        if (!failed) {
            failed = true;
            err = {m, tok.line, tok.col};
        }
    }

    void bump() { tok = lex.next(); }

    bool eat_punct(const char* p) {
        if (tok.kind == Token::Punct && tok.text == p) {
            bump();
            return true;
        }
        return false;
    }

    std::string expect_ident(const char* what) {
        if (tok.kind != Token::Ident) {
            fail(std::string("expected ") + what);
            return {};
        }
        std::string s = tok.text;
        bump();
        return s;
    }

    // scope: declared identifiers with their sorts, single assignment
    std::map<std::string, Sort> scope;
    bool uses_frame = false;
    std::map<std::string, bool> frame_used;  // constants already referenced

    std::optional<Sort> resolve(const std::string& n) {
        auto it = scope.find(n);
        if (it != scope.end()) return it->second;
        bool isframe = false;
        Sort fs = frame_constant_sort(n, isframe);
        if (isframe) {
            uses_frame = true;
            frame_used[n] = true;
            return fs;
        }
        return std::nullopt;
    }

    Expr parse_expr(Sort expected) {
        Expr e;
        std::string name = expect_ident("an identifier or construction name");
        if (failed) return e;
        if (tok.kind == Token::Punct && tok.text == "(") {
            e.is_call = true;
            e.name = name;
            auto reg = op_registry().find(name);
            if (reg == op_registry().end()) {
                fail("unknown construction '" + name + "'");
                return e;
            }
            bump();  // (
            const auto& sig = reg->second;
            for (size_t k = 0; k < sig.args.size(); ++k) {
                if (k > 0 && !eat_punct(",")) {
                    fail("expected , in arguments of " + name);
                    return e;
                }
                e.args.push_back(parse_expr(sig.args[k]));
                if (failed) return e;
            }
            if (!eat_punct(")")) {
                if (tok.kind == Token::Punct && tok.text == ",")
                    fail("too many arguments to " + name);
                else
                    fail("expected ) after arguments of " + name);
                return e;
            }
            if (sig.result != expected) {
                fail(name + " has sort " + sort_name(sig.result) + ", expected " +
                     sort_name(expected));
            }
            return e;
        }
        e.is_call = false;
        e.name = name;
        auto s = resolve(name);
        if (!s) {
            fail("unbound identifier '" + name + "'");
            return e;
        }
        if (*s != expected)
            fail("'" + name + "' has sort " + sort_name(*s) + ", expected " +
                 sort_name(expected));
        return e;
    }

    std::variant<Script, ParseError> run() {
        Script s;
        std::string rs = expect_ident("a result sort");
        auto rsort = sort_from_name(rs);
        if (!rsort) fail("unknown sort '" + rs + "'");
        if (failed) return err;
        s.result_sort = *rsort;
        s.name = expect_ident("a script name");
        if (!eat_punct("(")) fail("expected ( after the script name");
        if (failed) return err;
        if (!(tok.kind == Token::Punct && tok.text == ")")) {
            for (;;) {
                std::string ps = expect_ident("a parameter sort");
                auto psort = sort_from_name(ps);
                if (!psort) fail("unknown sort '" + ps + "'");
                std::string pn = expect_ident("a parameter name");
                if (failed) return err;
                if (scope.count(pn)) fail("duplicate parameter '" + pn + "'");
                if (failed) return err;
                scope[pn] = *psort;
                s.params.emplace_back(pn, *psort);
                if (eat_punct(",")) continue;
                break;
            }
        }
        if (!eat_punct(")")) fail("expected ) after parameters");
        if (!eat_punct("{")) fail("expected {");
        if (failed) return err;

        bool have_return = false;
        while (!failed) {
            if (eat_punct("}")) break;
            if (tok.kind == Token::End) {
                fail("unexpected end of input, missing }");
                break;
            }
            if (tok.kind == Token::Ident && tok.text == "return") {
                bump();
                s.result = parse_expr(s.result_sort);
                eat_punct(";");
                have_return = true;
                if (!eat_punct("}")) fail("return must be the last statement");
                break;
            }
            // binding: name = Call(...)
            std::string bn = expect_ident("a binding name");
            if (failed) break;
            if (scope.count(bn)) fail("'" + bn + "' is already bound");
            if (frame_used.count(bn))
                fail("'" + bn + "' was already used as a frame constant");
            if (!eat_punct("=")) fail("expected = in binding");
            if (failed) break;
            if (tok.kind != Token::Ident || !op_registry().count(tok.text)) {
                fail("expected a construction call on the right of =");
                break;
            }
            Sort bsort = op_registry().at(tok.text).result;
            Binding b;
            b.name = bn;
            b.expr = parse_expr(bsort);
            eat_punct(";");
            if (failed) break;
            scope[bn] = bsort;
            s.body.push_back(std::move(b));
        }
        if (!failed && !have_return) fail("missing return statement");
        if (failed) return err;
        s.uses_frame = uses_frame;
        return s;
    }
};

void print_expr(const Expr& e, std::ostream& os) {
    os << e.name;
    if (e.is_call) {
        os << "(";
        for (size_t i = 0; i < e.args.size(); ++i) {
            if (i) os << ", ";
            print_expr(e.args[i], os);
        }
        os << ")";
    }
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.is_call != b.is_call || a.name != b.name || a.args.size() != b.args.size())
        return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!expr_equal(a.args[i], b.args[i])) return false;
    return true;
}

}  // namespace

std::variant<Script, ParseError> parse(const std::string& source) {
    Parser p(source);
    return p.run();
}

std::string pretty_print(const Script& s) {
    std::ostringstream os;
    os << sort_name(s.result_sort) << " " << s.name << "(";
    for (size_t i = 0; i < s.params.size(); ++i) {
        if (i) os << ", ";
        os << sort_name(s.params[i].second) << " " << s.params[i].first;
    }
    os << ") {\n";
    for (const auto& b : s.body) {
        os << "  " << b.name << " = ";
        print_expr(b.expr, os);
        os << ";\n";
    }
    os << "  return ";
    print_expr(s.result, os);
    os << ";\n}\n";
    return os.str();
}

bool structurally_equal(const Script& a, const Script& b) {
    if (a.name != b.name || a.result_sort != b.result_sort ||
        a.params != b.params || a.body.size() != b.body.size())
        return false;
    for (size_t i = 0; i < a.body.size(); ++i) {
        if (a.body[i].name != b.body[i].name) return false;
        if (!expr_equal(a.body[i].expr, b.body[i].expr)) return false;
    }
    return expr_equal(a.result, b.result);
}

}  // namespace euclid::script
