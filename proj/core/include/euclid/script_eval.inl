// Template implementation of the strict-partiality script evaluator.
// Included from script.hpp.

namespace euclid::script {

namespace detail_eval {

template <class V>
struct Flow {
    Partial<V> value;
    std::string origin;  // earliest undefined step this value depends on
};

}  // namespace detail_eval

template <class B>
typename Eval<B>::Result Eval<B>::evaluate(const Script& s,
                                           const std::vector<Value>& args,
                                           const std::optional<Frame>& frame) {
    using FlowV = detail_eval::Flow<Value>;

    if (args.size() != s.params.size())
        throw contract_error("evaluate: expected " + std::to_string(s.params.size()) +
                             " arguments, got " + std::to_string(args.size()));
    for (size_t i = 0; i < args.size(); ++i) {
        Sort got = std::holds_alternative<Pt>(args[i])   ? Sort::Point
                   : std::holds_alternative<Ln>(args[i]) ? Sort::Line
                                                         : Sort::Circle;
        if (got != s.params[i].second)
            throw contract_error("evaluate: argument '" + s.params[i].first +
                                 "' has the wrong sort");
    }
    if (s.uses_frame && !frame)
        throw contract_error("evaluate: script '" + s.name +
                             "' references frame constants but no frame was supplied");

    std::map<std::string, FlowV> env;
    for (size_t i = 0; i < args.size(); ++i)
        env.emplace(s.params[i].first, FlowV{Partial<Value>(args[i]), ""});

    auto lookup = [&](const std::string& n) -> FlowV {
        auto it = env.find(n);
        if (it != env.end()) return it->second;
        if (frame) {
            if (n == "0") return {Partial<Value>(Value(frame->origin)), ""};
            if (n == "1") return {Partial<Value>(Value(frame->unit)), ""};
            if (n == "I") return {Partial<Value>(Value(frame->i_point)), ""};
            if (n == "L") return {Partial<Value>(Value(frame->x_axis)), ""};
        }
        throw contract_error("evaluate: unbound identifier '" + n + "'");
    };

    auto dispatch = [&](const std::string& op,
                        const std::vector<Value>& v) -> Partial<Value> {
        auto pt = [&](size_t i) { return std::get<Pt>(v[i]); };
        auto ln = [&](size_t i) { return std::get<Ln>(v[i]); };
        auto ci = [&](size_t i) { return std::get<Ci>(v[i]); };
        auto wrap = [](auto partial) -> Partial<Value> {
            if (!partial.defined()) return Partial<Value>::undefined(partial.reason());
            return Partial<Value>(Value(*partial));
        };
        if (op == "IntersectLines") return wrap(P::intersect_lines(ln(0), ln(1)));
        if (op == "IntersectLineCircle1")
            return wrap(P::intersect_line_circle_1(ln(0), ci(1)));
        if (op == "IntersectLineCircle2")
            return wrap(P::intersect_line_circle_2(ln(0), ci(1)));
        if (op == "IntersectCircles1") return wrap(P::intersect_circles_1(ci(0), ci(1)));
        if (op == "IntersectCircles2") return wrap(P::intersect_circles_2(ci(0), ci(1)));
        if (op == "Line") return wrap(P::line(pt(0), pt(1)));
        if (op == "Circle") return Partial<Value>(Value(P::circle(pt(0), pt(1))));
        if (op == "Circle3")
            return Partial<Value>(Value(P::circle3(pt(0), pt(1), pt(2))));
        if (op == "Midpoint") return wrap(C::midpoint(pt(0), pt(1)));
        if (op == "Perp") return wrap(C::perp(pt(0), ln(1)));
        if (op == "Para") return wrap(C::para(pt(0), ln(1)));
        if (op == "Project") return wrap(C::project(pt(0), ln(1)));
        if (op == "Rotate") return wrap(C::rotate(pt(0), pt(1), pt(2), pt(3)));
        if (op == "Reflect") return wrap(C::reflect_line(pt(0), ln(1)));
        if (op == "Other") return wrap(C::other(pt(0), ln(1), ci(2)));
        if (op == "Other2") return wrap(C::other2(pt(0), ci(1), ci(2)));
        if (op == "Extend") return wrap(P::extend(pt(0), pt(1), pt(2), pt(3)));
        if (op == "center") return Partial<Value>(Value(ci(0).center));
        if (op == "Add") return wrap(AA::geo_add(pt(0), pt(1), *frame));
        if (op == "HilbertMultiply") return wrap(AA::geo_mul(pt(0), pt(1), *frame));
        if (op == "Reciprocal") return wrap(AA::geo_reciprocal(pt(0), *frame));
        if (op == "SquareRoot") return wrap(AA::geo_square_root(pt(0), *frame));
        if (op == "MakePoint") return wrap(AA::make_point(pt(0), pt(1), *frame));
        throw contract_error("evaluate: unknown construction '" + op + "'");
    };

    // strict evaluation of an expression: an undefined subterm makes the
    // whole term undefined, carrying the originating step
    std::function<FlowV(const Expr&, const std::string&)> eval_expr =
        [&](const Expr& e, const std::string& here) -> FlowV {
        if (!e.is_call) return lookup(e.name);
        std::vector<Value> vals;
        vals.reserve(e.args.size());
        for (const auto& a : e.args) {
            FlowV f = eval_expr(a, here);
            if (!f.value.defined()) return f;
            vals.push_back(*f.value);
        }
        Partial<Value> r = dispatch(e.name, vals);
        return {r, r.defined() ? "" : here};
    };

    Result out;
    for (const auto& b : s.body) {
        FlowV f = eval_expr(b.expr, b.name);
        Step st;
        st.name = b.name;
        st.op = b.expr.name;
        st.defined = f.value.defined();
        if (!st.defined) {
            st.reason = f.value.reason();
            st.origin = f.origin;
        }
        out.trace.push_back(st);
        out.bindings.emplace_back(b.name, f.value);
        env.emplace(b.name, f);
    }
    FlowV res = eval_expr(s.result, "return");
    Step st;
    st.name = "return";
    st.op = s.result.is_call ? s.result.name : "";
    st.defined = res.value.defined();
    if (!st.defined) {
        st.reason = res.value.reason();
        st.origin = res.origin;
    }
    out.trace.push_back(st);
    out.result = res.value;
    out.origin = res.origin;
    return out;
}

}  // namespace euclid::script
