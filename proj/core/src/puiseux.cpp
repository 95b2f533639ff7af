#include "euclid/puiseux.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

namespace euclid {

namespace {

std::mutex g_trunc_mu;
mpq_class g_trunc_order(16);

using Horizon = PuiseuxSeries::Horizon;

Horizon hmin(const Horizon& a, const Horizon& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

Horizon hshift(const Horizon& a, const mpq_class& s) {
    if (!a) return a;
    return mpq_class(*a + s);
}

}  // namespace

void set_default_trunc_order(const mpq_class& order) {
    if (order <= 0) throw contract_error("truncation order must be positive");
    std::lock_guard<std::mutex> g(g_trunc_mu);
    g_trunc_order = order;
}

mpq_class default_trunc_order() {
    std::lock_guard<std::mutex> g(g_trunc_mu);
    return g_trunc_order;
}

PuiseuxSeries::PuiseuxSeries() = default;

PuiseuxSeries::PuiseuxSeries(long n) {
    if (n != 0) coeffs_.emplace(0, Scalar(n));
}

PuiseuxSeries::PuiseuxSeries(const Scalar& c) {
    if (c.sign() != 0) coeffs_.emplace(0, c);
}

PuiseuxSeries PuiseuxSeries::t() {
    PuiseuxSeries s;
    s.coeffs_.emplace(1, Scalar(1));
    return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const Scalar& coeff, const mpq_class& exponent) {
    PuiseuxSeries s;
    if (coeff.sign() == 0) return s;
    mpq_class e = exponent;
    e.canonicalize();
    s.denom_ = e.get_den().get_si();
    s.coeffs_.emplace(e.get_num().get_si(), coeff);
    return s;
}

PuiseuxSeries PuiseuxSeries::zero_up_to(const mpq_class& horizon) {
    PuiseuxSeries s;
    s.horizon_ = horizon;
    return s;
}

void PuiseuxSeries::prune() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        bool drop = it->second.sign() == 0;
        if (!drop && horizon_) drop = !(mpq_class(it->first, denom_) < *horizon_);
        it = drop ? coeffs_.erase(it) : std::next(it);
    }
    normalize_denom();
}

void PuiseuxSeries::normalize_denom() {
    if (denom_ == 1) return;
    int64_t g = denom_;
    for (const auto& [k, c] : coeffs_) g = std::gcd(g, k < 0 ? -k : k);
    if (g <= 1) return;
    std::map<int64_t, Scalar> out;
    for (const auto& [k, c] : coeffs_) out.emplace(k / g, c);
    coeffs_ = std::move(out);
    denom_ /= g;
}

void PuiseuxSeries::rescale(int64_t new_denom) {
    if (new_denom == denom_) return;
    int64_t f = new_denom / denom_;
    std::map<int64_t, Scalar> out;
    for (const auto& [k, c] : coeffs_) out.emplace(k * f, c);
    coeffs_ = std::move(out);
    denom_ = new_denom;
}

std::optional<mpq_class> PuiseuxSeries::val() const {
    if (coeffs_.empty()) return std::nullopt;
    return mpq_class(coeffs_.begin()->first, denom_);
}

int PuiseuxSeries::sign() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.begin()->second.sign();
}

Scalar PuiseuxSeries::leading_coeff() const {
    if (coeffs_.empty()) throw contract_error("leading_coeff of a zero series");
    return coeffs_.begin()->second;
}

Scalar PuiseuxSeries::coeff(const mpq_class& exponent) const {
    mpq_class e = exponent;
    e.canonicalize();
    mpz_class num = e.get_num() * denom_;
    if (num % e.get_den() != 0) return Scalar(0);
    int64_t k = mpz_class(num / e.get_den()).get_si();
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

std::vector<PuiseuxSeries::Term> PuiseuxSeries::terms() const {
    std::vector<Term> out;
    out.reserve(coeffs_.size());
    for (const auto& [k, c] : coeffs_) out.push_back({mpq_class(k, denom_), c});
    return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    PuiseuxSeries x = a, y = b;
    int64_t d = std::lcm(x.denom_, y.denom_);
    x.rescale(d);
    y.rescale(d);
    PuiseuxSeries r;
    r.denom_ = d;
    r.horizon_ = hmin(x.horizon_, y.horizon_);
    r.coeffs_ = std::move(x.coeffs_);
    for (const auto& [k, c] : y.coeffs_) {
        auto it = r.coeffs_.find(k);
        if (it == r.coeffs_.end())
            r.coeffs_.emplace(k, c);
        else
            it->second = it->second + c;
    }
    r.prune();
    return r;
}

PuiseuxSeries operator-(const PuiseuxSeries& a) {
    PuiseuxSeries r = a;
    for (auto& [k, c] : r.coeffs_) c = -c;
    return r;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return a + (-b);
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    // exact zero annihilates regardless of the other side's horizon
    if (a.coeffs_.empty() && !a.horizon_) return PuiseuxSeries();
    if (b.coeffs_.empty() && !b.horizon_) return PuiseuxSeries();
    PuiseuxSeries x = a, y = b;
    int64_t d = std::lcm(x.denom_, y.denom_);
    x.rescale(d);
    y.rescale(d);
    // known below min(lb(x)+H(y), lb(y)+H(x)); lb is the valuation when a
    // leading term exists, else the horizon itself
    Horizon lbx = x.coeffs_.empty() ? x.horizon_
                                    : Horizon(mpq_class(x.coeffs_.begin()->first, d));
    Horizon lby = y.coeffs_.empty() ? y.horizon_
                                    : Horizon(mpq_class(y.coeffs_.begin()->first, d));
    Horizon h;
    if (y.horizon_) h = hmin(h, hshift(y.horizon_, *lbx));
    if (x.horizon_) h = hmin(h, hshift(x.horizon_, *lby));
    PuiseuxSeries r;
    r.denom_ = d;
    r.horizon_ = h;
    for (const auto& [ka, ca] : x.coeffs_)
        for (const auto& [kb, cb] : y.coeffs_) {
            int64_t k = ka + kb;
            if (r.horizon_ && !(mpq_class(k, d) < *r.horizon_)) continue;
            auto it = r.coeffs_.find(k);
            if (it == r.coeffs_.end())
                r.coeffs_.emplace(k, ca * cb);
            else
                it->second = it->second + ca * cb;
        }
    r.prune();
    return r;
}

// c * t^shift * a, exact in coefficients and horizon.
PuiseuxSeries scale_shift(const PuiseuxSeries& a, const Scalar& c, const mpq_class& shift) {
    mpq_class sh = shift;
    sh.canonicalize();
    int64_t d = std::lcm(a.denom_, static_cast<int64_t>(sh.get_den().get_si()));
    PuiseuxSeries x = a;
    x.rescale(d);
    int64_t ks = mpz_class(sh.get_num() * (d / sh.get_den().get_si())).get_si();
    PuiseuxSeries r;
    r.denom_ = d;
    r.horizon_ = hshift(x.horizon_, sh);
    for (const auto& [k, co] : x.coeffs_) r.coeffs_.emplace(k + ks, c * co);
    r.prune();
    return r;
}

namespace {

// sum of bs[k] * u^k for val(u) > 0; callers cap the horizon afterwards.
PuiseuxSeries expand_powers(const PuiseuxSeries& u, const std::vector<mpq_class>& bs) {
    PuiseuxSeries acc = PuiseuxSeries(Scalar(bs[0]));
    PuiseuxSeries pw(1L);
    for (size_t k = 1; k < bs.size(); ++k) {
        pw = pw * u;
        if (pw.sign() == 0 && !pw.val()) break;
        acc = acc + scale_shift(pw, Scalar(bs[k]), 0);
    }
    return acc;
}

// Coefficients of (1+u)^{1/2} (sqrt=true) or (1+u)^{-1} up to relative order.
std::vector<mpq_class> expansion_coeffs(bool sqrt_series, const mpq_class& step,
                                        const mpq_class& rel) {
    std::vector<mpq_class> bs;
    bs.emplace_back(1);
    mpq_class b(1);
    mpq_class half(1, 2);
    if (step <= 0) return bs;
    for (mpq_class reach = step; reach < rel; reach += step) {
        long k = static_cast<long>(bs.size());
        if (sqrt_series)
            b = b * (half - (k - 1)) / k;
        else
            b = -b;
        bs.push_back(b);
        if (bs.size() > 4096) break;
    }
    return bs;
}

}  // namespace

Partial<PuiseuxSeries> sqrt(const PuiseuxSeries& a) {
    if (a.sign() == 0) {
        if (a.zero_is_exact()) return Partial<PuiseuxSeries>(PuiseuxSeries());
        return Partial<PuiseuxSeries>(PuiseuxSeries::zero_up_to(*a.horizon() / 2));
    }
    Scalar c = a.leading_coeff();
    if (c.sign() < 0) return Partial<PuiseuxSeries>::undefined(Undef::Negative);
    mpq_class v = *a.val();

    // a = c t^v (1 + u) with val(u) > 0
    Scalar cinv = *recip(c);
    PuiseuxSeries u = scale_shift(a, cinv, -v) - PuiseuxSeries(1L);

    mpq_class rel = default_trunc_order();
    if (a.horizon()) rel = std::min(rel, mpq_class(*a.horizon() - v));

    PuiseuxSeries body(1L);
    if (u.sign() == 0 && u.zero_is_exact()) {
        if (a.horizon()) body = body + PuiseuxSeries::zero_up_to(rel);
    } else {
        mpq_class step = u.val() ? *u.val() : rel;
        PuiseuxSeries trimmed = u + PuiseuxSeries::zero_up_to(rel);
        body = expand_powers(trimmed, expansion_coeffs(true, step, rel));
        body = body + PuiseuxSeries::zero_up_to(rel);
    }

    Scalar sc = *euclid::sqrt(c);
    return Partial<PuiseuxSeries>(scale_shift(body, sc, v / 2));
}

Partial<PuiseuxSeries> recip(const PuiseuxSeries& a) {
    if (a.sign() == 0) {
        return Partial<PuiseuxSeries>::undefined(
            a.zero_is_exact() ? Undef::Zero : Undef::ZeroUpToTruncation);
    }
    Scalar c = a.leading_coeff();
    mpq_class v = *a.val();
    Scalar cinv = *recip(c);
    PuiseuxSeries u = scale_shift(a, cinv, -v) - PuiseuxSeries(1L);

    mpq_class rel = default_trunc_order();
    if (a.horizon()) rel = std::min(rel, mpq_class(*a.horizon() - v));

    PuiseuxSeries body(1L);
    if (u.sign() == 0 && u.zero_is_exact()) {
        if (a.horizon()) body = body + PuiseuxSeries::zero_up_to(rel);
    } else {
        mpq_class step = u.val() ? *u.val() : rel;
        PuiseuxSeries trimmed = u + PuiseuxSeries::zero_up_to(rel);
        body = expand_powers(trimmed, expansion_coeffs(false, step, rel));
        body = body + PuiseuxSeries::zero_up_to(rel);
    }

    return Partial<PuiseuxSeries>(scale_shift(body, cinv, -v));
}

Partial<PuiseuxSeries> div(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return recip(b).map([&](const PuiseuxSeries& r) { return a * r; });
}

Partial<PuiseuxSeries> recip_bounded(const PuiseuxSeries& a) {
    if (a.sign() == 0) {
        return Partial<PuiseuxSeries>::undefined(
            a.zero_is_exact() ? Undef::Zero : Undef::ZeroUpToTruncation);
    }
    if (*a.val() != 0) return Partial<PuiseuxSeries>::undefined(Undef::OutOfRing);
    return recip(a);
}

PuiseuxSeries abs(const PuiseuxSeries& a) { return a.sign() < 0 ? -a : a; }

Partial<PuiseuxSeries> bounded_quotient(const PuiseuxSeries& a, const PuiseuxSeries& b,
                                        const PuiseuxSeries& bound) {
    if ((abs(b) * bound - abs(a)).sign() < 0)
        throw contract_error("bounded_quotient: |a| <= |b|*bound fails");
    if (b.sign() == 0)
        return Partial<PuiseuxSeries>::undefined(
            b.zero_is_exact() ? Undef::Zero : Undef::ZeroUpToTruncation);
    auto q = div(a, b);
    if (q.defined() && q->val() && *q->val() < 0)
        return Partial<PuiseuxSeries>::undefined(Undef::OutOfRing);
    return q;
}

std::string PuiseuxSeries::text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        std::string cs = c.expr_string();
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << cs;
            continue;
        }
        if (cs != "1") os << cs << "*";
        os << "t";
        if (k != denom_) {
            mpq_class e(k, denom_);
            e.canonicalize();
            os << "^";
            if (e.get_den() == 1)
                os << e.get_num().get_str();
            else
                os << "(" << e.get_str() << ")";
        }
    }
    if (first) os << "0";
    if (horizon_) {
        mpq_class h = *horizon_;
        os << " + O(t^"
           << (h.get_den() == 1 ? h.get_num().get_str() : "(" + h.get_str() + ")") << ")";
    }
    return os.str();
}

double PuiseuxSeries::approx() const { return coeff(0).approx(); }

}  // namespace euclid
