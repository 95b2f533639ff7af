#include "euclid/scalar.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <random>

#include <atomic>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace euclid {
namespace detail {

// ---------------------------------------------------------------------------
// Quadratic-tower normal form.
//
// The global tower is Q = T_0 < T_1 < ... with T_k = T_{k-1}(sqrt(r_k)),
// where each radicand r_k is a positive element of T_{k-1}.  An element is
// lo + hi*sqrt(r_k) with lo, hi in T_{k-1} (hi nonzero, canonically), so sign
// reduces recursively to the signs of lo, hi and the norm lo^2 - hi^2 r_k.
//
// Adjunction redundancy (a radicand that is secretly a square of a tower
// element) is detected by a budgeted denesting search at sqrt time.  Missing
// a denesting is harmless: the first time a zero norm is encountered at some
// level, the square root of that radicand has been found explicitly, the
// level is marked degenerate, and every element touching it is rewritten one
// level down from then on.  Exact verdicts therefore never depend on the
// completeness of the search.
// ---------------------------------------------------------------------------

struct Node {
    int level = 0;   // 0 = rational; k > 0 uses radicand k
    mpq_class q;     // level 0 payload
    NodeRef lo, hi;  // level > 0: lo + hi*sqrt(rad(level)); hi nonzero
    size_t hash = 0;
    std::shared_ptr<const std::vector<int>> support;  // levels used, sorted
    mutable std::atomic<int> sign_cache{2};           // 2 = unknown
};

namespace {

size_t hash_mix(size_t h, size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t hash_mpz(const mpz_class& z) {
    size_t h = static_cast<size_t>(mpz_sgn(z.get_mpz_t()));
    size_t limbs = mpz_size(z.get_mpz_t());
    for (size_t i = 0; i < limbs; ++i)
        h = hash_mix(h, static_cast<size_t>(mpz_getlimbn(z.get_mpz_t(), i)));
    return h;
}

const std::shared_ptr<const std::vector<int>>& empty_support() {
    static const auto e = std::make_shared<const std::vector<int>>();
    return e;
}

std::shared_ptr<const std::vector<int>> support_union(
    const std::shared_ptr<const std::vector<int>>& a,
    const std::shared_ptr<const std::vector<int>>& b, int extra) {
    if (a == b && extra < 0) return a;
    auto out = std::make_shared<std::vector<int>>();
    std::set_union(a->begin(), a->end(), b->begin(), b->end(),
                   std::back_inserter(*out));
    if (extra >= 0) {
        auto it = std::lower_bound(out->begin(), out->end(), extra);
        if (it == out->end() || *it != extra) out->insert(it, extra);
    }
    return out;
}

struct Tower {
    mutable std::shared_mutex mu;
    std::deque<NodeRef> rads;                       // radicand of level k at k-1
    std::unordered_map<int, NodeRef> degenerate;    // level -> sqrt(radicand)
    std::atomic<bool> any_degenerate{false};
    std::mutex adjoin_mu;                           // serializes sqrt probing
    std::unordered_multimap<size_t, std::pair<NodeRef, NodeRef>> sqrt_cache;

    NodeRef rad(int level) const {
        std::shared_lock<std::shared_mutex> g(mu);
        return rads.at(static_cast<size_t>(level) - 1);
    }
    int height() const {
        std::shared_lock<std::shared_mutex> g(mu);
        return static_cast<int>(rads.size());
    }
    int adjoin(NodeRef r) {
        std::unique_lock<std::shared_mutex> g(mu);
        rads.push_back(std::move(r));
        return static_cast<int>(rads.size());
    }
    NodeRef degenerate_value(int level) const {
        std::shared_lock<std::shared_mutex> g(mu);
        auto it = degenerate.find(level);
        return it == degenerate.end() ? nullptr : it->second;
    }
    void mark_degenerate(int level, NodeRef value) {
        std::unique_lock<std::shared_mutex> g(mu);
        degenerate.emplace(level, std::move(value));
        any_degenerate.store(true);
    }
};

Tower& tower() {
    static Tower* t = new Tower();
    return *t;
}

NodeRef mk_rat(mpq_class q) {
    auto n = std::make_shared<Node>();
    n->q = std::move(q);
    n->q.canonicalize();
    n->hash = hash_mix(hash_mpz(mpz_class(n->q.get_num())),
                       hash_mpz(mpz_class(n->q.get_den())));
    n->support = empty_support();
    return n;
}

const NodeRef& zero_node() {
    static const NodeRef z = mk_rat(mpq_class(0));
    return z;
}
const NodeRef& one_node() {
    static const NodeRef o = mk_rat(mpq_class(1));
    return o;
}

bool node_is_zero(const NodeRef& n) { return n->level == 0 && n->q == 0; }

bool node_equal(const NodeRef& a, const NodeRef& b) {
    if (a == b) return true;
    if (a->hash != b->hash || a->level != b->level) return false;
    if (a->level == 0) return a->q == b->q;
    return node_equal(a->lo, b->lo) && node_equal(a->hi, b->hi);
}

NodeRef add(const NodeRef& a, const NodeRef& b);
NodeRef mul(const NodeRef& a, const NodeRef& b);
int sign_of(const NodeRef& n);

NodeRef mk(int level, NodeRef lo, NodeRef hi) {
    if (node_is_zero(hi)) return lo;
    if (tower().any_degenerate.load()) {
        if (NodeRef g = tower().degenerate_value(level))
            return add(lo, mul(hi, g));
    }
    auto n = std::make_shared<Node>();
    n->level = level;
    n->lo = std::move(lo);
    n->hi = std::move(hi);
    n->hash = hash_mix(hash_mix(static_cast<size_t>(level), n->lo->hash), n->hi->hash);
    n->support = support_union(n->lo->support, n->hi->support, level);
    return n;
}

void split(const NodeRef& n, int level, NodeRef& lo, NodeRef& hi) {
    if (n->level == level) {
        lo = n->lo;
        hi = n->hi;
    } else {
        lo = n;
        hi = zero_node();
    }
}

NodeRef add(const NodeRef& a, const NodeRef& b) {
    if (node_is_zero(a)) return b;
    if (node_is_zero(b)) return a;
    int k = std::max(a->level, b->level);
    if (k == 0) return mk_rat(a->q + b->q);
    NodeRef la, ha, lb, hb;
    split(a, k, la, ha);
    split(b, k, lb, hb);
    return mk(k, add(la, lb), add(ha, hb));
}

NodeRef neg(const NodeRef& a) {
    if (a->level == 0) return mk_rat(mpq_class(-a->q));
    return mk(a->level, neg(a->lo), neg(a->hi));
}

NodeRef sub(const NodeRef& a, const NodeRef& b) { return add(a, neg(b)); }

NodeRef mul(const NodeRef& a, const NodeRef& b) {
    if (node_is_zero(a) || node_is_zero(b)) return zero_node();
    if (a->level == 0 && b->level == 0) return mk_rat(a->q * b->q);
    if (a->level == 0 && a->q == 1) return b;
    if (b->level == 0 && b->q == 1) return a;
    int k = std::max(a->level, b->level);
    NodeRef la, ha, lb, hb;
    split(a, k, la, ha);
    split(b, k, lb, hb);
    NodeRef cross_part = add(mul(la, hb), mul(ha, lb));
    NodeRef hahb = mul(ha, hb);
    NodeRef lo = add(mul(la, lb),
                     node_is_zero(hahb) ? zero_node() : mul(hahb, tower().rad(k)));
    return mk(k, lo, cross_part);
}

NodeRef norm_at(const NodeRef& n) {
    return sub(mul(n->lo, n->lo), mul(mul(n->hi, n->hi), tower().rad(n->level)));
}

NodeRef recip_nz(const NodeRef& a);

// A zero norm at level k means (lo/hi)^2 = rad(k): the radicand was secretly a
// square.  Record the discovered root so the level rewrites away from now on,
// and return the rewritten element.
NodeRef heal_degenerate(const NodeRef& n) {
    NodeRef g = mul(n->lo, recip_nz(n->hi));
    if (sign_of(g) < 0) g = neg(g);
    tower().mark_degenerate(n->level, g);
    return add(n->lo, mul(n->hi, g));
}

int sign_of(const NodeRef& n) {
    if (n->level == 0) return sgn(n->q);
    int cached = n->sign_cache.load(std::memory_order_relaxed);
    if (cached != 2) return cached;
    int result;
    int sl = sign_of(n->lo);
    int sh = sign_of(n->hi);  // nonzero by canonical form
    if (sl == 0 || sl == sh) {
        result = sh;
    } else {
        int sn = sign_of(norm_at(n));
        if (sn == 0) return sign_of(heal_degenerate(n));
        result = sn > 0 ? sl : sh;
    }
    n->sign_cache.store(result, std::memory_order_relaxed);
    return result;
}

NodeRef recip_nz(const NodeRef& a) {
    if (a->level == 0) {
        if (a->q == 0) throw std::logic_error("recip_nz of zero");
        return mk_rat(mpq_class(1) / a->q);
    }
    NodeRef norm = norm_at(a);
    if (sign_of(norm) == 0) return recip_nz(heal_degenerate(a));
    NodeRef inv = recip_nz(norm);
    return mk(a->level, mul(a->lo, inv), neg(mul(a->hi, inv)));
}

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
    if (q < 0) return false;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    out = mpq_class(rn, rd);
    out.canonicalize();
    return true;
}

// Reciprocals of radicands recur throughout the denesting search; memoize.
NodeRef rad_recip(int level) {
    static std::mutex mu;
    static std::unordered_map<int, NodeRef> memo;
    std::lock_guard<std::mutex> g(mu);
    auto it = memo.find(level);
    if (it != memo.end()) return it->second;
    NodeRef r = recip_nz(tower().rad(level));
    memo.emplace(level, r);
    return r;
}

// ---- numeric screening for the denesting search ----------------------------
//
// A square in a real field is nonnegative under every real embedding.  The
// screen samples a few real embeddings (sign choices for the radicals that
// keep every radicand positive) in plain doubles and rejects targets with a
// clearly negative conjugate.  Both failure modes are harmless: a wrong
// rejection only skips a denesting (healed later), a wrong pass only costs
// exact work.

double eval_conj(const NodeRef& n, const std::vector<int8_t>& flips) {
    if (n->level == 0) return n->q.get_d();
    double rv = eval_conj(tower().rad(n->level), flips);
    if (!(rv >= 0)) return std::numeric_limits<double>::quiet_NaN();
    double s = (n->level < static_cast<int>(flips.size()) && flips[n->level]) ? -1.0 : 1.0;
    return eval_conj(n->lo, flips) + s * eval_conj(n->hi, flips) * std::sqrt(rv);
}

bool conj_screen_reject(const NodeRef& x, const std::vector<int>& levels) {
    if (levels.empty()) return false;
    std::minstd_rand rng(static_cast<unsigned>(x->hash | 1));
    std::vector<int8_t> flips(static_cast<size_t>(tower().height()) + 1, 0);
    int tried = 0;
    for (int round = 0; round < 24 && tried < 8; ++round) {
        for (int m : levels) flips[static_cast<size_t>(m)] = static_cast<int8_t>(rng() & 1);
        double v = eval_conj(x, flips);
        if (std::isnan(v)) continue;  // not a real embedding
        ++tried;
        if (v < -1e-7 * (std::abs(v) + 1.0)) return true;
    }
    return false;
}

// Budgeted denesting search for a square root of x within candidate levels C
// (descending).  A root found is verified by construction; a miss is safe
// because heal_degenerate repairs any redundant adjunction later.
bool try_sqrt_core(const NodeRef& x, const std::vector<int>& C, NodeRef& out,
                   long& budget, int norm_depth) {
    if (--budget < 0) return false;
    if (node_is_zero(x)) {
        out = zero_node();
        return true;
    }
    if (x->level == 0) {
        mpq_class r;
        if (rational_sqrt(x->q, r)) {
            out = mk_rat(r);
            return true;
        }
    }
    if (conj_screen_reject(x, C)) return false;
    std::minstd_rand rng(static_cast<unsigned>(x->hash | 1) * 2654435761u);
    std::vector<int8_t> flips(static_cast<size_t>(tower().height()) + 1, 0);
    auto sample_reject = [&](auto&& value_at) {
        // rejects when some sampled real embedding makes the value negative
        int tried = 0;
        for (int round = 0; round < 24 && tried < 8; ++round) {
            for (int m : C) flips[static_cast<size_t>(m)] = static_cast<int8_t>(rng() & 1);
            double v = value_at();
            if (std::isnan(v)) continue;
            ++tried;
            if (v < -1e-7 * (std::abs(v) + 1.0)) return true;
        }
        return false;
    };
    // top-level split: x = L + H*sqrt(r), H != 0: a root u + v*sqrt(r) forces
    // the norm L^2 - H^2 r to be a square w^2 below, with u^2 = (L +- w)/2
    if (x->level > 0) {
        NodeRef radx = tower().rad(x->level);
        bool plausible = !sample_reject([&] {
            double lo = eval_conj(x->lo, flips), hi = eval_conj(x->hi, flips);
            double rv = eval_conj(radx, flips);
            if (!(rv >= 0)) return std::numeric_limits<double>::quiet_NaN();
            return lo * lo - hi * hi * rv;
        });
        if (plausible && norm_depth < 2) {
            std::vector<int> below;
            for (int m : C)
                if (m < x->level) below.push_back(m);
            NodeRef w;
            long norm_budget = std::min(budget, budget / 2 + 8);
            if (try_sqrt_core(norm_at(x), below, w, norm_budget, norm_depth + 1)) {
                const NodeRef half = mk_rat(mpq_class(1, 2));
                for (int attempt = 0; attempt < 2; ++attempt) {
                    NodeRef cand = mul(add(x->lo, attempt == 0 ? w : neg(w)), half);
                    NodeRef u;
                    long u_budget = std::min(budget, budget / 2 + 8);
                    if (!try_sqrt_core(cand, below, u, u_budget, norm_depth + 1) || node_is_zero(u))
                        continue;
                    NodeRef v = mul(x->hi, recip_nz(add(u, u)));
                    NodeRef s = mk(x->level, u, v);
                    if (node_is_zero(sub(mul(s, s), x))) {
                        out = s;
                        return true;
                    }
                }
            }
        }
    }
    // divide out one candidate radical: x = (v*sqrt(r_m))^2 = v^2 r_m
    for (int m : C) {
        if (--budget < 0) return false;
        NodeRef r = tower().rad(m);
        bool plausible = !sample_reject([&] {
            double xv = eval_conj(x, flips), rv = eval_conj(r, flips);
            if (std::isnan(xv) || !(rv > 0)) return std::numeric_limits<double>::quiet_NaN();
            return xv / rv;
        });
        if (!plausible) continue;
        NodeRef y = mul(x, rad_recip(m));
        std::vector<int> rest;
        for (int mm : C)
            if (mm != m) rest.push_back(mm);
        NodeRef v;
        if (try_sqrt_core(y, rest, v, budget, norm_depth)) {
            NodeRef s = mul(v, mk(m, zero_node(), one_node()));
            if (node_is_zero(sub(mul(s, s), x))) {
                out = s;
                return true;
            }
        }
    }
    return false;
}

// Candidate levels: the support of x, closed under radicand supports, plus
// all rational-radicand levels when there are few of them.
std::vector<int> candidate_levels(const NodeRef& x) {
    std::vector<int> C;
    std::vector<bool> in;
    int h = tower().height();
    in.assign(static_cast<size_t>(h) + 1, false);
    std::vector<int> queue(*x->support);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int m = queue[qi];
        if (m <= 0 || m > h || in[m]) continue;
        in[m] = true;
        for (int s : *tower().rad(m)->support) queue.push_back(s);
    }
    // grow by levels whose radicand support is already covered
    bool changed = true;
    int rational_levels = 0;
    while (changed) {
        changed = false;
        for (int m = 1; m <= h; ++m) {
            if (in[m]) continue;
            const auto& rs = *tower().rad(m)->support;
            if (rs.empty()) continue;  // rational radicands handled below
            bool covered = true;
            for (int s : rs)
                if (!in[s]) {
                    covered = false;
                    break;
                }
            if (covered) {
                in[m] = true;
                changed = true;
            }
        }
    }
    for (int m = 1; m <= h; ++m)
        if (!in[m] && tower().rad(m)->support->empty()) ++rational_levels;
    if (rational_levels <= 12) {
        for (int m = 1; m <= h; ++m)
            if (!in[m] && tower().rad(m)->support->empty()) in[m] = true;
    }
    for (int m = h; m >= 1; --m)
        if (in[m]) C.push_back(m);
    return C;  // descending
}

// Contract: sign_of(x) >= 0.
NodeRef sqrt_nonneg(const NodeRef& x) {
    if (node_is_zero(x)) return zero_node();
    if (x->level == 0) {
        mpq_class r;
        if (rational_sqrt(x->q, r)) return mk_rat(r);
    }
    std::lock_guard<std::mutex> g(tower().adjoin_mu);
    auto range = tower().sqrt_cache.equal_range(x->hash);
    for (auto it = range.first; it != range.second; ++it)
        if (node_equal(it->second.first, x)) return it->second.second;
    NodeRef s;
    long budget = 200;
    if (try_sqrt_core(x, candidate_levels(x), s, budget, 0)) {
        if (sign_of(s) < 0) s = neg(s);
    } else {
        int lvl = tower().adjoin(x);
        s = mk(lvl, zero_node(), one_node());
    }
    tower().sqrt_cache.emplace(x->hash, std::make_pair(x, s));
    return s;
}

// ---------------------------------------------------------------------------
// MPFR interval evaluation, used only for approximations; all exact verdicts
// come from the tower normal form.
// ---------------------------------------------------------------------------

struct Interval {
    mpfr_t lo, hi;
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;
    explicit Interval(mpfr_prec_t p) {
        mpfr_init2(lo, p);
        mpfr_init2(hi, p);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
};

void eval_interval(const NodeRef& n, mpfr_prec_t p, Interval& out) {
    if (n->level == 0) {
        mpfr_set_q(out.lo, n->q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(out.hi, n->q.get_mpq_t(), MPFR_RNDU);
        return;
    }
    Interval l(p), h(p), r(p);
    eval_interval(n->lo, p, l);
    eval_interval(n->hi, p, h);
    eval_interval(tower().rad(n->level), p, r);
    Interval sq(p);
    if (mpfr_sgn(r.lo) <= 0)
        mpfr_set_zero(sq.lo, 1);
    else
        mpfr_sqrt(sq.lo, r.lo, MPFR_RNDD);
    if (mpfr_sgn(r.hi) <= 0)
        mpfr_set_zero(sq.hi, 1);
    else
        mpfr_sqrt(sq.hi, r.hi, MPFR_RNDU);
    // out = l + h * sq over endpoint candidates, outward
    mpfr_t t, ml, mh;
    mpfr_init2(t, p);
    mpfr_init2(ml, p);
    mpfr_init2(mh, p);
    bool first = true;
    const mpfr_srcptr hs[2] = {h.lo, h.hi};
    const mpfr_srcptr ss[2] = {sq.lo, sq.hi};
    for (auto a : hs)
        for (auto b : ss) {
            mpfr_mul(t, a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t, ml) < 0) mpfr_set(ml, t, MPFR_RNDD);
            mpfr_mul(t, a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t, mh) > 0) mpfr_set(mh, t, MPFR_RNDU);
            first = false;
        }
    mpfr_add(out.lo, l.lo, ml, MPFR_RNDD);
    mpfr_add(out.hi, l.hi, mh, MPFR_RNDU);
    mpfr_clears(t, ml, mh, (mpfr_ptr) nullptr);
}

std::atomic<long> g_cap_bits{4096};

}  // namespace

NodeRef radicand_of(const Node& n) { return tower().rad(n.level); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Scalar surface.
// ---------------------------------------------------------------------------

using detail::NodeRef;

Scalar::Scalar() : node_(detail::zero_node()) {}
Scalar::Scalar(long n) : node_(detail::mk_rat(mpq_class(n))) {}
Scalar::Scalar(const mpq_class& q) : node_(detail::mk_rat(q)) {}

int Scalar::sign() const { return detail::sign_of(node_); }

bool Scalar::is_rational() const { return node_->level == 0; }

mpq_class Scalar::rational_value() const {
    if (node_->level != 0)
        throw contract_error("rational_value() on a non-rational scalar");
    return node_->q;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(detail::add(a.node(), b.node()));
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(detail::sub(a.node(), b.node()));
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(detail::mul(a.node(), b.node()));
}
Scalar operator-(const Scalar& a) { return Scalar(detail::neg(a.node())); }

Partial<Scalar> recip(const Scalar& a) {
    if (a.sign() == 0) return Partial<Scalar>::undefined(Undef::Zero);
    return Partial<Scalar>(Scalar(detail::recip_nz(a.node())));
}

Partial<Scalar> div(const Scalar& a, const Scalar& b) {
    if (b.sign() == 0) return Partial<Scalar>::undefined(Undef::Zero);
    return Partial<Scalar>(Scalar(detail::mul(a.node(), detail::recip_nz(b.node()))));
}

Partial<Scalar> sqrt(const Scalar& a) {
    if (a.sign() < 0) return Partial<Scalar>::undefined(Undef::Negative);
    return Partial<Scalar>(Scalar(detail::sqrt_nonneg(a.node())));
}

void set_precision_cap_bits(long bits) {
    if (bits < 64) throw contract_error("precision cap must be >= 64 bits");
    detail::g_cap_bits.store(bits);
}
long precision_cap_bits() { return detail::g_cap_bits.load(); }

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------

namespace {

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return "(/ " + q.get_num().get_str() + " " + q.get_den().get_str() + ")";
}

void expr_string_rec(const NodeRef& n, std::string& out, long& budget);

void sqrt_term(const NodeRef& n, std::string& out, long& budget) {
    // hi * (sqrt rad), omitting a unit coefficient
    std::string rads;
    expr_string_rec(detail::radicand_of(*n), rads, budget);
    if (n->hi->level == 0 && n->hi->q == 1) {
        out += "(sqrt " + rads + ")";
    } else {
        out += "(* ";
        expr_string_rec(n->hi, out, budget);
        out += " (sqrt " + rads + "))";
    }
}

void expr_string_rec(const NodeRef& n, std::string& out, long& budget) {
    if (budget-- <= 0) {
        out += "...";
        return;
    }
    if (n->level == 0) {
        out += rat_str(n->q);
        return;
    }
    bool lo_zero = n->lo->level == 0 && n->lo->q == 0;
    if (lo_zero) {
        sqrt_term(n, out, budget);
        return;
    }
    out += "(+ ";
    expr_string_rec(n->lo, out, budget);
    out += " ";
    sqrt_term(n, out, budget);
    out += ")";
}

}  // namespace

std::string Scalar::expr_string() const {
    std::string out;
    long budget = 20000;
    expr_string_rec(node_, out, budget);
    return out;
}

Scalar::DecimalApprox Scalar::decimal_approx(int digits) const {
    if (digits < 1) digits = 1;
    mpfr_prec_t p = std::max<long>(
        128, std::min<long>(detail::g_cap_bits.load(), digits * 4 + 64));
    detail::Interval iv(p);
    detail::eval_interval(node_, p, iv);
    mpfr_t mid, err;
    mpfr_init2(mid, p);
    mpfr_init2(err, p);
    mpfr_add(mid, iv.lo, iv.hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(err, iv.hi, iv.lo, MPFR_RNDU);
    mpfr_div_2ui(err, err, 1, MPFR_RNDU);

    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, mid);
    DecimalApprox r;
    r.decimal = s ? s : "nan";
    mpfr_free_str(s);
    mpfr_t printed;
    mpfr_init2(printed, p);
    mpfr_set_str(printed, r.decimal.c_str(), 10, MPFR_RNDN);
    mpfr_sub(printed, printed, mid, MPFR_RNDA);
    mpfr_abs(printed, printed, MPFR_RNDU);
    mpfr_add(err, err, printed, MPFR_RNDU);
    r.error = mpfr_get_d(err, MPFR_RNDU);
    mpfr_clears(mid, err, printed, (mpfr_ptr) nullptr);
    return r;
}

double Scalar::approx() const {
    detail::Interval iv(128);
    detail::eval_interval(node_, 128, iv);
    mpfr_t mid;
    mpfr_init2(mid, 128);
    mpfr_add(mid, iv.lo, iv.hi, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    double d = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return d;
}

// ---------------------------------------------------------------------------
// Expression parser for CLI arguments: rationals, + - * /, sqrt(...).
// ---------------------------------------------------------------------------

namespace {

struct ScalarParser {
    const std::string& s;
    size_t i = 0;
    std::string err;

    explicit ScalarParser(const std::string& text) : s(text) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    Partial<Scalar> fail(const std::string& m) {
        if (err.empty()) err = m + " at offset " + std::to_string(i);
        return Partial<Scalar>::undefined(Undef::PrecondViolated);
    }

    Partial<Scalar> parse() {
        auto v = expr();
        skip();
        if (v.defined() && i != s.size()) return fail("trailing input");
        return v;
    }

    Partial<Scalar> expr() {
        auto acc = term();
        while (acc.defined()) {
            skip();
            if (eat('+')) {
                auto r = term();
                if (!r.defined()) return r;
                acc = Partial<Scalar>(*acc + *r);
            } else if (i < s.size() && s[i] == '-') {
                ++i;
                auto r = term();
                if (!r.defined()) return r;
                acc = Partial<Scalar>(*acc - *r);
            } else {
                break;
            }
        }
        return acc;
    }

    Partial<Scalar> term() {
        auto acc = unary();
        while (acc.defined()) {
            skip();
            if (eat('*')) {
                auto r = unary();
                if (!r.defined()) return r;
                acc = Partial<Scalar>(*acc * *r);
            } else if (i < s.size() && s[i] == '/') {
                ++i;
                auto r = unary();
                if (!r.defined()) return r;
                auto q = div(*acc, *r);
                if (!q.defined()) return fail("division by zero");
                acc = q;
            } else {
                break;
            }
        }
        return acc;
    }

    Partial<Scalar> unary() {
        skip();
        if (eat('-')) {
            auto v = unary();
            if (!v.defined()) return v;
            return Partial<Scalar>(-*v);
        }
        return primary();
    }

    Partial<Scalar> primary() {
        skip();
        if (i >= s.size()) return fail("unexpected end of input");
        if (s.compare(i, 4, "sqrt") == 0) {
            i += 4;
            if (!eat('(')) return fail("expected ( after sqrt");
            auto v = expr();
            if (!v.defined()) return v;
            if (!eat(')')) return fail("expected )");
            auto r = euclid::sqrt(*v);
            if (!r.defined()) return fail("sqrt of a negative value");
            return r;
        }
        if (eat('(')) {
            auto v = expr();
            if (!v.defined()) return v;
            if (!eat(')')) return fail("expected )");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            mpz_class n(s.substr(i, j - i));
            i = j;
            return Partial<Scalar>(Scalar(mpq_class(n)));
        }
        return fail("expected a number, sqrt(...) or (...)");
    }
};

}  // namespace

Partial<Scalar> parse_scalar(const std::string& text, std::string* error) {
    ScalarParser p(text);
    auto v = p.parse();
    if (!v.defined() && error) *error = p.err;
    return v;
}

}  // namespace euclid
