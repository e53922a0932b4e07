#include "charp/ff.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <sstream>

namespace charp {

namespace {

// ---------------------------------------------------------------------------
// Dense polynomial arithmetic over F_p (coefficient vectors, constant first).
// Only what context construction and element inversion need.
// ---------------------------------------------------------------------------

using FpPoly = std::vector<int>;

int mod_inverse_int(int a, int p) {
    int t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        int quo = r / new_r;
        int tmp = t - quo * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quo * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw precondition_error("not invertible mod p");
    return ((t % p) + p) % p;
}

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, int p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(out);
    return out;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, int p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        int v = 0;
        if (i < a.size()) v += a[i];
        if (i < b.size()) v += p - b[i];
        out[i] = v % p;
    }
    fp_trim(out);
    return out;
}

// Remainder of a modulo monic m.
FpPoly fp_mod(FpPoly a, const FpPoly& m, int p) {
    fp_trim(a);
    int dm = fp_deg(m);
    while (fp_deg(a) >= dm) {
        int shift = fp_deg(a) - dm;
        int c = a.back();
        for (int i = 0; i <= dm; ++i)
            a[i + shift] = ((a[i + shift] - c * m[i]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, int p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        int lead = b.back();
        if (lead != 1) {
            int inv = mod_inverse_int(lead, p);
            for (auto& c : b) c = c * inv % p;
        }
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Inverse of a modulo monic irreducible m (extended Euclid).
FpPoly fp_inverse_mod(FpPoly a, const FpPoly& m, int p) {
    FpPoly r0 = m, r1 = fp_mod(std::move(a), m, p);
    FpPoly t0 = {}, t1 = {1};
    if (r1.empty()) throw precondition_error("division by zero");
    while (fp_deg(r1) > 0) {
        // long division r0 = q*r1 + r2 tracking t
        FpPoly q;
        FpPoly r2 = r0;
        int d1 = fp_deg(r1);
        int lead_inv = mod_inverse_int(r1.back(), p);
        while (fp_deg(r2) >= d1) {
            int shift = fp_deg(r2) - d1;
            int c = r2.back() * lead_inv % p;
            if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, 0);
            q[shift] = (q[shift] + c) % p;
            for (int i = 0; i <= d1; ++i)
                r2[i + shift] = ((r2[i + shift] - c * r1[i]) % p + p) % p;
            fp_trim(r2);
        }
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
        if (r1.empty()) throw precondition_error("element not invertible (modulus not irreducible?)");
    }
    // r1 is a nonzero constant; scale t1 by its inverse
    int c_inv = mod_inverse_int(r1[0], p);
    for (auto& c : t1) c = c * c_inv % p;
    return fp_mod(std::move(t1), m, p);
}

// X^(p^k) mod m, computed by k successive p-th powers.
FpPoly fp_frob_power_of_x(const FpPoly& m, int p, int k) {
    FpPoly x = {0, 1};
    FpPoly t = fp_mod(x, m, p);
    for (int step = 0; step < k; ++step) {
        FpPoly acc = {1};
        FpPoly base = t;
        int e = p;
        while (e > 0) {
            if (e & 1) acc = fp_mod(fp_mul(acc, base, p), m, p);
            base = fp_mod(fp_mul(base, base, p), m, p);
            e >>= 1;
        }
        t = std::move(acc);
    }
    return t;
}

// Rabin's criterion: monic f of degree n is irreducible over F_p iff
// X^(p^n) = X mod f and gcd(X^(p^(n/r)) - X, f) = 1 for every prime r | n.
bool fp_irreducible(const FpPoly& f, int p) {
    int n = fp_deg(f);
    if (n <= 0) return false;
    if (f.back() != 1) return false;
    if (n == 1) return true;
    FpPoly x = {0, 1};
    if (!fp_sub(fp_frob_power_of_x(f, p, n), x, p).empty()) return false;
    int rem = n;
    std::vector<int> primes;
    for (int r = 2; r * r <= rem; ++r) {
        if (rem % r == 0) {
            primes.push_back(r);
            while (rem % r == 0) rem /= r;
        }
    }
    if (rem > 1) primes.push_back(rem);
    for (int prime : primes) {
        FpPoly g = fp_gcd(f, fp_sub(fp_frob_power_of_x(f, p, n / prime), x, p), p);
        if (fp_deg(g) != 0) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree n over F_p
// (coefficient vectors compared constant term first).  Cached so repeated
// context construction is deterministic and cheap.
FpPoly smallest_irreducible(int p, int n) {
    static std::map<std::pair<int, int>, FpPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    long long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= p;
        if (total > (1LL << 40)) throw budget_error("modulus search space too large");
    }
    // Digit 0 of the counter is the constant coefficient and must vary
    // slowest to enumerate in constant-first lexicographic order.
    for (long long r = 0; r < total; ++r) {
        FpPoly cand(n + 1, 0);
        cand[n] = 1;
        // decompose r in base p; the constant coefficient is the most
        // significant digit so ascending r is ascending lex order
        long long digits = r;
        for (int i = n - 1; i >= 0; --i) {
            cand[i] = static_cast<int>(digits % p);
            digits /= p;
        }
        if (fp_irreducible(cand, p)) {
            cache.emplace(key, cand);
            return cand;
        }
    }
    throw engine_error("no irreducible polynomial found (impossible)");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; 1LL * d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long pow_ll_checked(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldCtx construction
// ---------------------------------------------------------------------------

Ctx prime_field(int p) {
    if (!is_prime(p)) throw precondition_error("characteristic must be prime, got " + std::to_string(p));
    static std::map<int, Ctx> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<FieldCtx>();
    ctx->p_ = p;
    ctx->deg_ = 1;
    ctx->modulus_ = {0, 1};  // g itself: F_p = F_p[g]/(g), generator image 0
    ctx->order_ = p;
    cache.emplace(p, ctx);
    return ctx;
}

namespace {

// Image of the parent generator inside the freshly built field: a root of
// the parent modulus.  The roots lie in the subfield of order p^(parent
// degree), which is the kernel of (Frobenius^parent_deg - id) as an
// F_p-linear map; Gaussian elimination plus a sweep of that small kernel
// avoids enumerating the whole new field.
std::vector<int> embed_generator(const FpPoly& parent_modulus, int parent_deg,
                                 const FieldCtx& child, const Budget& budget);

}  // namespace

Ctx extend(const Ctx& base, int times, const Budget& budget) {
    if (!base) throw precondition_error("null context");
    if (times < 1) throw precondition_error("extension degree must be >= 1");
    if (times == 1) return base;
    int n = base->deg() * times;
    if (n > budget.max_degree)
        throw budget_error("extension degree " + std::to_string(n) + " exceeds budget " +
                           std::to_string(budget.max_degree));
    auto ctx = std::make_shared<FieldCtx>();
    ctx->p_ = base->p();
    ctx->deg_ = n;
    ctx->modulus_ = smallest_irreducible(base->p(), n);
    ctx->order_ = pow_ll_checked(base->p(), n, (1LL << 62));
    ctx->parent_ = base;
    ctx->parent_gen_image_ = embed_generator(base->modulus(), base->deg(), *ctx, budget);
    return ctx;
}

Ctx make_field(int p, int deg, const Budget& budget) {
    return extend(prime_field(p), deg, budget);
}

Ctx make_field(int p, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw precondition_error("characteristic must be prime");
    FpPoly m = modulus;
    for (auto& c : m) c = ((c % p) + p) % p;
    fp_trim(m);
    if (fp_deg(m) < 1) throw precondition_error("modulus must have degree >= 1");
    if (m.back() != 1) throw precondition_error("modulus must be monic");
    if (!fp_irreducible(m, p)) throw precondition_error("modulus is reducible over F_p");
    if (fp_deg(m) == 1) {
        if (m == FpPoly{0, 1}) return prime_field(p);
        throw precondition_error("degree-1 modulus must be g itself");
    }
    auto ctx = std::make_shared<FieldCtx>();
    ctx->p_ = p;
    ctx->deg_ = fp_deg(m);
    ctx->order_ = pow_ll_checked(p, ctx->deg_, (1LL << 62));
    ctx->modulus_ = std::move(m);
    ctx->parent_ = prime_field(p);
    ctx->parent_gen_image_ = std::vector<int>(ctx->deg_, 0);  // root of g is 0
    return ctx;
}

bool same_field(const Ctx& a, const Ctx& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->p() != b->p() || a->deg() != b->deg() || a->modulus() != b->modulus()) return false;
    return true;
}

bool is_ancestor(const Ctx& anc, const Ctx& desc) {
    Ctx cur = desc;
    while (cur) {
        if (same_field(anc, cur)) return true;
        cur = cur->parent();
    }
    return false;
}

Ctx common_field(const Ctx& a, const Ctx& b) {
    if (same_field(a, b)) return a;
    if (is_ancestor(a, b)) return b;
    if (is_ancestor(b, a)) return a;
    throw precondition_error("contexts are not tower-comparable: " + a->to_string() + " vs " +
                             b->to_string());
}

// ---------------------------------------------------------------------------
// FieldElem
// ---------------------------------------------------------------------------

FieldElem FieldElem::zero(const Ctx& ctx) {
    FieldElem e;
    e.ctx_ = ctx;
    e.rep_.assign(ctx->deg(), 0);
    return e;
}

FieldElem FieldElem::one(const Ctx& ctx) { return of_int(ctx, 1); }

FieldElem FieldElem::of_int(const Ctx& ctx, long long n) {
    FieldElem e = zero(ctx);
    long long v = ((n % ctx->p()) + ctx->p()) % ctx->p();
    e.rep_[0] = static_cast<int>(v);
    return e;
}

FieldElem FieldElem::generator(const Ctx& ctx) {
    FieldElem e = zero(ctx);
    if (ctx->deg() >= 2) e.rep_[1] = 1;
    // in the prime field the generator is the root of g, i.e. 0
    return e;
}

FieldElem FieldElem::from_rep(const Ctx& ctx, std::vector<int> rep) {
    if (static_cast<int>(rep.size()) != ctx->deg())
        throw precondition_error("representation length does not match field degree");
    for (auto& c : rep) {
        if (c < 0 || c >= ctx->p()) c = ((c % ctx->p()) + ctx->p()) % ctx->p();
    }
    FieldElem e;
    e.ctx_ = ctx;
    e.rep_ = std::move(rep);
    return e;
}

bool FieldElem::is_zero() const {
    return std::all_of(rep_.begin(), rep_.end(), [](int c) { return c == 0; });
}

bool FieldElem::is_one() const {
    if (rep_.empty() || rep_[0] != 1) return false;
    return std::all_of(rep_.begin() + 1, rep_.end(), [](int c) { return c == 0; });
}

std::string FieldElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(rep_.size()) - 1; i >= 0; --i) {
        int c = rep_[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "g";
            if (i != 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

namespace {

const Ctx& require_same_ctx(const FieldElem& a, const FieldElem& b) {
    if (!same_field(a.ctx(), b.ctx()))
        throw precondition_error("field context mismatch: " + a.ctx()->to_string() + " vs " +
                                 b.ctx()->to_string() + " (embed explicitly first)");
    return a.ctx();
}

}  // namespace

FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    int p = ctx_->p();
    for (auto& c : out.rep_) c = (p - c) % p;
    return out;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    const Ctx& ctx = require_same_ctx(a, b);
    FieldElem out = a;
    for (int i = 0; i < ctx->deg(); ++i) out.rep_[i] = (out.rep_[i] + b.rep_[i]) % ctx->p();
    return out;
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    const Ctx& ctx = require_same_ctx(a, b);
    FieldElem out = a;
    for (int i = 0; i < ctx->deg(); ++i)
        out.rep_[i] = (out.rep_[i] + ctx->p() - b.rep_[i]) % ctx->p();
    return out;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    const Ctx& ctx = require_same_ctx(a, b);
    FpPoly prod = fp_mod(fp_mul(a.rep_, b.rep_, ctx->p()), ctx->modulus(), ctx->p());
    prod.resize(ctx->deg(), 0);
    FieldElem out;
    out.ctx_ = a.ctx_;
    out.rep_ = std::move(prod);
    return out;
}

FieldElem inverse(const FieldElem& a) {
    if (a.is_zero()) throw precondition_error("division by zero");
    const Ctx& ctx = a.ctx();
    FpPoly inv = fp_inverse_mod(a.rep(), ctx->modulus(), ctx->p());
    inv.resize(ctx->deg(), 0);
    return FieldElem::from_rep(ctx, std::move(inv));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    return a * inverse(b);
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (!same_field(a.ctx(), b.ctx())) return false;
    return a.rep() == b.rep();
}

FieldElem pow(const FieldElem& a, long long n) {
    if (n < 0) return pow(inverse(a), -n);
    FieldElem acc = FieldElem::one(a.ctx());
    FieldElem base = a;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

FieldElem frobenius(const FieldElem& a, int i) {
    if (i < 0) throw precondition_error("frobenius power must be >= 0");
    int k = a.ctx()->deg();
    int steps = i % k;  // Frobenius has order k on F_{p^k}
    FieldElem out = a;
    for (int s = 0; s < steps; ++s) out = pow(out, a.ctx()->p());
    return out;
}

FieldElem inverse_frobenius(const FieldElem& a, int i) {
    if (i < 0) throw precondition_error("frobenius power must be >= 0");
    int k = a.ctx()->deg();
    int steps = static_cast<int>((static_cast<long long>(k - 1) * (i % k)) % k);
    FieldElem out = a;
    for (int s = 0; s < steps; ++s) out = pow(out, a.ctx()->p());
    return out;
}

FieldElem embed(const FieldElem& a, const Ctx& target) {
    if (same_field(a.ctx(), target)) {
        return FieldElem::from_rep(target, a.rep());
    }
    // walk up from target to a's context, then lift one tower step at a time
    std::vector<Ctx> chain;
    Ctx cur = target;
    while (cur && !same_field(cur, a.ctx())) {
        chain.push_back(cur);
        cur = cur->parent();
    }
    if (!cur)
        throw precondition_error("cannot embed " + a.ctx()->to_string() + " into " +
                                 target->to_string());
    FieldElem val = a;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Ctx& child = *it;
        // evaluate the parent-basis polynomial at the stored generator image
        FieldElem img = FieldElem::from_rep(child, child->parent_gen_image());
        FieldElem acc = FieldElem::zero(child);
        const auto& rep = val.rep();
        for (int i = static_cast<int>(rep.size()) - 1; i >= 0; --i) {
            acc = acc * img + FieldElem::of_int(child, rep[i]);
        }
        val = acc;
    }
    return val;
}

FieldElem elem_from_index(const Ctx& ctx, long long index) {
    if (index < 0 || index >= ctx->order()) throw precondition_error("element index out of range");
    std::vector<int> rep(ctx->deg(), 0);
    for (int i = 0; i < ctx->deg(); ++i) {
        rep[i] = static_cast<int>(index % ctx->p());
        index /= ctx->p();
    }
    return FieldElem::from_rep(ctx, std::move(rep));
}

long long elem_index(const FieldElem& a) {
    long long idx = 0;
    for (int i = a.ctx()->deg() - 1; i >= 0; --i) idx = idx * a.ctx()->p() + a.rep()[i];
    return idx;
}

// ---------------------------------------------------------------------------
// Polynomials with FieldElem coefficients: root finding support
// ---------------------------------------------------------------------------

namespace {

using CPoly = std::vector<FieldElem>;

void cp_trim(CPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int cp_deg(const CPoly& a) { return static_cast<int>(a.size()) - 1; }

CPoly cp_mul(const CPoly& a, const CPoly& b, const Ctx& ctx) {
    if (a.empty() || b.empty()) return {};
    CPoly out(a.size() + b.size() - 1, FieldElem::zero(ctx));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    cp_trim(out);
    return out;
}

CPoly cp_mod(CPoly a, const CPoly& m, const Ctx& ctx) {
    cp_trim(a);
    int dm = cp_deg(m);
    FieldElem lead_inv = inverse(m.back());
    while (cp_deg(a) >= dm) {
        int shift = cp_deg(a) - dm;
        FieldElem c = a.back() * lead_inv;
        for (int i = 0; i <= dm; ++i) a[i + shift] = a[i + shift] - c * m[i];
        cp_trim(a);
    }
    (void)ctx;
    return a;
}

CPoly cp_sub(const CPoly& a, const CPoly& b, const Ctx& ctx) {
    CPoly out(std::max(a.size(), b.size()), FieldElem::zero(ctx));
    for (size_t i = 0; i < out.size(); ++i) {
        FieldElem v = FieldElem::zero(ctx);
        if (i < a.size()) v = v + a[i];
        if (i < b.size()) v = v - b[i];
        out[i] = v;
    }
    cp_trim(out);
    return out;
}

CPoly cp_gcd(CPoly a, CPoly b, const Ctx& ctx) {
    cp_trim(a);
    cp_trim(b);
    while (!b.empty()) {
        CPoly r = cp_mod(a, b, ctx);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FieldElem cp_eval(const CPoly& a, const FieldElem& x) {
    FieldElem acc = FieldElem::zero(x.ctx());
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = acc * x + a[i];
    return acc;
}

// T^(p^k) mod m for a residue T, by k successive p-th powers.
CPoly cp_pow_p_steps(CPoly t, const CPoly& m, const Ctx& ctx, int k) {
    for (int s = 0; s < k; ++s) {
        CPoly acc = {FieldElem::one(ctx)};
        CPoly base = t;
        int e = ctx->p();
        while (e > 0) {
            if (e & 1) acc = cp_mod(cp_mul(acc, base, ctx), m, ctx);
            base = cp_mod(cp_mul(base, base, ctx), m, ctx);
            e >>= 1;
        }
        t = std::move(acc);
    }
    return t;
}

std::optional<FieldElem> exhaustive_root(const CPoly& poly, const Ctx& ctx, const Budget& budget) {
    if (ctx->order() > budget.max_enumeration)
        throw budget_error("root search over " + std::to_string(ctx->order()) +
                           " elements exceeds enumeration budget");
    for (long long i = 0; i < ctx->order(); ++i) {
        FieldElem cand = elem_from_index(ctx, i);
        if (cp_eval(poly, cand).is_zero()) return cand;
    }
    return std::nullopt;
}

// Smallest d >= 1 such that the polynomial has an irreducible factor of
// degree d over its coefficient field: first d with a nontrivial
// gcd(poly, X^(q^d) - X).
int minimal_factor_degree(const CPoly& poly, const Ctx& ctx) {
    CPoly x = {FieldElem::zero(ctx), FieldElem::one(ctx)};
    CPoly t = cp_mod(x, poly, ctx);
    for (int d = 1; d <= cp_deg(poly); ++d) {
        t = cp_pow_p_steps(std::move(t), poly, ctx, ctx->deg());  // t = X^(q^d) mod poly
        CPoly g = cp_gcd(poly, cp_sub(t, x, ctx), ctx);
        if (cp_deg(g) >= 1) return d;
    }
    throw engine_error("polynomial of degree " + std::to_string(cp_deg(poly)) +
                       " has no factor of degree <= its own degree (impossible)");
}

// Exhaustive-search threshold for trying the current field before looking
// at factor degrees.
constexpr long long kTryCurrentFieldCap = 4096;

}  // namespace

std::optional<RootResult> find_root(const std::vector<FieldElem>& poly_in, const Budget& budget) {
    if (poly_in.empty()) throw precondition_error("empty polynomial");
    Ctx ctx = poly_in.front().ctx();
    for (const auto& c : poly_in) ctx = common_field(ctx, c.ctx());
    CPoly poly;
    poly.reserve(poly_in.size());
    for (const auto& c : poly_in) poly.push_back(embed(c, ctx));
    cp_trim(poly);
    if (poly.empty()) throw precondition_error("zero polynomial has every root");
    if (cp_deg(poly) == 0) return std::nullopt;  // nonzero constant: no root anywhere
    if (cp_deg(poly) == 1) {
        return RootResult{-(poly[0] / poly[1]), ctx};
    }

    if (ctx->order() <= kTryCurrentFieldCap) {
        if (auto r = exhaustive_root(poly, ctx, budget)) return RootResult{*r, ctx};
    }

    int d = minimal_factor_degree(poly, ctx);
    if (d == 1 && ctx->order() <= kTryCurrentFieldCap)
        throw engine_error("factor degree 1 but exhaustive search found no root");
    Ctx bigger = (d == 1) ? ctx : extend(ctx, d, budget);
    CPoly lifted;
    lifted.reserve(poly.size());
    for (const auto& c : poly) lifted.push_back(embed(c, bigger));
    if (auto r = exhaustive_root(lifted, bigger, budget)) return RootResult{*r, bigger};
    throw engine_error("no root found in the extension carrying a factor (impossible)");
}

RootResult solve_additive(const std::map<int, FieldElem>& terms, const FieldElem& constant,
                          const Budget& budget) {
    bool some_nonzero = false;
    Ctx ctx = constant.ctx();
    long long max_exp = 1;
    for (const auto& [level, coeff] : terms) {
        if (level < 0) throw precondition_error("additive term level must be >= 0");
        if (!coeff.is_zero()) some_nonzero = true;
        ctx = common_field(ctx, coeff.ctx());
        long long e = 1;
        for (int i = 0; i < level; ++i) {
            e *= ctx->p();
            if (e > 4096) throw budget_error("additive polynomial degree too large");
        }
        max_exp = std::max(max_exp, e);
    }
    if (!some_nonzero) throw precondition_error("additive polynomial must have a nonzero term");

    std::vector<FieldElem> poly(static_cast<size_t>(max_exp) + 1, FieldElem::zero(ctx));
    poly[0] = embed(constant, ctx);
    for (const auto& [level, coeff] : terms) {
        long long e = 1;
        for (int i = 0; i < level; ++i) e *= ctx->p();
        poly[static_cast<size_t>(e)] = poly[static_cast<size_t>(e)] + embed(coeff, ctx);
    }
    auto root = find_root(poly, budget);
    if (!root)
        throw engine_error("additive polynomial with constant term has no root (impossible)");
    return *root;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
    if (!is_prime(p)) throw precondition_error("characteristic must be prime");
    FpPoly f = poly;
    for (auto& c : f) c = ((c % p) + p) % p;
    fp_trim(f);
    return fp_irreducible(f, p);
}

// ---------------------------------------------------------------------------
// Generator embedding for extensions
// ---------------------------------------------------------------------------

namespace {

std::vector<int> embed_generator(const FpPoly& parent_modulus, int parent_deg,
                                 const FieldCtx& child, const Budget& budget) {
    int p = child.p();
    int n = child.deg();

    // trivial parent (prime field, modulus g): the root is 0
    if (parent_deg == 1) return std::vector<int>(n, 0);

    long long subfield_size = pow_ll_checked(p, parent_deg, budget.max_enumeration);
    if (subfield_size > budget.max_enumeration)
        throw budget_error("embedding search space exceeds enumeration budget");

    // Build the matrix of a |-> a^(p^parent_deg) - a in the polynomial basis
    // of the child field and extract a kernel basis over F_p.
    auto child_ctx = std::make_shared<FieldCtx>(child);
    std::vector<std::vector<int>> cols(n);
    for (int j = 0; j < n; ++j) {
        std::vector<int> rep(n, 0);
        rep[j] = 1;
        FieldElem basis = FieldElem::from_rep(child_ctx, rep);
        FieldElem image = frobenius(basis, parent_deg) - basis;
        cols[j] = image.rep();
    }
    // Gaussian elimination on the n x n matrix (columns = images) to find
    // kernel vectors.
    std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) mat[i][j] = cols[j][i];
    std::vector<int> pivot_col_of_row(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int sel = -1;
        for (int row = rank; row < n; ++row)
            if (mat[row][col] != 0) {
                sel = row;
                break;
            }
        if (sel < 0) continue;
        std::swap(mat[sel], mat[rank]);
        int inv = mod_inverse_int(mat[rank][col], p);
        for (int c2 = 0; c2 < n; ++c2) mat[rank][c2] = mat[rank][c2] * inv % p;
        for (int row = 0; row < n; ++row) {
            if (row == rank || mat[row][col] == 0) continue;
            int f = mat[row][col];
            for (int c2 = 0; c2 < n; ++c2)
                mat[row][c2] = ((mat[row][c2] - f * mat[rank][c2]) % p + p) % p;
        }
        pivot_col_of_row[rank] = col;
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col_of_row[r]] = true;
    std::vector<std::vector<int>> kernel;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<int> v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col_of_row[r]] = (p - mat[r][col] % p) % p;
        kernel.push_back(std::move(v));
    }
    // kernel = the subfield F_{p^parent_deg}; dimension must be parent_deg
    if (static_cast<int>(kernel.size()) != parent_deg)
        throw engine_error("subfield kernel has wrong dimension");

    // sweep all F_p-combinations of the kernel basis for a root of the
    // parent modulus; enumeration order is the combination counter, which is
    // deterministic
    long long combos = subfield_size;
    for (long long idx = 0; idx < combos; ++idx) {
        std::vector<int> rep(n, 0);
        long long v = idx;
        for (size_t b = 0; b < kernel.size(); ++b) {
            int c = static_cast<int>(v % p);
            v /= p;
            if (c == 0) continue;
            for (int i = 0; i < n; ++i) rep[i] = (rep[i] + c * kernel[b][i]) % p;
        }
        FieldElem cand = FieldElem::from_rep(child_ctx, rep);
        // evaluate the parent modulus (an F_p polynomial) at cand
        FieldElem acc = FieldElem::zero(child_ctx);
        for (int i = fp_deg(parent_modulus); i >= 0; --i)
            acc = acc * cand + FieldElem::of_int(child_ctx, parent_modulus[i]);
        if (acc.is_zero() && !cand.is_zero()) return cand.rep();
    }
    throw engine_error("parent modulus has no root in the extension (impossible)");
}

}  // namespace

}  // namespace charp
