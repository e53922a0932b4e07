#include "charp/pseries.hpp"

#include <algorithm>
#include <sstream>

namespace charp {

namespace {

const Ctx& require_same_ctx(const Series& a, const Series& b) {
    if (!same_field(a.ctx(), b.ctx()))
        throw precondition_error("series context mismatch: " + a.ctx()->to_string() + " vs " +
                                 b.ctx()->to_string());
    return a.ctx();
}

}  // namespace

Series Series::zero(const Ctx& ctx, int trunc) {
    if (trunc < 0) throw precondition_error("truncation must be >= 0");
    Series s;
    s.ctx_ = ctx;
    s.trunc_ = trunc;
    return s;
}

Series Series::monomial(const FieldElem& c, int exp, int trunc) {
    Series s = zero(c.ctx(), trunc);
    if (exp < 0) throw precondition_error("exponent must be >= 0");
    if (exp > trunc) throw precondition_error("monomial exponent exceeds truncation");
    if (!c.is_zero()) s.terms_.emplace(exp, c);
    return s;
}

Series Series::from_terms(const Ctx& ctx, const std::map<int, FieldElem>& terms, int trunc) {
    Series s = zero(ctx, trunc);
    for (const auto& [n, c] : terms) {
        if (n < 0) throw precondition_error("exponent must be >= 0");
        if (n > trunc) throw precondition_error("term exponent exceeds truncation");
        FieldElem e = embed(c, ctx);
        if (!e.is_zero()) s.terms_.emplace(n, std::move(e));
    }
    return s;
}

Series Series::x(const Ctx& ctx, int trunc) {
    return monomial(FieldElem::one(ctx), 1, trunc);
}

std::optional<int> Series::ord() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::vector<int> Series::support() const {
    std::vector<int> out;
    out.reserve(terms_.size());
    for (const auto& [n, c] : terms_) out.push_back(n);
    return out;
}

FieldElem Series::coeff(int n) const {
    if (n < 0 || n > trunc_)
        throw precondition_error("coefficient " + std::to_string(n) +
                                 " outside certified range 0.." + std::to_string(trunc_));
    auto it = terms_.find(n);
    if (it == terms_.end()) return FieldElem::zero(ctx_);
    return it->second;
}

Series Series::jet(int k) const {
    Series out = zero(ctx_, std::min(trunc_, k));
    for (const auto& [n, c] : terms_) {
        if (n <= k) out.terms_.emplace(n, c);
    }
    return out;
}

Series Series::padded_to(int t) const {
    if (t <= trunc_) return *this;
    Series out = *this;
    out.trunc_ = t;
    return out;
}

Series Series::embedded(const Ctx& target) const {
    Series out = zero(target, trunc_);
    for (const auto& [n, c] : terms_) out.terms_.emplace(n, embed(c, target));
    return out;
}

std::string Series::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        bool simple = cs.find('+') == std::string::npos;
        if (n == 0) {
            os << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (!c.is_one()) os << (simple ? cs : "(" + cs + ")") << "*";
        os << "x";
        if (n != 1) os << "^" << n;
    }
    return os.str();
}

bool operator==(const Series& a, const Series& b) {
    return same_field(a.ctx(), b.ctx()) && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

Series add(const Series& f, const Series& g) {
    const Ctx& ctx = require_same_ctx(f, g);
    int trunc = std::min(f.trunc(), g.trunc());
    std::map<int, FieldElem> terms;
    for (const auto& [n, c] : f.terms())
        if (n <= trunc) terms.emplace(n, c);
    for (const auto& [n, c] : g.terms()) {
        if (n > trunc) continue;
        auto it = terms.find(n);
        if (it == terms.end()) {
            terms.emplace(n, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return Series::from_terms(ctx, terms, trunc);
}

Series sub(const Series& f, const Series& g) {
    return add(f, scale(-FieldElem::one(g.ctx()), g));
}

Series mul(const Series& f, const Series& g) {
    const Ctx& ctx = require_same_ctx(f, g);
    int trunc = std::min(f.trunc(), g.trunc());
    std::map<int, FieldElem> terms;
    for (const auto& [n1, c1] : f.terms()) {
        if (n1 > trunc) break;
        for (const auto& [n2, c2] : g.terms()) {
            int n = n1 + n2;
            if (n > trunc) break;
            FieldElem prod = c1 * c2;
            auto it = terms.find(n);
            if (it == terms.end()) {
                terms.emplace(n, std::move(prod));
            } else {
                it->second = it->second + prod;
            }
        }
    }
    return Series::from_terms(ctx, terms, trunc);
}

Series scale(const FieldElem& c, const Series& f) {
    Series out = Series::zero(f.ctx(), f.trunc());
    if (c.is_zero()) return out;
    std::map<int, FieldElem> terms;
    FieldElem cc = embed(c, f.ctx());
    for (const auto& [n, coeff] : f.terms()) terms.emplace(n, cc * coeff);
    return Series::from_terms(f.ctx(), terms, f.trunc());
}

Series pow(const Series& f, int n) {
    if (n < 0) throw precondition_error("series power must be >= 0");
    Series acc = Series::monomial(FieldElem::one(f.ctx()), 0, f.trunc());
    Series base = f;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

Series derivative(const Series& f) {
    int trunc = std::max(0, f.trunc() - 1);
    std::map<int, FieldElem> terms;
    for (const auto& [n, c] : f.terms()) {
        if (n == 0 || n - 1 > trunc) continue;
        FieldElem nc = FieldElem::of_int(f.ctx(), n) * c;
        if (!nc.is_zero()) terms.emplace(n - 1, nc);
    }
    return Series::from_terms(f.ctx(), terms, trunc);
}

Series compose(const Series& f, const Series& phi) {
    const Ctx& ctx = require_same_ctx(f, phi);
    if (!phi.is_zero() && *phi.ord() < 1)
        throw precondition_error("substituted series must have order >= 1");
    int trunc = std::min(f.trunc(), phi.trunc());
    if (f.is_zero()) return Series::zero(ctx, trunc);

    // Horner over the sparse support, multiplying by phi^gap between
    // consecutive exponents.
    std::vector<std::pair<int, FieldElem>> desc(f.terms().rbegin(), f.terms().rend());
    Series acc = Series::zero(ctx, trunc);
    int prev = -1;
    for (const auto& [n, c] : desc) {
        if (prev < 0) {
            acc = Series::monomial(c, 0, trunc);
        } else {
            acc = mul(acc, pow(phi.jet(trunc), prev - n));
            acc = add(acc, Series::monomial(c, 0, trunc));
        }
        prev = n;
    }
    if (prev > 0) acc = mul(acc, pow(phi.jet(trunc), prev));
    return acc;
}

// ---------------------------------------------------------------------------
// CoordChange
// ---------------------------------------------------------------------------

CoordChange::CoordChange(Series s) : s_(std::move(s)) {
    auto o = s_.ord();
    if (!o || *o != 1) throw precondition_error("coordinate change must have order 1");
    if (s_.coeff(1).is_zero()) throw precondition_error("coordinate change needs invertible linear term");
}

CoordChange CoordChange::identity(const Ctx& ctx, int trunc) {
    return CoordChange(Series::x(ctx, trunc));
}

CoordChange CoordChange::linear(const FieldElem& a, int trunc) {
    return CoordChange(Series::monomial(a, 1, trunc));
}

CoordChange CoordChange::shift(const FieldElem& u, int l, int trunc) {
    if (l < 1) throw precondition_error("shift amount must be >= 1");
    Series s = Series::x(u.ctx(), trunc);
    if (l + 1 <= trunc) s = add(s, Series::monomial(u, l + 1, trunc));
    return CoordChange(std::move(s));
}

bool CoordChange::is_identity() const {
    return s_.terms().size() == 1 && s_.coeff(1).is_one();
}

CoordChange CoordChange::embedded(const Ctx& target) const {
    return CoordChange(s_.embedded(target));
}

Series compose(const Series& f, const CoordChange& phi) { return compose(f, phi.series()); }

CoordChange compose(const CoordChange& outer, const CoordChange& inner) {
    return CoordChange(compose(outer.series(), inner.series()));
}

CoordChange inverse(const CoordChange& phi) {
    int trunc = phi.trunc();
    const Ctx& ctx = phi.ctx();
    FieldElem a1_inv = inverse(phi.linear_coeff());
    Series psi = Series::monomial(a1_inv, 1, trunc);
    for (int j = 2; j <= trunc; ++j) {
        Series err = sub(compose(phi.series(), psi), Series::x(ctx, trunc));
        auto o = err.ord();
        if (!o) break;
        if (*o < j) throw engine_error("inverse iteration regressed");
        if (*o > trunc) break;
        psi = add(psi, Series::monomial(-(err.coeff(*o) * a1_inv), *o, trunc));
    }
    Series check = sub(compose(phi.series(), psi), Series::x(ctx, trunc));
    if (!check.is_zero()) throw engine_error("coordinate change inversion failed");
    return CoordChange(std::move(psi));
}

// ---------------------------------------------------------------------------
// Frobenius compression
// ---------------------------------------------------------------------------

BarForm compress(const Series& f) {
    if (f.is_zero()) throw precondition_error("cannot compress the zero series");
    if (*f.ord() < 1) throw precondition_error("cannot compress a series with constant term");
    int p = f.ctx()->p();
    int level = -1;
    for (const auto& [n, c] : f.terms()) {
        int e = 0;
        int v = n;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        level = (level < 0) ? e : std::min(level, e);
        if (level == 0) break;
    }
    if (level == 0) return {f, 0};
    int scale = 1;
    for (int i = 0; i < level; ++i) scale *= p;
    std::map<int, FieldElem> terms;
    for (const auto& [n, c] : f.terms()) terms.emplace(n / scale, c);
    return {Series::from_terms(f.ctx(), terms, f.trunc() / scale), level};
}

Series expand(const Series& bar, int level) {
    if (level < 0) throw precondition_error("compression level must be >= 0");
    if (level == 0) return bar;
    int p = bar.ctx()->p();
    long long scale = 1;
    for (int i = 0; i < level; ++i) scale *= p;
    std::map<int, FieldElem> terms;
    for (const auto& [n, c] : bar.terms()) terms.emplace(static_cast<int>(n * scale), c);
    long long t = (static_cast<long long>(bar.trunc()) + 1) * scale - 1;
    return Series::from_terms(bar.ctx(), terms, static_cast<int>(t));
}

CoordChange transport_change(const CoordChange& psi, int level) {
    if (level < 0) throw precondition_error("compression level must be >= 0");
    if (level == 0) return psi;
    std::map<int, FieldElem> terms;
    for (const auto& [i, a] : psi.series().terms()) terms.emplace(i, inverse_frobenius(a, level));
    return CoordChange(Series::from_terms(psi.ctx(), terms, psi.trunc()));
}

}  // namespace charp
