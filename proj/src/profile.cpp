#include "charp/profile.hpp"

#include <algorithm>
#include <bit>

#include "charp/errors.hpp"

namespace charp {

int valuation(long long n, int p) {
    if (n <= 0) throw precondition_error("valuation needs n >= 1");
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case0: return "Case0";
        case CaseTag::Case1: return "Case1";
        case CaseTag::Case2: return "Case2";
        case CaseTag::Case3: return "Case3";
        case CaseTag::Case4: return "Case4";
        case CaseTag::Case5: return "Case5";
    }
    return "?";
}

namespace {

std::vector<int> normalize_delta(std::vector<int> delta) {
    std::sort(delta.begin(), delta.end());
    delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
    if (delta.empty()) throw precondition_error("support set must be nonempty");
    if (delta.front() < 1) throw precondition_error("support elements must be >= 1");
    return delta;
}

long long ipow(int b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

BasicInvariants basics_sorted(const std::vector<int>& delta, int p) {
    BasicInvariants inv{};
    inv.m = delta.front();
    inv.e = valuation(delta.front(), p);
    for (int n : delta) inv.e = std::min(inv.e, valuation(n, p));
    inv.q = 0;
    for (int n : delta) {
        if (valuation(n, p) == inv.e) {
            inv.q = n;
            break;
        }
    }
    if (inv.m == inv.q) {
        inv.k = 1;
    } else {
        inv.k = 0;
        for (int n : delta) {
            if (n >= inv.q) break;
            int kn = ceil_div(inv.q - n, ipow(p, valuation(n, p)) - ipow(p, inv.e));
            inv.k = std::max(inv.k, kn);
        }
    }
    inv.dbar = 2 * inv.q - inv.m;
    inv.d = inv.q + static_cast<int>(ipow(p, inv.e)) * (inv.k - 1);
    return inv;
}

std::vector<int> lambda_bar_sorted(const std::vector<int>& delta, int p) {
    BasicInvariants inv = basics_sorted(delta, p);
    std::vector<int> out;
    for (int n = inv.m + 1; n <= inv.dbar; ++n)
        if (valuation(n, p) > inv.e) out.push_back(n);
    if (!std::binary_search(out.begin(), out.end(), inv.q)) {
        out.push_back(inv.q);
        std::sort(out.begin(), out.end());
    }
    return out;
}

// Case dispatch and Lambda sets for a support with e(Delta) = 0; fills the
// profile in place.  `prof` already carries delta, the basic invariants and,
// when val(m) > 0, the sub-support data.
void dispatch_e0(SupportProfile& prof) {
    const int p = prof.p;
    int em = valuation(prof.m, p);
    if (em == 0) {
        prof.case_tag = CaseTag::Case0;
        return;
    }
    const auto& sub = *prof.sub;
    BasicInvariants b0 = basics_sorted(sub.delta0, p);

    auto range_with = [&](auto pred) {
        std::vector<int> out;
        for (int n = prof.q; n <= prof.d; ++n)
            if (pred(valuation(n, p))) out.push_back(n);
        return out;
    };

    if (em == sub.e0) {
        prof.case_tag = CaseTag::Case1;
        prof.lambda = range_with([&](int v) { return v < em; });
        return;
    }

    // em > e0 >= 1 from here on: Lambda = Lambda0 together with a tail over
    // [q, d] whose valuation filter depends on the case
    for (int n : lambda_bar_sorted(sub.delta0, p))
        if (n < prof.q) prof.lambda0.push_back(n);

    std::vector<int> tail;
    if (sub.e0 > 1) {
        prof.case_tag = CaseTag::Case2;
        prof.lambda1 = range_with([](int) { return true; });
        tail = prof.lambda1;
    } else if (prof.k > ceil_div(prof.q - sub.q0, ipow(p, sub.e0) - 1)) {
        prof.case_tag = CaseTag::Case3;
        prof.lambda1 = range_with([](int) { return true; });
        tail = prof.lambda1;
    } else if (b0.k >= (prof.q - sub.q0) / p) {
        prof.case_tag = CaseTag::Case4;
        prof.lambda1_prime = range_with([](int v) { return v != 1; });
        tail = prof.lambda1_prime;
    } else {
        prof.case_tag = CaseTag::Case5;
        prof.lambda1_dblprime = range_with([](int v) { return v == 0; });
        tail = prof.lambda1_dblprime;
    }
    prof.lambda = prof.lambda0;
    prof.lambda.insert(prof.lambda.end(), tail.begin(), tail.end());
    std::sort(prof.lambda.begin(), prof.lambda.end());
}

}  // namespace

BasicInvariants basic_invariants(const std::vector<int>& delta, int p) {
    if (p < 2) throw precondition_error("characteristic must be >= 2");
    return basics_sorted(normalize_delta(delta), p);
}

std::vector<int> lambda_bar(const std::vector<int>& delta, int p) {
    return lambda_bar_sorted(normalize_delta(delta), p);
}

SupportProfile profile_of(const std::vector<int>& delta_in, int p) {
    if (p < 2) throw precondition_error("characteristic must be >= 2");
    SupportProfile prof;
    prof.delta = normalize_delta(delta_in);
    prof.p = p;
    BasicInvariants inv = basics_sorted(prof.delta, p);
    prof.m = inv.m;
    prof.e = inv.e;
    prof.q = inv.q;
    prof.k = inv.k;
    prof.dbar = inv.dbar;
    prof.d = inv.d;
    prof.lambda_bar = lambda_bar_sorted(prof.delta, p);
    if (valuation(prof.m, p) > prof.e) {
        SupportProfile::Sub sub;
        for (int n : prof.delta)
            if (n < prof.q) sub.delta0.push_back(n);
        BasicInvariants b0 = basics_sorted(sub.delta0, p);
        sub.e0 = b0.e;
        sub.q0 = b0.q;
        prof.sub = sub;
    }

    if (prof.e == 0) {
        dispatch_e0(prof);
        return prof;
    }

    // e(Delta) > 0: case and Lambda sets come from the compressed support,
    // scaled back by p^e.
    long long s = ipow(p, prof.e);
    std::vector<int> bar;
    bar.reserve(prof.delta.size());
    for (int n : prof.delta) bar.push_back(static_cast<int>(n / s));
    SupportProfile rec = profile_of(bar, p);
    prof.case_tag = rec.case_tag;
    auto scaled = [&](const std::vector<int>& v) {
        std::vector<int> out;
        out.reserve(v.size());
        for (int n : v) out.push_back(static_cast<int>(n * s));
        return out;
    };
    prof.lambda = scaled(rec.lambda);
    prof.lambda0 = scaled(rec.lambda0);
    prof.lambda1 = scaled(rec.lambda1);
    prof.lambda1_prime = scaled(rec.lambda1_prime);
    prof.lambda1_dblprime = scaled(rec.lambda1_dblprime);
    return prof;
}

std::pair<std::vector<int>, CaseTag> lambda_of(const std::vector<int>& delta, int p) {
    std::vector<int> sorted = normalize_delta(delta);
    BasicInvariants inv = basics_sorted(sorted, p);
    if (inv.e != 0)
        throw precondition_error("lambda_of requires e(Delta) = 0; compress the support first");
    SupportProfile prof = profile_of(sorted, p);
    return {prof.lambda, prof.case_tag};
}

SupportProfile profile_of_series(const Series& f) {
    if (f.is_zero()) throw precondition_error("cannot profile the zero series");
    if (*f.ord() < 1)
        throw precondition_error("profile requires ord >= 1 (strip the constant term)");
    SupportProfile prof = profile_of(f.support(), f.ctx()->p());
    if (prof.q > f.trunc())
        throw engine_error("support exceeds certified range");  // unreachable: support <= trunc
    return prof;
}

BoundReport verify_bound(const std::vector<int>& delta, int p) {
    SupportProfile prof = profile_of(delta, p);
    if (prof.e != 0) throw precondition_error("verify_bound requires e(Delta) = 0");
    BoundReport rep;
    rep.lambda_size = static_cast<int>(prof.lambda.size());
    rep.bound = prof.q / p;
    rep.equality_required = (prof.m == p);
    rep.ok = rep.lambda_size <= rep.bound && (!rep.equality_required || rep.lambda_size == rep.bound);
    return rep;
}

void enumerate_supports(int p, int nmax, std::optional<int> max_size,
                        const std::function<void(const SupportProfile&)>& fn) {
    if (nmax < 1 || nmax > 24)
        throw budget_error("enumerate_supports handles 1 <= nmax <= 24");
    std::vector<int> val(nmax + 1, 0);
    for (int n = 1; n <= nmax; ++n) val[n] = valuation(n, p);
    const uint32_t total = 1u << nmax;
    std::vector<int> delta;
    for (uint32_t mask = 1; mask < total; ++mask) {
        if (max_size && std::popcount(mask) > *max_size) continue;
        bool tame = false;  // some element prime to p
        for (int n = 1; n <= nmax && !tame; ++n)
            if ((mask >> (n - 1)) & 1u) tame = (val[n] == 0);
        if (!tame) continue;
        delta.clear();
        for (int n = 1; n <= nmax; ++n)
            if ((mask >> (n - 1)) & 1u) delta.push_back(n);
        fn(profile_of(delta, p));
    }
}

}  // namespace charp
