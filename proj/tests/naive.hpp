// Brute-force reference implementations kept deliberately independent of the
// library internals.  Expected values in the test suites are recomputed here
// (dense integer arithmetic, exhaustive searches) before being trusted.
#ifndef CHARP_TESTS_NAIVE_HPP
#define CHARP_TESTS_NAIVE_HPP

#include <map>
#include <vector>

namespace naive {

// Dense polynomials over F_p, constant term first, plain int coefficients.
using Poly = std::vector<int>;

inline Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, int p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return trim(out);
}

inline Poly add(const Poly& a, const Poly& b, int p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        int v = 0;
        if (i < a.size()) v += a[i];
        if (i < b.size()) v += b[i];
        out[i] = v % p;
    }
    return trim(out);
}

inline Poly power(Poly a, int n, int p) {
    Poly acc = {1};
    while (n > 0) {
        if (n & 1) acc = mul(acc, a, p);
        a = mul(a, a, p);
        n >>= 1;
    }
    return acc;
}

inline Poly mod(Poly a, const Poly& m, int p) {
    a = trim(std::move(a));
    while (a.size() >= m.size()) {
        int shift = static_cast<int>(a.size() - m.size());
        int c = a.back();  // m monic
        for (size_t i = 0; i < m.size(); ++i)
            a[i + shift] = ((a[i + shift] - c * m[i]) % p + p) % p;
        a = trim(std::move(a));
    }
    return a;
}

inline bool divides(const Poly& d, Poly a, int p) { return mod(std::move(a), d, p).empty(); }

// Irreducibility by trial division against every monic divisor of degree
// <= deg/2.
inline bool irreducible_trial_division(const Poly& f, int p) {
    int n = static_cast<int>(f.size()) - 1;
    if (n <= 0 || f.back() != 1) return false;
    if (n == 1) return true;
    for (int t = 1; 2 * t <= n; ++t) {
        long long count = 1;
        for (int i = 0; i < t; ++i) count *= p;
        for (long long r = 0; r < count; ++r) {
            Poly d(t + 1, 0);
            d[t] = 1;
            long long v = r;
            for (int i = 0; i < t; ++i) {
                d[i] = static_cast<int>(v % p);
                v /= p;
            }
            if (divides(d, f, p)) return false;
        }
    }
    return true;
}

// Arithmetic in F_p[g]/(modulus): element = Poly of degree < deg(modulus).
struct Fq {
    int p;
    Poly modulus;  // monic
    Poly mulq(const Poly& a, const Poly& b) const { return mod(mul(a, b, p), modulus, p); }
    Poly addq(const Poly& a, const Poly& b) const { return add(a, b, p); }
    Poly powq(Poly a, long long n) const {
        Poly acc = {1};
        while (n > 0) {
            if (n & 1) acc = mulq(acc, a);
            a = mulq(a, a);
            n >>= 1;
        }
        return acc;
    }
    long long size() const {
        long long s = 1;
        for (size_t i = 1; i < modulus.size(); ++i) s *= p;
        return s;
    }
    Poly element(long long idx) const {
        Poly out(modulus.size() - 1, 0);
        for (size_t i = 0; i + 1 < modulus.size(); ++i) {
            out[i] = static_cast<int>(idx % p);
            idx /= p;
        }
        return trim(out);
    }
};

// Dense truncated series over F_p as plain coefficient vectors (index =
// exponent), for checking substitution expansions in prime fields.
using Dense = std::vector<int>;

inline Dense dense_mul(const Dense& a, const Dense& b, int p, int trunc) {
    Dense out(trunc + 1, 0);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j <= trunc; ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

// f(phi(x)) mod x^(trunc+1), fully expanded.
inline Dense dense_compose(const Dense& f, const Dense& phi, int p, int trunc) {
    Dense out(trunc + 1, 0);
    Dense phipow(trunc + 1, 0);
    phipow[0] = 1;
    for (int n = 0; n < static_cast<int>(f.size()); ++n) {
        if (n > 0) phipow = dense_mul(phipow, phi, p, trunc);
        if (f[n] == 0) continue;
        for (int t = 0; t <= trunc; ++t) out[t] = (out[t] + f[n] * phipow[t]) % p;
    }
    return out;
}

inline std::map<int, int> dense_support(const Dense& a) {
    std::map<int, int> out;
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (a[i] != 0) out[i] = a[i];
    return out;
}

}  // namespace naive

#endif
