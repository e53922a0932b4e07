#ifndef CHARP_PROFILE_HPP
#define CHARP_PROFILE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "charp/pseries.hpp"

namespace charp {

// p-adic valuation of n >= 1.
int valuation(long long n, int p);

// The five normal-form shapes a support set can dispatch to, plus the
// monomial case.
enum class CaseTag { Case0, Case1, Case2, Case3, Case4, Case5 };
std::string to_string(CaseTag tag);

// The numerical invariants of a support set Delta:
//   m     lowest exponent (multiplicity)
//   e     minimal p-adic valuation over Delta
//   q     smallest element of minimal valuation; mu = q - 1 when e = 0
//   k     elimination depth: 1 when m = q, otherwise the max over n in
//         Delta, m <= n < q, of ceil((q-n) / (p^val(n) - p^e))
//   dbar  2q - m, the coarse determinacy bound
//   d     q + p^e*(k-1), the sharp determinacy bound
struct BasicInvariants {
    int m, e, q, k, dbar, d;
};
BasicInvariants basic_invariants(const std::vector<int>& delta, int p);

// {n : m < n <= dbar, val(n) > e} together with q.
std::vector<int> lambda_bar(const std::vector<int>& delta, int p);

// The moduli exponent set Lambda(Delta) with its case tag; requires
// e(Delta) = 0 (compress by the Frobenius level first otherwise).
std::pair<std::vector<int>, CaseTag> lambda_of(const std::vector<int>& delta, int p);

// Everything the classification needs to know about a support set.  For
// e(Delta) > 0 the case tag and the Lambda sets are computed on the
// compressed support and scaled back by p^e; the numeric invariants are
// computed directly (both routes agree).
struct SupportProfile {
    std::vector<int> delta;
    int p = 0;
    int m = 0, e = 0, q = 0, k = 0, dbar = 0, d = 0;
    CaseTag case_tag = CaseTag::Case0;
    std::vector<int> lambda_bar;
    std::vector<int> lambda0;
    std::vector<int> lambda1;
    std::vector<int> lambda1_prime;
    std::vector<int> lambda1_dblprime;
    std::vector<int> lambda;
    // Present when val(m) > e: the part of Delta below q and its own (e, q).
    struct Sub {
        std::vector<int> delta0;
        int e0 = 0, q0 = 0;
    };
    std::optional<Sub> sub;
};

SupportProfile profile_of(const std::vector<int>& delta, int p);

// Profile of the support of a nonzero series with ord >= 1.
SupportProfile profile_of_series(const Series& f);

// The size bound #Lambda(Delta) <= floor(q/p), with equality forced when
// m = p.  `ok` is false only on a counterexample (never, if the library is
// correct).
struct BoundReport {
    int lambda_size = 0;
    int bound = 0;
    bool equality_required = false;
    bool ok = false;
};
BoundReport verify_bound(const std::vector<int>& delta, int p);

// Stream every nonempty Delta subset of [1, nmax] with e(Delta) = 0,
// optionally capped in size, in deterministic (bitmask-ascending) order.
void enumerate_supports(int p, int nmax, std::optional<int> max_size,
                        const std::function<void(const SupportProfile&)>& fn);

}  // namespace charp

#endif
