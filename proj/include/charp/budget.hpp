#ifndef CHARP_BUDGET_HPP
#define CHARP_BUDGET_HPP

namespace charp {

// Desk-scale resource caps.  All defaults are far above what the shipped
// verification suites need; they exist so that a runaway request fails with
// budget_error instead of grinding.
struct Budget {
    // Maximum extension degree over the prime field.
    int max_degree = 24;
    // Largest field that exhaustive element searches (root finding,
    // subfield embedding) will sweep.
    long long max_enumeration = 65536;
    // Maximum number of jets |F|^d the orbit oracle will materialize.
    long long max_jets = 1000000;
};

}  // namespace charp

#endif
