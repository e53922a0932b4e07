#ifndef CHARP_FF_HPP
#define CHARP_FF_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charp/budget.hpp"
#include "charp/errors.hpp"

namespace charp {

class FieldCtx;
using Ctx = std::shared_ptr<const FieldCtx>;

// Arithmetic context for F_{p^deg}, presented as F_p[g]/(modulus) with a
// monic modulus of degree deg.  Contexts are immutable and shareable; an
// extension keeps a reference to the context it extends together with the
// image of that context's generator, so towers built on demand stand in for
// the algebraic closure.
class FieldCtx {
  public:
    int p() const { return p_; }
    int deg() const { return deg_; }
    // Coefficients of the modulus, constant term first, length deg+1, monic.
    const std::vector<int>& modulus() const { return modulus_; }
    const Ctx& parent() const { return parent_; }
    // Representation of the parent generator inside this field (empty when
    // there is no parent).
    const std::vector<int>& parent_gen_image() const { return parent_gen_image_; }
    // p^deg, the number of elements.
    long long order() const { return order_; }
    // Serialized as "p=2,deg=2,modulus=g^2+g+1".
    std::string to_string() const;

  private:
    int p_ = 0;
    int deg_ = 0;
    std::vector<int> modulus_;
    Ctx parent_;
    std::vector<int> parent_gen_image_;
    long long order_ = 0;

    friend Ctx prime_field(int);
    friend Ctx extend(const Ctx&, int, const Budget&);
    friend Ctx make_field(int, const std::vector<int>&);
};

// The prime field F_p (modulus g, generator image 0).  Cached per p.
Ctx prime_field(int p);

// Extension of degree `times` over `base`: a context of degree
// base->deg()*times over F_p whose modulus is the lexicographically smallest
// monic irreducible of that degree (coefficient vectors compared constant
// term first).  The embedding of `base` is found and verified on the
// generator.  extend(ctx, 1) returns ctx itself.
Ctx extend(const Ctx& base, int times, const Budget& budget = {});

// Convenience: extend(prime_field(p), deg).
Ctx make_field(int p, int deg, const Budget& budget = {});

// Field with a caller-supplied modulus over F_p (validated: monic,
// irreducible).  Used for the CLI --modulus override.
Ctx make_field(int p, const std::vector<int>& modulus);

// Structural equality: same p, degree, modulus and parent chain.  Two
// contexts built by identical extension steps compare equal even when they
// are distinct objects.
bool same_field(const Ctx& a, const Ctx& b);

// True when `anc` appears in the parent chain of `desc` (reflexively).
bool is_ancestor(const Ctx& anc, const Ctx& desc);

// The larger of two tower-comparable contexts; precondition_error when the
// contexts are incomparable.
Ctx common_field(const Ctx& a, const Ctx& b);

// An element of F_{p^deg} in the polynomial basis: a coefficient vector of
// length deg over F_p.
class FieldElem {
  public:
    FieldElem() = default;

    static FieldElem zero(const Ctx& ctx);
    static FieldElem one(const Ctx& ctx);
    static FieldElem of_int(const Ctx& ctx, long long n);
    static FieldElem generator(const Ctx& ctx);
    static FieldElem from_rep(const Ctx& ctx, std::vector<int> rep);

    const Ctx& ctx() const { return ctx_; }
    const std::vector<int>& rep() const { return rep_; }
    bool is_zero() const;
    bool is_one() const;

    // Polynomial string in the generator, highest power first: "g+1",
    // "2*g^2+1", "0".
    std::string to_string() const;

    FieldElem operator-() const;
    friend FieldElem operator+(const FieldElem&, const FieldElem&);
    friend FieldElem operator-(const FieldElem&, const FieldElem&);
    friend FieldElem operator*(const FieldElem&, const FieldElem&);
    friend FieldElem operator/(const FieldElem&, const FieldElem&);
    friend bool operator==(const FieldElem&, const FieldElem&);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  private:
    Ctx ctx_;
    std::vector<int> rep_;
};

FieldElem inverse(const FieldElem& a);
FieldElem pow(const FieldElem& a, long long n);

// a^(p^i) and its inverse (unique p^i-th root; always exists, Frobenius is
// an automorphism of a finite field).
FieldElem frobenius(const FieldElem& a, int i = 1);
FieldElem inverse_frobenius(const FieldElem& a, int i = 1);

// Move an element into a structurally equal context or up its tower.
FieldElem embed(const FieldElem& a, const Ctx& target);

// Deterministic enumeration: index = sum rep[i] * p^i, so 0 -> 0, 1 -> 1,
// p -> g, ...
FieldElem elem_from_index(const Ctx& ctx, long long index);
long long elem_index(const FieldElem& a);

struct RootResult {
    FieldElem root;  // lives in `ctx`, which extends the input context
    Ctx ctx;
};

// Root of sum_e terms[e] * X^(p^e) + constant = 0.  The levels e >= 0 index
// p-power exponents (level 0 is the linear term).  At least one terms[e]
// must be nonzero.  The root is searched in the common context of the
// inputs first, then in one minimal-degree extension; such roots always
// exist over the closure, so failure is only ever a budget_error.
RootResult solve_additive(const std::map<int, FieldElem>& terms,
                          const FieldElem& constant,
                          const Budget& budget = {});

// Root of an arbitrary nonconstant polynomial (coefficients ascending) in
// the coefficients' context or a minimal extension of it.  Returns nullopt
// only when the polynomial has no root in any extension within budget that
// was actually needed -- i.e. never for the callers in this library -- and
// throws budget_error when the search would exceed the caps.
std::optional<RootResult> find_root(const std::vector<FieldElem>& poly,
                                    const Budget& budget = {});

// Monic irreducibility over F_p (coefficients ascending, reduced mod p).
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace charp

#endif
