#ifndef CHARP_PSERIES_HPP
#define CHARP_PSERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charp/ff.hpp"

namespace charp {

// A truncated univariate formal power series: coefficients are known
// exactly for exponents 0..trunc and unknown beyond.  Stored sparsely;
// absent exponents are zero, stored coefficients are never zero.
class Series {
  public:
    static Series zero(const Ctx& ctx, int trunc);
    static Series monomial(const FieldElem& c, int exp, int trunc);
    static Series from_terms(const Ctx& ctx, const std::map<int, FieldElem>& terms, int trunc);
    // The identity substitution x.
    static Series x(const Ctx& ctx, int trunc);

    const Ctx& ctx() const { return ctx_; }
    int trunc() const { return trunc_; }
    const std::map<int, FieldElem>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Order (lowest exponent); nullopt marks the zero jet.
    std::optional<int> ord() const;
    std::vector<int> support() const;
    // Coefficient at n; n must be within the certified range.
    FieldElem coeff(int n) const;

    // Drop exponents above k; the result is certified to min(trunc, k).
    Series jet(int k) const;
    // Declare the coefficients in (trunc, t] to be zero.  Only callers that
    // know the series exactly (polynomial data, determinacy arguments) may
    // raise the certified range.
    Series padded_to(int t) const;
    Series embedded(const Ctx& target) const;

    std::string to_string() const;

    friend bool operator==(const Series&, const Series&);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  private:
    Ctx ctx_;
    int trunc_ = 0;
    std::map<int, FieldElem> terms_;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series mul(const Series& f, const Series& g);
Series scale(const FieldElem& c, const Series& f);
Series pow(const Series& f, int n);

// Formal derivative; exponents divisible by p die.
Series derivative(const Series& f);

// Substitution f(phi(x)) for ord(phi) >= 1, exact up to min of the truncs.
Series compose(const Series& f, const Series& phi);

// A coordinate change: a series with ord = 1 and invertible linear
// coefficient, acting on series by substitution.
class CoordChange {
  public:
    explicit CoordChange(Series s);
    static CoordChange identity(const Ctx& ctx, int trunc);
    // a * x
    static CoordChange linear(const FieldElem& a, int trunc);
    // x + u * x^(l+1)
    static CoordChange shift(const FieldElem& u, int l, int trunc);

    const Series& series() const { return s_; }
    const Ctx& ctx() const { return s_.ctx(); }
    int trunc() const { return s_.trunc(); }
    FieldElem linear_coeff() const { return s_.coeff(1); }
    bool is_identity() const;
    CoordChange embedded(const Ctx& target) const;
    std::string to_string() const { return s_.to_string(); }

  private:
    Series s_;
};

Series compose(const Series& f, const CoordChange& phi);
// Function composition: (outer . inner)(x) = outer(inner(x)), so that
// compose(compose(f, a), b) == compose(f, compose(a, b)).
CoordChange compose(const CoordChange& outer, const CoordChange& inner);
// Compositional inverse modulo x^(trunc+1).
CoordChange inverse(const CoordChange& phi);

// Frobenius compression: f(x) = bar(x^(p^level)) with level maximal, i.e.
// level is the minimal p-adic valuation over the support.  Coefficients are
// reused verbatim; exponents divide by p^level.
struct BarForm {
    Series bar;
    int level;
};
BarForm compress(const Series& f);
// Inverse of compress: multiply exponents by p^level.
Series expand(const Series& bar, int level);

// Lift a coordinate change for the compressed series to one for the
// original: the lifted change has the same exponents and p^level-th roots
// of the coefficients, so that lifted(x)^(p^level) = psi(x^(p^level)).
CoordChange transport_change(const CoordChange& psi, int level);

}  // namespace charp

#endif
