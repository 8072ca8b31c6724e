#pragma once

#include "skein/context.hpp"
#include "skein/rational.hpp"

#include <map>
#include <optional>

namespace skein {

// Multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept in graded-lex order; zero coefficients are never stored.
class LaurentPoly {
  public:
    using TermMap = std::map<ExpVec, Rat, GradedLexLess>;

    LaurentPoly() = default;
    explicit LaurentPoly(VarContext ctx) : ctx_(std::move(ctx)) {}

    static LaurentPoly constant(const VarContext& ctx, const Rat& c);
    static LaurentPoly monomial(const VarContext& ctx, const ExpVec& e, const Rat& c = Rat(1));
    static LaurentPoly variable(const VarContext& ctx, const std::string& name, int32_t power = 1);

    const VarContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant value; zero polynomial reports 0.
    Rat constant_value() const;

    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& e, const Rat& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    bool operator==(const LaurentPoly& o) const { return ctx_ == o.ctx_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Leading term under graded-lex (largest).
    const std::pair<const ExpVec, Rat>& leading() const;
    Rat leading_coeff() const { return is_zero() ? Rat(0) : leading().second; }

    // Componentwise minimum of exponents: the monomial content exponent.
    ExpVec min_exponents() const;
    // Divide every term by t^e.
    LaurentPoly shifted(const ExpVec& e) const;

    // gcd of |numerators| / lcm of denominators over all coefficients.
    Rat rational_content() const;

    long long total_degree_max() const; // max total degree (0 for zero poly)
    long long total_degree_min() const;
    std::optional<long long> homogeneous_degree() const;

    // t_i -> -t_i^-1 style inversion of all exponents (bar involution).
    LaurentPoly bar() const;

    // Substitute variable i by the monomial with exponent row rows[i] in the
    // target context.
    LaurentPoly substitute_monomials(const std::vector<ExpVec>& rows,
                                     const VarContext& target) const;

    // Exact evaluation at a rational point (all variables assigned).
    Rat evaluate(const std::vector<Rat>& point) const;

    // max degree in one variable
    int32_t degree_in(std::size_t var) const;
    int32_t low_degree_in(std::size_t var) const;

  private:
    VarContext ctx_;
    TermMap terms_;
};

LaurentPoly operator*(const Rat& c, const LaurentPoly& p);

// gcd of two Laurent polynomials, ignoring monomial and rational content:
// returns a primitive polynomial g (no monomial content, integer-primitive,
// positive leading coefficient) such that g divides both arguments and is
// maximal. gcd(0, b) = primitive part of b.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact division; throws std::domain_error if the division is not exact.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

// Whether b divides a exactly.
bool poly_divides(const LaurentPoly& b, const LaurentPoly& a);

} // namespace skein
