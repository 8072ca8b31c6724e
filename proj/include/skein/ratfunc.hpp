#pragma once

#include "skein/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace skein {

// Thrown when a specialization or division hits a vanishing denominator.
struct DegeneratePoint : std::runtime_error {
    explicit DegeneratePoint(const std::string& what) : std::runtime_error(what) {}
};

// Normalized quotient of Laurent polynomials. Canonical form: the denominator
// is integer-primitive with positive leading coefficient (graded-lex) and has
// no monomial content; numerator and denominator share no polynomial factor.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(LaurentPoly num);
    RatFunc(LaurentPoly num, LaurentPoly den);

    static RatFunc constant(const VarContext& ctx, const Rat& c) {
        return RatFunc(LaurentPoly::constant(ctx, c));
    }
    static RatFunc variable(const VarContext& ctx, const std::string& name, int32_t power = 1) {
        return RatFunc(LaurentPoly::variable(ctx, name, power));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const VarContext& context() const { return num_.context(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inv() const;
    RatFunc pow(long e) const;

    RatFunc operator+(const Rat& c) const { return *this + constant(context(), c); }
    RatFunc operator-(const Rat& c) const { return *this - constant(context(), c); }
    RatFunc operator*(const Rat& c) const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    // The defining semantics: a/b = c/d iff a*d = c*b.
    bool equals_cross(const RatFunc& o) const;

    RatFunc bar() const;

    // t_i -> prod target_j^{P[i][j]}
    RatFunc substitute_monomials(const std::vector<ExpVec>& rows, const VarContext& target) const;

    Rat evaluate(const std::vector<Rat>& point) const;
    Rat evaluate(const std::map<std::string, Rat>& point) const;

    // deg num - deg den when both are homogeneous
    std::optional<long long> homogeneous_degree() const;

  private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

RatFunc operator*(const Rat& c, const RatFunc& f);

// Integer substitution matrix between contexts; composition corresponds to
// matrix product.
struct SubstMatrix {
    VarContext source;
    VarContext target;
    std::vector<ExpVec> rows; // one per source variable

    SubstMatrix() = default;
    SubstMatrix(VarContext src, VarContext tgt, std::vector<ExpVec> r);

    SubstMatrix compose(const SubstMatrix& then) const; // apply *this, then `then`
    static SubstMatrix identity(const VarContext& ctx);
};

RatFunc monomial_substitute(const RatFunc& f, const SubstMatrix& P);

} // namespace skein
