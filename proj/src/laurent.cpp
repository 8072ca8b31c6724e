#include "skein/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

LaurentPoly LaurentPoly::constant(const VarContext& ctx, const Rat& c) {
    LaurentPoly p(ctx);
    if (c != 0) p.terms_.emplace(ExpVec(ctx.arity(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const VarContext& ctx, const ExpVec& e, const Rat& c) {
    if (e.size() != ctx.arity()) throw std::invalid_argument("monomial arity mismatch");
    if (ctx.mode == RingMode::poly)
        for (auto x : e)
            if (x < 0) throw std::domain_error("negative exponent in poly mode");
    LaurentPoly p(ctx);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(const VarContext& ctx, const std::string& name, int32_t power) {
    int i = ctx.index_of(name);
    if (i < 0) throw std::invalid_argument("unknown variable " + name);
    ExpVec e(ctx.arity(), 0);
    e[static_cast<std::size_t>(i)] = power;
    return monomial(ctx, e);
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

Rat LaurentPoly::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw std::domain_error("not a constant polynomial");
    return terms_.begin()->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    if (e.size() != ctx_.arity()) throw std::invalid_argument("term arity mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ctx_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_same_context(ctx_, o.ctx_, "poly add");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    require_same_context(ctx_, o.ctx_, "poly sub");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_same_context(ctx_, o.ctx_, "poly mul");
    LaurentPoly r(ctx_);
    ExpVec e(ctx_.arity());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly r(ctx_);
    if (c == 0) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

const std::pair<const ExpVec, Rat>& LaurentPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

ExpVec LaurentPoly::min_exponents() const {
    if (is_zero()) return ExpVec(ctx_.arity(), 0);
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& shift) const {
    LaurentPoly r(ctx_);
    ExpVec e(ctx_.arity());
    for (const auto& [ea, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], -shift[i]);
        r.terms_.emplace(e, c);
    }
    return r;
}

Rat LaurentPoly::rational_content() const {
    if (is_zero()) return Rat(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    return r;
}

long long LaurentPoly::total_degree_max() const {
    long long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long d = 0;
        for (auto x : e) d += x;
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

long long LaurentPoly::total_degree_min() const {
    long long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long d = 0;
        for (auto x : e) d += x;
        if (first || d < best) best = d;
        first = false;
    }
    return best;
}

std::optional<long long> LaurentPoly::homogeneous_degree() const {
    if (is_zero()) return 0;
    long long d = total_degree_max();
    if (d != total_degree_min()) return std::nullopt;
    return d;
}

LaurentPoly LaurentPoly::bar() const {
    if (ctx_.mode != RingMode::laurent) throw std::domain_error("bar involution needs laurent mode");
    LaurentPoly r(ctx_);
    ExpVec e(ctx_.arity());
    for (const auto& [ea, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = -ea[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_monomials(const std::vector<ExpVec>& rows,
                                              const VarContext& target) const {
    if (rows.size() != ctx_.arity()) throw std::invalid_argument("substitution row count");
    for (const auto& r : rows)
        if (r.size() != target.arity()) throw std::invalid_argument("substitution column count");
    LaurentPoly out(target);
    ExpVec e(target.arity());
    for (const auto& [ea, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < ea.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] = checked_add(e[j], checked_mul(ea[i], rows[i][j]));
        out.add_term(e, c);
    }
    return out;
}

Rat LaurentPoly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != ctx_.arity()) throw std::invalid_argument("evaluation point arity");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                if (e[i] < 0) throw std::domain_error("negative power of zero");
                term = 0;
                break;
            }
            Rat p = point[i];
            int32_t k = e[i];
            if (k < 0) {
                p = Rat(p.get_den(), p.get_num());
                p.canonicalize();
                k = -k;
            }
            Rat powed(1);
            while (k > 0) {
                if (k & 1) powed *= p;
                p *= p;
                k >>= 1;
            }
            term *= powed;
        }
        acc += term;
    }
    return acc;
}

int32_t LaurentPoly::degree_in(std::size_t var) const {
    int32_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > d) d = e[var];
        first = false;
    }
    return d;
}

int32_t LaurentPoly::low_degree_in(std::size_t var) const {
    int32_t d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < d) d = e[var];
        first = false;
    }
    return d;
}

} // namespace skein
