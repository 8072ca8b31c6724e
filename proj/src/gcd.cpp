#include "skein/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace skein {

namespace {

// All helpers below work on "plain" polynomials: min exponents 0 per variable.

LaurentPoly make_plain(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.shifted(p.min_exponents());
}

// integer-primitive with positive leading coefficient
LaurentPoly primitive(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Rat c = p.rational_content();
    if (p.leading_coeff() < 0) c = -c;
    Rat inv(c.get_den(), c.get_num());
    inv.canonicalize();
    return p * inv;
}

int32_t deg_in(const LaurentPoly& p, std::size_t v) { return p.is_zero() ? -1 : p.degree_in(v); }

// Coefficient of x_v^k, as a polynomial with x_v-exponent zeroed.
LaurentPoly coeff_of(const LaurentPoly& p, std::size_t v, int32_t k) {
    LaurentPoly out(p.context());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        ExpVec e2 = e;
        e2[v] = 0;
        out.add_term(e2, c);
    }
    return out;
}

LaurentPoly times_var_pow(const LaurentPoly& p, std::size_t v, int32_t k) {
    if (k == 0 || p.is_zero()) return p;
    LaurentPoly out(p.context());
    for (const auto& [e, c] : p.terms()) {
        ExpVec e2 = e;
        e2[v] = checked_add(e2[v], k);
        out.add_term(e2, c);
    }
    return out;
}

bool involves(const LaurentPoly& p, std::size_t v) { return deg_in(p, v) > 0; }

// Pseudo-remainder of a by b with respect to variable v (deg_v b >= 1).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
    int32_t db = deg_in(b, v);
    LaurentPoly lb = coeff_of(b, v, db);
    int32_t da = deg_in(a, v);
    while (!a.is_zero() && (da = deg_in(a, v)) >= db) {
        LaurentPoly la = coeff_of(a, v, da);
        a = a * lb - times_var_pow(la * b, v, da - db);
    }
    return a;
}

LaurentPoly gcd_plain(LaurentPoly a, LaurentPoly b);

// gcd of all x_v-coefficients of p.
LaurentPoly content_wrt(const LaurentPoly& p, std::size_t v) {
    LaurentPoly g(p.context());
    for (int32_t k = 0; k <= deg_in(p, v); ++k) {
        LaurentPoly c = coeff_of(p, v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive(c) : gcd_plain(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

// Univariate gcd degree of images of a, b after substituting random small
// integers for every variable except v. Returns -1 when the trial was
// degenerate (leading coefficient collapsed).
int image_gcd_degree(const LaurentPoly& a, const LaurentPoly& b, std::size_t v,
                     std::mt19937_64& rng) {
    const std::size_t n = a.context().arity();
    std::vector<Rat> pt(n);
    std::uniform_int_distribution<int> dist(2, 97);
    for (std::size_t i = 0; i < n; ++i) pt[i] = Rat(dist(rng));
    auto image = [&](const LaurentPoly& p) {
        std::vector<Rat> img(static_cast<std::size_t>(deg_in(p, v)) + 1, Rat(0));
        for (const auto& [e, c] : p.terms()) {
            Rat t = c;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == v || e[i] == 0) continue;
                Rat powed(1);
                Rat base = pt[i];
                for (int32_t k = 0; k < e[i]; ++k) powed *= base;
                t *= powed;
            }
            img[static_cast<std::size_t>(e[v])] += t;
        }
        return img;
    };
    auto ia = image(a), ib = image(b);
    if (ia.back() == 0 || ib.back() == 0) return -1;
    // univariate Euclid over Q
    auto norm = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    norm(ia);
    norm(ib);
    while (!ib.empty()) {
        // ia mod ib
        while (ia.size() >= ib.size() && !ia.empty()) {
            Rat f = ia.back() / ib.back();
            std::size_t off = ia.size() - ib.size();
            for (std::size_t i = 0; i < ib.size(); ++i) ia[off + i] -= f * ib[i];
            norm(ia);
            if (ia.size() < ib.size()) break;
        }
        std::swap(ia, ib);
    }
    return static_cast<int>(ia.size()) - 1;
}

// gcd of plain primitive-ish polynomials (content handled by callers).
LaurentPoly gcd_plain(LaurentPoly a, LaurentPoly b) {
    const VarContext& ctx = a.context();
    if (a.is_zero()) return primitive(b);
    if (b.is_zero()) return primitive(a);
    a = primitive(make_plain(a));
    b = primitive(make_plain(b));
    if (a.is_constant() || b.is_constant()) return LaurentPoly::constant(ctx, Rat(1));

    // main variable: involved in both, smallest combined degree
    int best = -1;
    long bestscore = 0;
    for (std::size_t v = 0; v < ctx.arity(); ++v) {
        if (!involves(a, v) || !involves(b, v)) continue;
        long score = static_cast<long>(deg_in(a, v)) + deg_in(b, v);
        if (best < 0 || score < bestscore) {
            best = static_cast<int>(v);
            bestscore = score;
        }
    }
    if (best < 0) {
        // no shared variable: a common divisor would be constant
        return LaurentPoly::constant(ctx, Rat(1));
    }
    std::size_t v = static_cast<std::size_t>(best);

    // quick probabilistic filter: a degree-0 image gcd proves coprimality in x_v
    static thread_local std::mt19937_64 rng(0x5eedu);
    for (int tries = 0; tries < 3; ++tries) {
        int d = image_gcd_degree(a, b, v, rng);
        if (d < 0) continue;
        if (d == 0) {
            LaurentPoly ca = content_wrt(a, v);
            LaurentPoly cb = content_wrt(b, v);
            return gcd_plain(ca, cb);
        }
        break;
    }

    LaurentPoly ca = content_wrt(a, v);
    LaurentPoly cb = content_wrt(b, v);
    LaurentPoly cg = gcd_plain(ca, cb);
    LaurentPoly pa = poly_divexact(a, ca);
    LaurentPoly pb = poly_divexact(b, cb);

    if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
    // primitive PRS
    while (true) {
        if (pb.is_zero()) break;
        if (deg_in(pb, v) == 0) return cg; // primitive parts are coprime
        LaurentPoly r = pseudo_rem(pa, pb, v);
        pa = pb;
        if (r.is_zero()) {
            pb = r;
            break;
        }
        // make primitive: strip content w.r.t. v and overall
        LaurentPoly rc = content_wrt(r, v);
        pb = primitive(poly_divexact(r, rc));
    }
    LaurentPoly g = primitive(pa);
    return g.is_constant() ? cg : primitive(g * cg);
}

} // namespace

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return a;
    require_same_context(a.context(), b.context(), "poly_divexact");
    // shift to plain polynomials; in the Laurent ring monomials are units
    ExpVec sa = a.min_exponents(), sb = b.min_exponents();
    LaurentPoly ra = a.shifted(sa);
    LaurentPoly rb = b.shifted(sb);
    LaurentPoly q(a.context());
    const auto& ctx = a.context();
    while (!ra.is_zero()) {
        const auto& [ea, ca] = ra.leading();
        const auto& [eb, cb] = rb.leading();
        ExpVec em(ctx.arity());
        for (std::size_t i = 0; i < em.size(); ++i) {
            em[i] = ea[i] - eb[i];
            if (em[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        Rat cm = ca / cb;
        LaurentPoly mono = LaurentPoly::monomial(ctx, em, cm);
        q = q + mono;
        ra = ra - mono * rb;
    }
    // restore the monomial shift: q * t^(sa - sb)
    ExpVec shift(ctx.arity());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = checked_add(sb[i], -sa[i]);
    LaurentPoly out = q.shifted(shift);
    if (ctx.mode == RingMode::poly)
        for (const auto& [e, c] : out.terms())
            for (auto x : e)
                if (x < 0) throw std::domain_error("inexact polynomial division");
    return out;
}

bool poly_divides(const LaurentPoly& b, const LaurentPoly& a) {
    try {
        (void)poly_divexact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_context(a.context(), b.context(), "poly_gcd");
    if (a.is_zero()) return primitive(make_plain(b));
    if (b.is_zero()) return primitive(make_plain(a));
    LaurentPoly g = gcd_plain(a, b);
    return g;
}

} // namespace skein
