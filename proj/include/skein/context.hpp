#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

// Exponent vector; arity fixed by the owning context.
using ExpVec = std::vector<int32_t>;

enum class RingMode {
    laurent, // integer exponents
    poly,    // nonnegative exponents; variables evaluate as linear forms
};

// Ordered variable set plus the exponent discipline.
struct VarContext {
    std::vector<std::string> names;
    RingMode mode = RingMode::laurent;

    VarContext() = default;
    VarContext(std::initializer_list<std::string> ns, RingMode m = RingMode::laurent)
        : names(ns), mode(m) {}
    VarContext(std::vector<std::string> ns, RingMode m) : names(std::move(ns)), mode(m) {}

    std::size_t arity() const { return names.size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const VarContext& o) const { return mode == o.mode && names == o.names; }
    bool operator!=(const VarContext& o) const { return !(*this == o); }
};

// Graded lexicographic order: first by total degree, then lexicographic
// in declared variable order.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

inline void require_same_context(const VarContext& a, const VarContext& b, const char* op) {
    if (a != b)
        throw std::invalid_argument(std::string("context mismatch in ") + op);
}

// Exponent arithmetic with overflow detection; exponents in this calculus are
// tiny, so a trip outside int32 means a logic error upstream.
inline int32_t checked_add(int32_t a, int32_t b) {
    int32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}
inline int32_t checked_mul(int32_t a, int32_t b) {
    int32_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

} // namespace skein
