#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace locring {

inline constexpr int kMaxVars = 16;

// Dense exponent vector with cached total degree. The ambient variable count
// is carried by the ring; unused slots stay zero, so comparisons over the
// full array agree with comparisons over the live prefix.
class Monomial {
  public:
    Monomial() = default;

    static Monomial var(int v, std::uint16_t pow = 1) {
        Monomial m;
        m.e_[v] = pow;
        m.deg_ = pow;
        return m;
    }

    std::uint16_t exp(int v) const { return e_[v]; }
    std::uint32_t degree() const { return deg_; }
    bool is_unit() const { return deg_ == 0; }

    void set_exp(int v, std::uint16_t p) {
        deg_ = deg_ - e_[v] + p;
        e_[v] = p;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e_[i] = static_cast<std::uint16_t>(a.e_[i] + b.e_[i]);
        r.deg_ = a.deg_ + b.deg_;
        return r;
    }

    bool divides(const Monomial& m) const {
        if (deg_ > m.deg_) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    // this / b, assuming b | this
    Monomial quotient(const Monomial& b) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e_[i] = static_cast<std::uint16_t>(e_[i] - b.e_[i]);
        r.deg_ = deg_ - b.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial r;
        std::uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
            d += r.e_[i];
        }
        r.deg_ = d;
        return r;
    }

    bool coprime(const Monomial& b) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[i] && b.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // Coarse divisibility prefilter: mask(a) & ~mask(b) != 0 proves a ∤ b.
    std::uint64_t divmask() const {
        std::uint64_t m = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            std::uint16_t e = e_[i];
            if (e >= 1) m |= 1ull << i;
            if (e >= 2) m |= 1ull << (16 + i);
            if (e >= 4) m |= 1ull << (32 + i);
            if (e >= 8) m |= 1ull << (48 + i);
        }
        return m;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= e_[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

  private:
    std::array<std::uint16_t, kMaxVars> e_{};
    std::uint32_t deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind : std::uint8_t {
    DegRevLex,       // global: degree, then reverse lexicographic
    LocalDegRevLex,  // degree-anticompatible: lower total degree is larger
    ElimLast,        // one-variable elimination block order (tag variable last)
};

struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    std::int8_t elim_var = -1;  // only for ElimLast

    bool global() const { return kind != OrderKind::LocalDegRevLex; }
    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && elim_var == o.elim_var;
    }
    bool operator<(const MonomialOrder& o) const {
        if (kind != o.kind) return kind < o.kind;
        return elim_var < o.elim_var;
    }
};

inline MonomialOrder degrevlex() { return {OrderKind::DegRevLex, -1}; }
inline MonomialOrder local_degrevlex() { return {OrderKind::LocalDegRevLex, -1}; }
inline MonomialOrder elim_last(int tag_var) {
    return {OrderKind::ElimLast, static_cast<std::int8_t>(tag_var)};
}

// revlex tie-break on equal total degree: the last differing exponent decides,
// smaller exponent there means the larger monomial
inline int revlex_tie(const Monomial& a, const Monomial& b) {
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

// +1 if a > b under ord, 0 if equal, -1 otherwise
inline int cmp(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    switch (ord.kind) {
        case OrderKind::DegRevLex:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            return revlex_tie(a, b);
        case OrderKind::LocalDegRevLex:
            if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
            return revlex_tie(a, b);
        case OrderKind::ElimLast: {
            int t = ord.elim_var;
            if (a.exp(t) != b.exp(t)) return a.exp(t) > b.exp(t) ? 1 : -1;
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            return revlex_tie(a, b);
        }
    }
    return 0;
}

inline bool greater_under(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    return cmp(a, b, ord) > 0;
}

// Enumeration of all monomials in nvars variables with total degree in
// [lo, hi], in a fixed deterministic order (degree, then exponents of the
// leading variables descending).
void for_each_monomial(int nvars, std::uint32_t lo, std::uint32_t hi,
                       const std::function<void(const Monomial&)>& visit);

std::vector<Monomial> monomials_of_degree(int nvars, std::uint32_t d);

// C(d + nvars, nvars), the number of monomials of degree <= d
std::uint64_t count_monomials_upto(int nvars, std::uint32_t d);

}  // namespace locring
