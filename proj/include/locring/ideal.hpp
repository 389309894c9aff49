#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "locring/poly.hpp"

namespace locring {

inline constexpr std::int32_t kNoCap = -1;

// A verified basis. With cap >= 0 it is the reduced Groebner basis of
// I + M^cap where every monomial of degree >= cap is an implicit basis
// element; polys then only hold terms of degree < cap.
struct GroebnerBasis {
    MonomialOrder ord;
    std::int32_t cap = kNoCap;
    std::vector<Polynomial> polys;  // monic, inter-reduced (tails too, global orders), LT-ascending
    std::vector<Monomial> leads;
    std::vector<std::uint64_t> lead_masks;

    bool capped() const { return cap >= 0; }

    // index of the first basis element whose lead divides m, or -1
    int find_divisor(const Monomial& m) const;

    // every variable has a pure power among the leading terms (or the basis
    // is capped, which forces an Artinian quotient)
    bool zero_dimensional(int nvars) const;

    void rebuild_index();
};

// Full normal form: every term reducible by a lead (or living above the cap)
// is eliminated. Canonical for reduced bases.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, const Ring& ring);

GroebnerBasis buchberger(const Ring& ring, std::vector<Polynomial> gens,
                         MonomialOrder ord, std::int32_t cap = kNoCap);

// S-pair criterion audit (debug / oracle runs); capped bases also audit the
// pairs against the implicit monomial block
bool verify_buchberger(const Ring& ring, const GroebnerBasis& gb);

// Mora's tangent-cone algorithm: standard basis under the local order, with
// ecart-driven weak normal forms. Output is lead-minimal and monic but not
// tail-reduced (tail reduction need not terminate locally).
std::vector<Polynomial> mora_standard_basis(const Ring& ring,
                                            std::vector<Polynomial> gens);

class IdealHandle {
  public:
    IdealHandle() = default;
    IdealHandle(Ring ring, std::vector<Polynomial> gens);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }

    // Cached per (order, cap); the cache is filled at most once per key and
    // shared by copies of the handle. Concurrent readers see either nothing
    // or a complete verified basis.
    std::shared_ptr<const GroebnerBasis> basis(MonomialOrder ord,
                                               std::int32_t cap = kNoCap) const;

    bool contains(const Polynomial& f, std::int32_t cap_hint = kNoCap) const;

  private:
    struct Cache {
        std::mutex mu;
        std::map<std::pair<MonomialOrder, std::int32_t>,
                 std::shared_ptr<const GroebnerBasis>>
            entries;
    };
    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// The homogeneous ideal of initial forms in_*(I); G(A) = R / in_*(I).
// Rejects generators with nonzero constant term (unit ideal locally).
IdealHandle tangent_cone(const IdealHandle& I);

enum class IdealOp { Sum, Product, Power, Colon, Intersect };

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_power(const IdealHandle& a, int k);  // k < 1 rejected
// (a : b) = ∩_{g in gens(b)} (a : g), each (a : g) via intersection with (g)
// and exact division; tag-variable elimination inside
IdealHandle ideal_colon(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b);

// exact division q = f / g, throws if the division is not exact
Polynomial exact_divide(const Polynomial& f, const Polynomial& g, const Ring& ring);

}  // namespace locring
