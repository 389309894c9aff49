#include <algorithm>

#include "locring/ideal.hpp"

namespace locring {

namespace {

void check_same_ring(const IdealHandle& a, const IdealHandle& b) {
    if (a.ring().nvars() != b.ring().nvars() ||
        a.ring().field.characteristic() != b.ring().field.characteristic())
        throw InputError("ideal operation over mismatched ambient rings");
}

Polynomial lift_to_tag_ring(const Polynomial& f, const Ring& tagged) {
    // same exponent layout; just renormalize in the bigger ring
    return Polynomial::from_terms(f.terms(), tagged, degrevlex());
}

Polynomial drop_tag(const Polynomial& f, const Ring& ring, MonomialOrder ord) {
    return Polynomial::from_terms(f.terms(), ring, ord);
}

// generators of a ∩ (g): eliminate t from t*a + (1-t)*g
std::vector<Polynomial> intersect_principal(const IdealHandle& a, const Polynomial& g) {
    const Ring& ring = a.ring();
    Ring tagged = ring.with_tag();
    const int t = tagged.nvars() - 1;
    MonomialOrder ord = elim_last(t);
    Polynomial tpoly =
        Polynomial::from_terms({{Monomial::var(t), tagged.field.one()}}, tagged, ord);
    Polynomial one =
        Polynomial::from_terms({{Monomial{}, tagged.field.one()}}, tagged, ord);
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        gens.push_back(poly_mul(tpoly, lift_to_tag_ring(f, tagged).with_order(ord, tagged), tagged));
    gens.push_back(poly_mul(poly_sub(one, tpoly, tagged),
                            lift_to_tag_ring(g, tagged).with_order(ord, tagged), tagged));
    GroebnerBasis gb = buchberger(tagged, std::move(gens), ord);
    std::vector<Polynomial> out;
    for (const auto& p : gb.polys) {
        bool has_tag = false;
        for (const auto& term : p.terms())
            if (term.mono.exp(t) > 0) has_tag = true;
        if (!has_tag) out.push_back(drop_tag(p, ring, degrevlex()));
    }
    return out;
}

}  // namespace

Polynomial exact_divide(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    if (g.zero()) throw InputError("division by the zero polynomial");
    const Field& F = ring.field;
    MonomialOrder ord = degrevlex();
    Polynomial r = f.with_order(ord, ring);
    Polynomial gg = g.with_order(ord, ring);
    std::vector<Term> q;
    while (!r.zero()) {
        const Term& t = r.lead();
        if (!gg.lead().mono.divides(t.mono))
            throw InputError("exact_divide: division is not exact");
        Scalar c = F.div(t.coef, gg.lead().coef);
        Monomial u = t.mono.quotient(gg.lead().mono);
        q.push_back({u, c});
        r = poly_submul(r, c, u, gg, ring);
    }
    return Polynomial::from_terms(std::move(q), ring, ord);
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a, b);
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a, b);
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& f : a.gens())
        for (const auto& g : b.gens()) gens.push_back(poly_mul(f, g, a.ring()));
    return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& a, int k) {
    if (k < 1) throw InputError("ideal_power requires exponent >= 1");
    IdealHandle acc = a;
    for (int i = 1; i < k; ++i) acc = ideal_product(acc, a);
    return acc;
}

IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a, b);
    if (b.gens().empty()) return b;  // zero ideal
    if (a.gens().empty()) return a;
    // ∩ over principal pieces would be wasteful here; one tagged elimination
    // t*a + (1-t)*b handles the general intersection directly
    const Ring& ring = a.ring();
    Ring tagged = ring.with_tag();
    const int t = tagged.nvars() - 1;
    MonomialOrder ord = elim_last(t);
    Polynomial tpoly =
        Polynomial::from_terms({{Monomial::var(t), tagged.field.one()}}, tagged, ord);
    Polynomial one_minus_t = poly_sub(
        Polynomial::from_terms({{Monomial{}, tagged.field.one()}}, tagged, ord), tpoly,
        tagged);
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens())
        gens.push_back(poly_mul(tpoly, lift_to_tag_ring(f, tagged).with_order(ord, tagged), tagged));
    for (const auto& g : b.gens())
        gens.push_back(poly_mul(one_minus_t, lift_to_tag_ring(g, tagged).with_order(ord, tagged), tagged));
    GroebnerBasis gb = buchberger(tagged, std::move(gens), ord);
    std::vector<Polynomial> out;
    for (const auto& p : gb.polys) {
        bool has_tag = false;
        for (const auto& term : p.terms())
            if (term.mono.exp(t) > 0) has_tag = true;
        if (!has_tag) out.push_back(drop_tag(p, ring, degrevlex()));
    }
    return IdealHandle(ring, std::move(out));
}

IdealHandle ideal_colon(const IdealHandle& a, const IdealHandle& b) {
    check_same_ring(a, b);
    if (b.gens().empty()) throw InputError("colon by the zero ideal");
    IdealHandle acc;
    bool first = true;
    for (const auto& g : b.gens()) {
        std::vector<Polynomial> inter = intersect_principal(a, g);
        std::vector<Polynomial> quot;
        quot.reserve(inter.size());
        for (const auto& h : inter) quot.push_back(exact_divide(h, g, a.ring()));
        IdealHandle part(a.ring(), std::move(quot));
        acc = first ? std::move(part) : ideal_intersect(acc, part);
        first = false;
    }
    return acc;
}

}  // namespace locring
