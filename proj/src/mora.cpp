#include <algorithm>
#include <deque>
#include <set>

#include "locring/ideal.hpp"

namespace locring {

namespace {

// ecart = total degree minus degree of the (local) leading term
std::uint32_t ecart(const Polynomial& f) { return f.degree() - f.lead().mono.degree(); }

// one cancellation step: f - (lc(f)/lc(g)) * (lm(f)/lm(g)) * g
Polynomial cancel_lead(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    const Field& F = ring.field;
    Scalar c = F.div(f.lead().coef, g.lead().coef);
    return poly_submul(f, c, f.lead().mono.quotient(g.lead().mono), g, ring);
}

// Mora's weak normal form with the ecart strategy; reducers found mid-run may
// join the local reducer list, which is what guarantees termination.
Polynomial nf_mora(Polynomial h, const std::vector<Polynomial>& basis, const Ring& ring) {
    std::vector<const Polynomial*> reducers;
    std::deque<Polynomial> extra;  // stable addresses for intermediates
    reducers.reserve(basis.size() + 8);
    for (const auto& g : basis) reducers.push_back(&g);
    while (!h.zero()) {
        const Polynomial* best = nullptr;
        for (const Polynomial* g : reducers) {
            if (!g->lead().mono.divides(h.lead().mono)) continue;
            if (!best || ecart(*g) < ecart(*best)) best = g;
        }
        if (!best) return h;
        if (ecart(*best) > ecart(h)) {
            extra.push_back(h);
            reducers.push_back(&extra.back());
        }
        h = cancel_lead(h, *best, ring);
    }
    return h;
}

}  // namespace

std::vector<Polynomial> mora_standard_basis(const Ring& ring,
                                            std::vector<Polynomial> gens) {
    const MonomialOrder ord = local_degrevlex();
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (g.zero()) continue;
        Polynomial h = nf_mora(g.with_order(ord, ring), basis, ring);
        if (!h.zero()) basis.push_back(monic(h, ring));
    }

    struct P {
        std::uint32_t i, j;
        Monomial lcm;
    };
    auto less = [&](const P& a, const P& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = cmp(a.lcm, b.lcm, ord);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<P, decltype(less)> pairs(less);
    auto enqueue = [&](std::uint32_t idx) {
        for (std::uint32_t k = 0; k < idx; ++k) {
            if (basis[k].lead().mono.coprime(basis[idx].lead().mono)) continue;
            pairs.insert(P{k, idx, Monomial::lcm(basis[k].lead().mono,
                                                 basis[idx].lead().mono)});
        }
    };
    for (std::uint32_t i = 0; i < basis.size(); ++i) enqueue(i);

    while (!pairs.empty()) {
        P p = *pairs.begin();
        pairs.erase(pairs.begin());
        const Polynomial& f = basis[p.i];
        const Polynomial& g = basis[p.j];
        Polynomial a = term_mul(f, ring.field.one(), p.lcm.quotient(f.lead().mono), ring);
        Polynomial b = term_mul(g, ring.field.one(), p.lcm.quotient(g.lead().mono), ring);
        Polynomial h = nf_mora(poly_sub(a, b, ring), basis, ring);
        if (!h.zero()) {
            basis.push_back(monic(h, ring));
            enqueue(static_cast<std::uint32_t>(basis.size()) - 1);
        }
    }

    // lead-minimal subset, deterministic order
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial &li = basis[i].lead().mono, &lj = basis[j].lead().mono;
            if (lj == li ? j < i : lj.divides(li)) redundant = true;
        }
        if (!redundant) out.push_back(basis[i]);
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return cmp(a.lead().mono, b.lead().mono, ord) < 0;
    });
    return out;
}

IdealHandle::IdealHandle(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    for (auto& g : gens)
        if (!g.zero()) gens_.push_back(std::move(g));
}

std::shared_ptr<const GroebnerBasis> IdealHandle::basis(MonomialOrder ord,
                                                        std::int32_t cap) const {
    const auto key = std::make_pair(ord, cap);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end()) return it->second;
    }
    auto computed = std::make_shared<GroebnerBasis>(buchberger(ring_, gens_, ord, cap));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->entries.emplace(key, std::move(computed));
    return it->second;
}

bool IdealHandle::contains(const Polynomial& f, std::int32_t cap_hint) const {
    auto gb = basis(degrevlex(), cap_hint);
    return normal_form(f, *gb, ring_).zero();
}

IdealHandle tangent_cone(const IdealHandle& I) {
    const Ring& ring = I.ring();
    for (const auto& g : I.gens())
        if (g.tail_degree() == 0)
            throw InputError(
                "tangent cone requires generators inside the maximal ideal "
                "(a generator has a nonzero constant term)");
    std::vector<Polynomial> sb = mora_standard_basis(ring, I.gens());
    std::vector<Polynomial> forms;
    forms.reserve(sb.size());
    for (const auto& f : sb) forms.push_back(initial_form(f, ring));
    return IdealHandle(ring, std::move(forms));
}

}  // namespace locring
