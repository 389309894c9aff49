#include <algorithm>
#include <set>
#include <unordered_set>

#include "locring/ideal.hpp"

namespace locring {

int GroebnerBasis::find_divisor(const Monomial& m) const {
    const std::uint64_t mask = m.divmask();
    const std::uint32_t d = m.degree();
    for (std::size_t i = 0; i < leads.size(); ++i) {
        if (leads[i].degree() > d) continue;
        if (lead_masks[i] & ~mask) continue;
        if (leads[i].divides(m)) return static_cast<int>(i);
    }
    return -1;
}

bool GroebnerBasis::zero_dimensional(int nvars) const {
    if (capped()) return true;
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& l : leads) {
            if (l.exp(v) == 0 || l.degree() != l.exp(v)) continue;
            found = true;
            break;
        }
        if (!found) return false;
    }
    return true;
}

void GroebnerBasis::rebuild_index() {
    leads.clear();
    lead_masks.clear();
    leads.reserve(polys.size());
    lead_masks.reserve(polys.size());
    for (const auto& p : polys) {
        leads.push_back(p.lead().mono);
        lead_masks.push_back(p.lead().mono.divmask());
    }
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, const Ring& ring) {
    const Field& F = ring.field;
    const bool capped = gb.capped();
    const std::uint32_t cap = capped ? static_cast<std::uint32_t>(gb.cap) : 0;
    std::vector<Term> work = f.with_order(gb.ord, ring).terms();
    std::vector<Term> result;
    std::vector<Term> next;
    std::size_t pos = 0;
    while (pos < work.size()) {
        const Term& t = work[pos];
        if (capped && t.mono.degree() >= cap) {
            ++pos;  // implicit monomial block swallows it
            continue;
        }
        int i = gb.find_divisor(t.mono);
        if (i < 0) {
            result.push_back(t);
            ++pos;
            continue;
        }
        // work[pos+1..] - c * u * tail(g); the leads cancel exactly
        const Polynomial& g = gb.polys[i];
        const Scalar& c = t.coef;
        Monomial u = t.mono.quotient(gb.leads[i]);
        next.clear();
        std::size_t a = pos + 1, b = 1;
        const auto& gt = g.terms();
        while (a < work.size() || b < gt.size()) {
            if (b < gt.size() && capped && (gt[b].mono.degree() + u.degree()) >= cap) {
                ++b;
                continue;
            }
            int cv;
            if (a == work.size())
                cv = -1;
            else if (b == gt.size())
                cv = 1;
            else
                cv = cmp(work[a].mono, gt[b].mono * u, gb.ord);
            if (cv > 0) {
                next.push_back(work[a++]);
            } else if (cv < 0) {
                next.push_back({gt[b].mono * u, F.neg(F.mul(c, gt[b].coef))});
                ++b;
            } else {
                Scalar v = F.submul(work[a].coef, c, gt[b].coef);
                if (!F.is_zero(v)) next.push_back({work[a].mono, std::move(v)});
                ++a;
                ++b;
            }
        }
        work.swap(next);
        pos = 0;
    }
    return Polynomial::from_sorted_terms(std::move(result), ring, gb.ord);
}

namespace {

struct Pair {
    std::uint32_t i, j;  // i < j
    Monomial lcm;
    std::uint32_t sugar;
};

struct PairLess {
    MonomialOrder ord;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = cmp(a.lcm, b.lcm, ord);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
    return (static_cast<std::uint64_t>(i) << 32) | j;
}

// Chain-criterion bookkeeping stays proportional to the pairs actually
// enqueued: pairs discarded structurally (two monomials, coprime leads) are
// "treated" by definition and never recorded.
struct Work {
    const Ring& ring;
    MonomialOrder ord;
    std::int32_t cap;

    GroebnerBasis gb;  // insertion order during the run
    std::vector<std::uint32_t> sugars;
    std::set<Pair, PairLess> pairs;
    std::unordered_set<std::uint64_t> processed;
    std::vector<std::uint32_t> band_queue;

    Work(const Ring& r, MonomialOrder o, std::int32_t c)
        : ring(r), ord(o), cap(c), pairs(PairLess{o}) {
        gb.ord = o;
        gb.cap = c;
    }

    static bool is_mono(const Polynomial& p) { return p.size() == 1; }

    bool treated(std::uint32_t a, std::uint32_t b) const {
        if (is_mono(gb.polys[a]) && is_mono(gb.polys[b])) return true;
        if (gb.leads[a].coprime(gb.leads[b])) return true;
        return processed.count(pair_key(std::min(a, b), std::max(a, b))) != 0;
    }

    void add_basis(Polynomial h) {
        h = monic(h, ring);
        std::uint32_t idx = static_cast<std::uint32_t>(gb.polys.size());
        bool h_mono = is_mono(h);
        const Monomial& lh = h.lead().mono;
        std::uint32_t sug_h = h.degree();
        for (std::uint32_t k = 0; k < idx; ++k) {
            const Monomial& lk = gb.leads[k];
            if ((h_mono && is_mono(gb.polys[k])) || lk.coprime(lh)) continue;
            Monomial l = Monomial::lcm(lk, lh);
            std::uint32_t sug = std::max(sugars[k] + l.degree() - lk.degree(),
                                         sug_h + l.degree() - lh.degree());
            pairs.insert(Pair{k, idx, l, sug});
        }
        sugars.push_back(sug_h);
        if (cap >= 0 && !h.homogeneous()) band_queue.push_back(idx);
        gb.leads.push_back(lh);
        gb.lead_masks.push_back(lh.divmask());
        gb.polys.push_back(std::move(h));
    }

    bool chain_discard(const Pair& p) const {
        if (gb.polys.size() > 2048) return false;  // criterion is optional
        for (std::uint32_t k = 0; k < gb.polys.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!gb.leads[k].divides(p.lcm)) continue;
            if (treated(k, p.i) && treated(k, p.j)) return true;
        }
        return false;
    }

    Polynomial spoly(const Pair& p) const {
        const Polynomial& f = gb.polys[p.i];
        const Polynomial& g = gb.polys[p.j];
        const Field& F = ring.field;
        Polynomial a = term_mul(f, F.one(), p.lcm.quotient(f.lead().mono), ring);
        Polynomial b = term_mul(g, F.one(), p.lcm.quotient(g.lead().mono), ring);
        return poly_sub(a, b, ring);
    }

    void process_band(std::uint32_t idx) {
        const Polynomial f = gb.polys[idx];  // copy: basis may grow
        std::uint32_t lead_deg = f.lead().mono.degree();
        std::uint32_t tail_deg = f.tail_degree();
        std::uint32_t c = static_cast<std::uint32_t>(cap);
        std::uint32_t lo = c > lead_deg ? c - lead_deg : 0;
        if (c < tail_deg + 1) return;
        std::uint32_t hi = c - 1 - tail_deg;
        if (lo > hi) return;
        for_each_monomial(ring.nvars(), lo, hi, [&](const Monomial& u) {
            Polynomial cand =
                truncate_degrees(term_mul(f, ring.field.one(), u, ring), c, ring);
            if (cand.zero()) return;
            Polynomial h = normal_form(cand, gb, ring);
            if (!h.zero()) add_basis(std::move(h));
        });
    }

    void run(std::vector<Polynomial> gens) {
        for (auto& g : gens) {
            if (g.zero()) continue;
            Polynomial h = g.with_order(ord, ring);
            if (cap >= 0) h = truncate_degrees(h, static_cast<std::uint32_t>(cap), ring);
            h = normal_form(h, gb, ring);
            if (!h.zero()) add_basis(std::move(h));
        }
        std::size_t band_pos = 0;
        for (;;) {
            if (!pairs.empty()) {
                Pair p = *pairs.begin();
                pairs.erase(pairs.begin());
                processed.insert(pair_key(p.i, p.j));
                if (chain_discard(p)) continue;
                Polynomial h = normal_form(spoly(p), gb, ring);
                if (!h.zero()) add_basis(std::move(h));
                continue;
            }
            if (band_pos < band_queue.size()) {
                process_band(band_queue[band_pos++]);
                continue;
            }
            break;
        }
    }

    GroebnerBasis finish() {
        std::vector<char> keep(gb.polys.size(), 1);
        for (std::size_t i = 0; i < gb.polys.size(); ++i) {
            for (std::size_t j = 0; j < gb.polys.size(); ++j) {
                if (i == j) continue;
                if (gb.leads[j] == gb.leads[i]) continue;  // cannot happen; be safe
                if (gb.leads[j].divides(gb.leads[i])) {
                    keep[i] = 0;
                    break;
                }
            }
        }
        GroebnerBasis out;
        out.ord = ord;
        out.cap = cap;
        for (std::size_t i = 0; i < gb.polys.size(); ++i)
            if (keep[i]) out.polys.push_back(gb.polys[i]);
        std::sort(out.polys.begin(), out.polys.end(),
                  [&](const Polynomial& a, const Polynomial& b) {
                      return cmp(a.lead().mono, b.lead().mono, ord) < 0;
                  });
        out.rebuild_index();
        // Tail reduction. Under a global order an element's lead cannot divide
        // its own tail, so reducing against the full basis is safe, and the
        // normal form depends only on the lead ideal, so updating in place
        // still yields the unique reduced basis.
        for (std::size_t i = 0; i < out.polys.size(); ++i) {
            if (out.polys[i].size() == 1) continue;
            Polynomial lead_part = Polynomial::from_terms({out.polys[i].lead()}, ring, ord);
            Polynomial tail = poly_sub(out.polys[i], lead_part, ring);
            out.polys[i] = poly_add(lead_part, normal_form(tail, out, ring), ring);
        }
        out.rebuild_index();
        return out;
    }
};

}  // namespace

GroebnerBasis buchberger(const Ring& ring, std::vector<Polynomial> gens,
                         MonomialOrder ord, std::int32_t cap) {
    if (!ord.global()) throw InputError("buchberger requires a global order");
    Work w(ring, ord, cap);
    w.run(std::move(gens));
    return w.finish();
}

bool verify_buchberger(const Ring& ring, const GroebnerBasis& gb) {
    const Field& F = ring.field;
    for (std::size_t i = 0; i < gb.polys.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.polys.size(); ++j) {
            Monomial l = Monomial::lcm(gb.leads[i], gb.leads[j]);
            Polynomial a = term_mul(gb.polys[i], F.one(), l.quotient(gb.leads[i]), ring);
            Polynomial b = term_mul(gb.polys[j], F.one(), l.quotient(gb.leads[j]), ring);
            if (!normal_form(poly_sub(a, b, ring), gb, ring).zero()) return false;
        }
        if (gb.capped() && !gb.polys[i].homogeneous()) {
            std::uint32_t c = static_cast<std::uint32_t>(gb.cap);
            std::uint32_t lead_deg = gb.leads[i].degree();
            std::uint32_t lo = c > lead_deg ? c - lead_deg : 0;
            std::uint32_t hi = c - 1 - gb.polys[i].tail_degree();
            bool ok = true;
            if (lo <= hi)
                for_each_monomial(ring.nvars(), lo, hi, [&](const Monomial& u) {
                    if (!ok) return;
                    Polynomial cand = truncate_degrees(
                        term_mul(gb.polys[i], F.one(), u, ring), c, ring);
                    if (!normal_form(cand, gb, ring).zero()) ok = false;
                });
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace locring
