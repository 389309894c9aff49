#include "locring/artinian.hpp"

#include <algorithm>

namespace locring {

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int nvars,
                                         std::int64_t degree_bound) {
    std::int64_t bound = degree_bound;
    if (gb.capped()) {
        std::int64_t c = gb.cap - 1;
        bound = bound < 0 ? c : std::min(bound, c);
    }
    std::vector<Monomial> out;
    Monomial one;
    if (gb.find_divisor(one) >= 0) return out;  // unit ideal
    out.push_back(one);
    // order-ideal BFS: extend m by x_v only for v <= least live variable, so
    // every monomial is produced exactly once, through its standard divisors
    std::vector<Monomial> frontier{one};
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            int vmax = nvars - 1;
            for (int v = 0; v < nvars; ++v)
                if (m.exp(v) > 0) {
                    vmax = v;
                    break;
                }
            for (int v = 0; v <= vmax; ++v) {
                Monomial cand = m * Monomial::var(v);
                if (bound >= 0 && cand.degree() > static_cast<std::uint32_t>(bound))
                    continue;
                if (gb.find_divisor(cand) >= 0) continue;
                next.push_back(cand);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (degree_bound < 0 && !gb.capped() && out.size() > 2'000'000)
            throw StabilizationError(
                "standard monomial enumeration exceeded 2e6 (ideal not "
                "zero-dimensional?)");
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return cmp(a, b, degrevlex()) < 0;
    });
    return out;
}

template <class Ctx>
TruncatedQuotient<Ctx>::TruncatedQuotient(const IdealHandle& I, std::uint32_t level,
                                          Ctx ctx, bool parallel)
    : I_(I), level_(level), ctx_(ctx), parallel_(parallel) {
    gb_ = I_.basis(degrevlex(), static_cast<std::int32_t>(level));
    basis_ = standard_monomials(*gb_, ring().nvars());
    index_.reserve(basis_.size() * 2);
    for (std::uint32_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    var_cols_.resize(ring().nvars());
    var_cols_ready_.assign(ring().nvars(), 0);
}

template <class Ctx>
typename TruncatedQuotient<Ctx>::Row TruncatedQuotient<Ctx>::to_vector(
    const Polynomial& f) const {
    Polynomial nf = normal_form(f, *gb_, ring());
    Row r;
    r.e.reserve(nf.size());
    const Field& F = ring().field;
    for (const auto& t : nf.terms()) {
        std::int64_t idx = index_of(t.mono);
        if (idx < 0) continue;  // cannot happen for a true normal form
        r.push(static_cast<std::uint32_t>(idx), ctx_value<Ctx>(F, t.coef));
    }
    r.sort();
    return r;
}

template <class Ctx>
Polynomial TruncatedQuotient<Ctx>::lift(const Row& r) const {
    const Field& F = ring().field;
    std::vector<Term> terms;
    terms.reserve(r.e.size());
    for (const auto& [col, v] : r.e)
        terms.push_back({basis_[col], ctx_to_scalar<Ctx>(F, v)});
    return Polynomial::from_terms(std::move(terms), ring(), degrevlex());
}

template <class Ctx>
const Echelon<Ctx>& TruncatedQuotient<Ctx>::var_column_space(int v) const {
    // never called; columns are materialized lazily in mul_var
    static Echelon<Ctx> dummy(Ctx{}, 0);
    return dummy;
}

template <class Ctx>
typename TruncatedQuotient<Ctx>::Row TruncatedQuotient<Ctx>::mul_var(
    int v, const Row& r) const {
    if (!var_cols_ready_[v]) {
        auto& cols = var_cols_[v];
        cols.resize(basis_.size());
        const Field& F = ring().field;
        for (std::uint32_t s = 0; s < basis_.size(); ++s) {
            Monomial m = basis_[s] * Monomial::var(v);
            if (m.degree() >= level_) continue;  // zero column
            std::int64_t idx = index_of(m);
            if (idx >= 0) {
                cols[s].push(static_cast<std::uint32_t>(idx), ctx_.one());
                continue;
            }
            Polynomial p = Polynomial::from_terms({{m, F.one()}}, ring(), degrevlex());
            cols[s] = to_vector(p);
        }
        var_cols_ready_[v] = 1;
    }
    const auto& cols = var_cols_[v];
    // accumulate sum of r[s] * cols[s]
    Row acc;
    for (const auto& [s, c] : r.e) {
        const Row& col = cols[s];
        if (col.empty()) continue;
        Row scaled;
        scaled.e.reserve(col.e.size());
        for (const auto& [t, w] : col.e) scaled.push(t, ctx_.mul(c, w));
        // merge into acc
        Row merged;
        merged.e.reserve(acc.e.size() + scaled.e.size());
        std::size_t i = 0, j = 0;
        while (i < acc.e.size() || j < scaled.e.size()) {
            if (j == scaled.e.size() ||
                (i < acc.e.size() && acc.e[i].first < scaled.e[j].first)) {
                merged.e.push_back(acc.e[i++]);
            } else if (i == acc.e.size() || scaled.e[j].first < acc.e[i].first) {
                merged.e.push_back(scaled.e[j++]);
            } else {
                auto val = ctx_.add(acc.e[i].second, scaled.e[j].second);
                if (!ctx_.is_zero(val)) merged.e.emplace_back(acc.e[i].first, val);
                ++i;
                ++j;
            }
        }
        acc = std::move(merged);
    }
    return acc;
}

template <class Ctx>
typename TruncatedQuotient<Ctx>::Row TruncatedQuotient<Ctx>::mul_mono(
    const Monomial& m, const Row& r) const {
    Row acc = r;
    for (int v = 0; v < ring().nvars(); ++v)
        for (std::uint16_t k = 0; k < m.exp(v); ++k) acc = mul_var(v, acc);
    return acc;
}

template <class Ctx>
typename TruncatedQuotient<Ctx>::Row TruncatedQuotient<Ctx>::mul_poly(
    const Polynomial& f, const Row& r) const {
    const Field& F = ring().field;
    Row acc;
    for (const auto& t : f.terms()) {
        Row part = mul_mono(t.mono, r);
        auto c = ctx_value<Ctx>(F, t.coef);
        Row merged;
        merged.e.reserve(acc.e.size() + part.e.size());
        std::size_t i = 0, j = 0;
        while (i < acc.e.size() || j < part.e.size()) {
            if (j == part.e.size() ||
                (i < acc.e.size() && acc.e[i].first < part.e[j].first)) {
                merged.e.push_back(acc.e[i++]);
            } else if (i == acc.e.size() || part.e[j].first < acc.e[i].first) {
                merged.e.emplace_back(part.e[j].first, ctx_.mul(c, part.e[j].second));
                ++j;
            } else {
                auto val = ctx_.add(acc.e[i].second, ctx_.mul(c, part.e[j].second));
                if (!ctx_.is_zero(val)) merged.e.emplace_back(acc.e[i].first, val);
                ++i;
                ++j;
            }
        }
        acc = std::move(merged);
    }
    return acc;
}

template <class Ctx>
void TruncatedQuotient<Ctx>::extend_ideal_span(Echelon<Ctx>& sp,
                                               std::span<const Row> seed_rows) const {
    // worklist closure under multiplication by the variables
    std::vector<Row> pending(seed_rows.begin(), seed_rows.end());
    while (!pending.empty()) {
        std::vector<Row> added;
        for (auto& r : pending) {
            Row copy = r;
            sp.reduce(copy);
            if (copy.empty()) continue;
            std::uint32_t before = sp.rank();
            sp.insert(std::move(copy));
            if (sp.rank() > before) added.push_back(sp.rows().back());
        }
        std::vector<Row> next;
        next.reserve(added.size() * ring().nvars());
        for (const auto& r : added)
            for (int v = 0; v < ring().nvars(); ++v) {
                Row prod = mul_var(v, r);
                if (!prod.empty()) next.push_back(std::move(prod));
            }
        pending = std::move(next);
    }
}

template <class Ctx>
Echelon<Ctx> TruncatedQuotient<Ctx>::ideal_span(std::span<const Polynomial> gens) const {
    Echelon<Ctx> sp(ctx_, dim());
    std::vector<Row> seeds;
    seeds.reserve(gens.size());
    for (const auto& g : gens) {
        Row r = to_vector(g);
        if (!r.empty()) seeds.push_back(std::move(r));
    }
    extend_ideal_span(sp, seeds);
    return sp;
}

template <class Ctx>
const Echelon<Ctx>& TruncatedQuotient<Ctx>::power_span(std::uint32_t n) const {
    auto it = powers_.find(n);
    if (it != powers_.end()) return it->second;
    if (n == 0) {
        Echelon<Ctx> full(ctx_, dim());
        std::vector<Row> rows;
        rows.reserve(dim());
        for (std::uint32_t s = 0; s < dim(); ++s) {
            Row r;
            r.push(s, ctx_.one());
            rows.push_back(std::move(r));
        }
        full.insert_batch(std::move(rows), false);
        return powers_.emplace(0, std::move(full)).first->second;
    }
    const Echelon<Ctx>& prev = power_span(n - 1);
    Echelon<Ctx> sp(ctx_, dim());
    std::vector<Row> batch;
    for (const Row& r : prev.rows()) {
        for (int v = 0; v < ring().nvars(); ++v) {
            Row prod = mul_var(v, r);
            if (!prod.empty()) batch.push_back(std::move(prod));
        }
        if (batch.size() >= 4096) {
            sp.insert_batch(std::move(batch), parallel_);
            batch.clear();
        }
    }
    sp.insert_batch(std::move(batch), parallel_);
    return powers_.emplace(n, std::move(sp)).first->second;
}

template <class Ctx>
Echelon<Ctx> TruncatedQuotient<Ctx>::colon_by_maximal(const Echelon<Ctx>& W) const {
    // constraints: for every variable v, the class of x_v * e_j modulo W
    Echelon<Ctx> Wn = W;
    Wn.normalize();
    Echelon<Ctx> constraints(ctx_, dim());
    std::vector<Row> bucket_rows;
    for (int v = 0; v < ring().nvars(); ++v) {
        std::vector<std::vector<std::pair<std::uint32_t, typename Ctx::value_type>>>
            by_target(dim());
        for (std::uint32_t j = 0; j < dim(); ++j) {
            Row r;
            r.push(j, ctx_.one());
            Row col = mul_var(v, r);
            Wn.reduce(col);
            for (const auto& [t, val] : col.e) by_target[t].emplace_back(j, val);
        }
        for (std::uint32_t t = 0; t < dim(); ++t) {
            if (by_target[t].empty()) continue;
            Row row;
            row.e = std::move(by_target[t]);
            row.sort();
            bucket_rows.push_back(std::move(row));
        }
    }
    constraints.insert_batch(std::move(bucket_rows), parallel_);
    std::vector<Row> kernel = constraints.kernel_basis();
    Echelon<Ctx> out(ctx_, dim());
    out.insert_batch(std::move(kernel), parallel_);
    return out;
}

template <class Ctx>
Echelon<Ctx> TruncatedQuotient<Ctx>::colon_by_poly(const Echelon<Ctx>& W,
                                                   const Polynomial& f) const {
    Echelon<Ctx> Wn = W;
    Wn.normalize();
    Echelon<Ctx> constraints(ctx_, dim());
    std::vector<std::vector<std::pair<std::uint32_t, typename Ctx::value_type>>>
        by_target(dim());
    for (std::uint32_t j = 0; j < dim(); ++j) {
        Row r;
        r.push(j, ctx_.one());
        Row col = mul_poly(f, r);
        Wn.reduce(col);
        for (const auto& [t, val] : col.e) by_target[t].emplace_back(j, val);
    }
    std::vector<Row> rows;
    for (std::uint32_t t = 0; t < dim(); ++t) {
        if (by_target[t].empty()) continue;
        Row row;
        row.e = std::move(by_target[t]);
        row.sort();
        rows.push_back(std::move(row));
    }
    constraints.insert_batch(std::move(rows), parallel_);
    std::vector<Row> kernel = constraints.kernel_basis();
    Echelon<Ctx> out(ctx_, dim());
    out.insert_batch(std::move(kernel), parallel_);
    return out;
}

template class TruncatedQuotient<FpCtx>;
template class TruncatedQuotient<QQCtx>;

// ---------------------------------------------------------------------------

ArtinianBasis artinian_basis(const IdealHandle& I) {
    const Ring& ring = I.ring();
    auto gb = I.basis(degrevlex());
    if (!gb->zero_dimensional(ring.nvars()))
        throw InputError(
            "artinian_basis requires a zero-dimensional ideal (no pure power "
            "of some variable among the leading terms)");
    ArtinianBasis ab;
    ab.monomials = standard_monomials(*gb, ring.nvars());
    const std::uint32_t n = ab.dim();
    const Field& F = ring.field;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    for (std::uint32_t i = 0; i < n; ++i) index.emplace(ab.monomials[i], i);
    ab.tables.resize(ring.nvars());
    for (int v = 0; v < ring.nvars(); ++v) {
        auto& tab = ab.tables[v];
        tab.assign(static_cast<std::size_t>(n) * n, F.zero());
        for (std::uint32_t s = 0; s < n; ++s) {
            Monomial m = ab.monomials[s] * Monomial::var(v);
            Polynomial nf = normal_form(
                Polynomial::from_terms({{m, F.one()}}, ring, degrevlex()), *gb, ring);
            for (const auto& t : nf.terms()) {
                auto it = index.find(t.mono);
                tab[static_cast<std::size_t>(s) * n + it->second] = t.coef;
            }
        }
    }
    return ab;
}

std::uint32_t socle_dimension(const ArtinianBasis& ab, const Field& F) {
    // common kernel of all multiplication maps: stack them and eliminate
    const std::uint32_t n = ab.dim();
    if (n == 0) return 0;
    std::vector<std::vector<Scalar>> rows;  // constraints over n unknowns
    for (const auto& tab : ab.tables) {
        for (std::uint32_t t = 0; t < n; ++t) {
            std::vector<Scalar> row(n, F.zero());
            bool nonzero = false;
            for (std::uint32_t s = 0; s < n; ++s) {
                row[s] = tab[static_cast<std::size_t>(s) * n + t];
                if (!F.is_zero(row[s])) nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    // dense elimination
    std::uint32_t rank = 0;
    std::vector<std::vector<Scalar>> reduced;
    for (auto& row : rows) {
        for (const auto& p : reduced) {
            std::uint32_t lead = 0;
            while (lead < n && F.is_zero(p[lead])) ++lead;
            if (lead == n || F.is_zero(row[lead])) continue;
            Scalar c = row[lead];
            for (std::uint32_t k = lead; k < n; ++k)
                row[k] = F.sub(row[k], F.mul(c, p[k]));
        }
        std::uint32_t lead = 0;
        while (lead < n && F.is_zero(row[lead])) ++lead;
        if (lead == n) continue;
        Scalar inv = F.inv(row[lead]);
        for (std::uint32_t k = lead; k < n; ++k) row[k] = F.mul(row[k], inv);
        reduced.push_back(std::move(row));
        ++rank;
    }
    return n - rank;
}

}  // namespace locring
