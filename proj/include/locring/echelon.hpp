#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "locring/field.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace locring {

// Scalar contexts for the sparse linear algebra. FpCtx is the hot path; QQCtx
// serves exact-rational certification runs.
struct FpCtx {
    using value_type = std::uint64_t;
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t inv(std::uint64_t a) const { return fp_inverse(a, p); }
    std::uint64_t one() const { return 1; }
    bool is_zero(std::uint64_t a) const { return a == 0; }
    bool is_one(std::uint64_t a) const { return a == 1; }
};

struct QQCtx {
    using value_type = mpq_class;

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return a + b; }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return a - b; }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return a * b; }
    mpq_class neg(const mpq_class& a) const { return -a; }
    mpq_class inv(const mpq_class& a) const { return 1 / a; }
    mpq_class one() const { return mpq_class(1); }
    bool is_zero(const mpq_class& a) const { return a == 0; }
    bool is_one(const mpq_class& a) const { return a == 1; }
};

template <class Ctx>
struct SparseRow {
    using V = typename Ctx::value_type;
    // entries sorted by column ascending; leading entry = minimal column
    std::vector<std::pair<std::uint32_t, V>> e;

    bool empty() const { return e.empty(); }
    std::uint32_t lead_col() const { return e.front().first; }
    void push(std::uint32_t col, V v) { e.emplace_back(col, std::move(v)); }
    void sort() {
        std::sort(e.begin(), e.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
};

// Incremental sparse row echelon over a fixed column range. Pivot rows are
// kept monic with pairwise distinct leading columns; normalize() turns them
// into the (unique) reduced row echelon form, which makes every downstream
// artifact - kernels, quotient representatives - canonical and therefore
// byte-reproducible no matter how many threads fed the batches.
template <class Ctx>
class Echelon {
  public:
    using Row = SparseRow<Ctx>;
    using V = typename Ctx::value_type;

    Echelon(Ctx ctx, std::uint32_t ncols)
        : ctx_(ctx), ncols_(ncols), pivot_of_col_(ncols, -1) {}

    std::uint32_t ncols() const { return ncols_; }
    std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }
    const Ctx& ctx() const { return ctx_; }
    const std::vector<Row>& rows() const { return rows_; }

    // r -= c * s, where s is monic with lead_col == r's current match point
    static Row axpy(const Ctx& ctx, const Row& r, const V& c, const Row& s) {
        Row out;
        out.e.reserve(r.e.size() + s.e.size());
        std::size_t i = 0, j = 0;
        while (i < r.e.size() || j < s.e.size()) {
            if (j == s.e.size() || (i < r.e.size() && r.e[i].first < s.e[j].first)) {
                out.e.push_back(r.e[i++]);
            } else if (i == r.e.size() || s.e[j].first < r.e[i].first) {
                out.e.emplace_back(s.e[j].first, ctx.neg(ctx.mul(c, s.e[j].second)));
                ++j;
            } else {
                V v = ctx.sub(r.e[i].second, ctx.mul(c, s.e[j].second));
                if (!ctx.is_zero(v)) out.e.emplace_back(r.e[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    // eliminate the leading entry repeatedly; complete for membership tests
    void reduce(Row& r) const {
        while (!r.empty()) {
            std::int64_t idx = pivot_of_col_[r.lead_col()];
            if (idx < 0) return;
            r = axpy(ctx_, r, r.e.front().second, rows_[static_cast<std::size_t>(idx)]);
        }
    }

    bool contains(Row r) const {
        reduce(r);
        return r.empty();
    }

    // reduce then install as a pivot row; true if the rank grew
    bool insert(Row r) {
        reduce(r);
        if (r.empty()) return false;
        if (!ctx_.is_one(r.e.front().second)) {
            V s = ctx_.inv(r.e.front().second);
            for (auto& ent : r.e) ent.second = ctx_.mul(ent.second, s);
        }
        pivot_of_col_[r.lead_col()] = static_cast<std::int64_t>(rows_.size());
        rows_.push_back(std::move(r));
        normalized_ = false;
        return true;
    }

    // Batch insert. The parallel variant pre-reduces every row against the
    // pivot table as it stood when the batch arrived (read-only), then the
    // serial completion pass finishes the job in input order. Results are
    // identical to the serial path: the final reduced echelon is canonical.
    void insert_batch(std::vector<Row>&& batch, bool parallel) {
#ifdef _OPENMP
        if (parallel && batch.size() >= 128) {
            const std::int64_t n = static_cast<std::int64_t>(batch.size());
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < n; ++i) reduce(batch[static_cast<std::size_t>(i)]);
        }
#else
        (void)parallel;
#endif
        for (auto& r : batch) insert(std::move(r));
        batch.clear();
    }

    // Unique reduced row echelon form: rows sorted by leading column, monic,
    // and fully inter-reduced.
    void normalize() {
        if (normalized_) return;
        std::sort(rows_.begin(), rows_.end(),
                  [](const Row& a, const Row& b) { return a.lead_col() < b.lead_col(); });
        for (std::size_t i = 0; i < rows_.size(); ++i)
            pivot_of_col_[rows_[i].lead_col()] = static_cast<std::int64_t>(i);
        // tails only contain columns greater than the own pivot, so sweeping
        // from the largest pivot down fully reduces in one pass
        for (std::size_t i = rows_.size(); i-- > 0;) {
            Row& r = rows_[i];
            std::size_t j = 1;
            while (j < r.e.size()) {
                std::int64_t idx = pivot_of_col_[r.e[j].first];
                if (idx < 0) {
                    ++j;
                    continue;
                }
                r = axpy(ctx_, r, r.e[j].second, rows_[static_cast<std::size_t>(idx)]);
            }
        }
        normalized_ = true;
    }

    std::vector<std::uint32_t> pivot_cols() const {
        std::vector<std::uint32_t> out;
        out.reserve(rows_.size());
        for (std::uint32_t c = 0; c < ncols_; ++c)
            if (pivot_of_col_[c] >= 0) out.push_back(c);
        return out;
    }

    bool is_pivot_col(std::uint32_t c) const { return pivot_of_col_[c] >= 0; }

    const Row* row_for_pivot(std::uint32_t col) const {
        std::int64_t idx = pivot_of_col_[col];
        return idx < 0 ? nullptr : &rows_[static_cast<std::size_t>(idx)];
    }

    // Nullspace of the matrix whose rows are the inserted rows, read as linear
    // constraints on the ncols unknowns. Canonical basis, one vector per free
    // column, derived from the RREF.
    std::vector<Row> kernel_basis() {
        normalize();
        // transpose the non-pivot columns once: col -> [(pivot col, value)]
        std::vector<std::vector<std::pair<std::uint32_t, V>>> by_col(ncols_);
        for (const Row& r : rows_)
            for (std::size_t j = 1; j < r.e.size(); ++j)
                by_col[r.e[j].first].emplace_back(r.lead_col(), r.e[j].second);
        std::vector<Row> out;
        for (std::uint32_t f = 0; f < ncols_; ++f) {
            if (pivot_of_col_[f] >= 0) continue;
            Row v;
            v.push(f, ctx_.one());
            for (const auto& [p, a] : by_col[f]) v.push(p, ctx_.neg(a));
            v.sort();
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    Ctx ctx_;
    std::uint32_t ncols_;
    std::vector<std::int64_t> pivot_of_col_;
    std::vector<Row> rows_;
    bool normalized_ = false;
};

// intersection of two row spaces (Zassenhaus doubling)
template <class Ctx>
Echelon<Ctx> rowspace_intersection(const Echelon<Ctx>& U, const Echelon<Ctx>& W) {
    const std::uint32_t n = U.ncols();
    Echelon<Ctx> big(U.ctx(), 2 * n);
    using Row = SparseRow<Ctx>;
    for (const Row& u : U.rows()) {
        Row r;
        for (const auto& e : u.e) r.push(e.first, e.second);
        for (const auto& e : u.e) r.push(e.first + n, e.second);
        big.insert(std::move(r));
    }
    for (const Row& w : W.rows()) {
        Row r;
        for (const auto& e : w.e) r.push(e.first, e.second);
        big.insert(std::move(r));
    }
    big.normalize();
    Echelon<Ctx> out(U.ctx(), n);
    for (const Row& r : big.rows()) {
        if (r.lead_col() < n) continue;  // left half nonzero
        Row v;
        for (const auto& e : r.e) v.push(e.first - n, e.second);
        out.insert(std::move(v));
    }
    return out;
}

template <class Ctx>
bool rowspace_contains(const Echelon<Ctx>& U, const Echelon<Ctx>& W) {
    for (const auto& r : W.rows())
        if (!U.contains(r)) return false;
    return true;
}

template <class Ctx>
bool rowspace_equal(const Echelon<Ctx>& U, const Echelon<Ctx>& W) {
    return U.rank() == W.rank() && rowspace_contains(U, W);
}

}  // namespace locring
