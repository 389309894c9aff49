#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "locring/echelon.hpp"
#include "locring/ideal.hpp"

namespace locring {

template <class Ctx>
typename Ctx::value_type ctx_value(const Field& F, const Scalar& s);

template <>
inline FpCtx::value_type ctx_value<FpCtx>(const Field& F, const Scalar& s) {
    return F.fp(s);
}
template <>
inline QQCtx::value_type ctx_value<QQCtx>(const Field& F, const Scalar& s) {
    return F.qq(s);
}

template <class Ctx>
Scalar ctx_to_scalar(const Field& F, const typename Ctx::value_type& v);

template <>
inline Scalar ctx_to_scalar<FpCtx>(const Field& F, const std::uint64_t& v) {
    return F.from_fp(v);
}
template <>
inline Scalar ctx_to_scalar<QQCtx>(const Field& F, const mpq_class& v) {
    return F.from_qq(v);
}

inline FpCtx make_ctx_fp(const Field& F) { return FpCtx{F.characteristic()}; }

// The Artinian quotient A/m^level for A = R/I, presented on the standard
// monomials of the capped Groebner basis. Ideals of A that contain m^level
// become subspaces here, and all the length bookkeeping of the pipeline is
// rank arithmetic on those subspaces.
template <class Ctx>
class TruncatedQuotient {
  public:
    using Row = SparseRow<Ctx>;

    TruncatedQuotient(const IdealHandle& I, std::uint32_t level, Ctx ctx, bool parallel);

    std::uint32_t level() const { return level_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    const Ring& ring() const { return I_.ring(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const GroebnerBasis& gb() const { return *gb_; }
    bool parallel() const { return parallel_; }

    std::int64_t index_of(const Monomial& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
    }

    Row to_vector(const Polynomial& f) const;
    Polynomial lift(const Row& r) const;

    Row mul_var(int v, const Row& r) const;
    Row mul_mono(const Monomial& m, const Row& r) const;
    Row mul_poly(const Polynomial& f, const Row& r) const;

    // span of the image of the ideal generated by gens (closure under the
    // variable multiplications)
    Echelon<Ctx> ideal_span(std::span<const Polynomial> gens) const;
    // extend an already-closed span by more ideal generators
    void extend_ideal_span(Echelon<Ctx>& sp, std::span<const Row> seed_rows) const;

    // image of m^n, cached; n > level gives the zero span
    const Echelon<Ctx>& power_span(std::uint32_t n) const;

    // (W : m) as a subspace: all v with x_j v in W for every variable
    Echelon<Ctx> colon_by_maximal(const Echelon<Ctx>& W) const;
    // (W : f) for a single ring element
    Echelon<Ctx> colon_by_poly(const Echelon<Ctx>& W, const Polynomial& f) const;

    Echelon<Ctx> empty_span() const { return Echelon<Ctx>(ctx_, dim()); }

  private:
    const Echelon<Ctx>& var_column_space(int v) const;

    IdealHandle I_;
    std::uint32_t level_;
    Ctx ctx_;
    bool parallel_;
    std::shared_ptr<const GroebnerBasis> gb_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
    mutable std::vector<std::vector<Row>> var_cols_;  // [v][basis idx], lazy
    mutable std::vector<char> var_cols_ready_;
    mutable std::map<std::uint32_t, Echelon<Ctx>> powers_;
};

// standard monomials of a capped (or zero-dimensional) basis, ascending
// (degree, then degrevlex); generated as an order ideal so the cost scales
// with the answer, not with the ambient monomial count
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int nvars,
                                         std::int64_t degree_bound = -1);

// Zero-dimensional quotient with dense multiplication tables; the scaffolding
// for socle and type computations.
struct ArtinianBasis {
    std::vector<Monomial> monomials;
    // tables[v] is column-major dim x dim: column s holds NF(x_v * monomials[s])
    std::vector<std::vector<Scalar>> tables;

    std::uint32_t dim() const { return static_cast<std::uint32_t>(monomials.size()); }
};

// Requires the lead ideal to contain a pure power of every variable.
ArtinianBasis artinian_basis(const IdealHandle& I);

// dim_k of the common kernel of all multiplication maps
std::uint32_t socle_dimension(const ArtinianBasis& ab, const Field& F);

// shared level cache so every window evaluation reuses the capped bases
template <class Ctx>
class LevelCache {
  public:
    LevelCache(IdealHandle I, Ctx ctx, bool parallel)
        : I_(std::move(I)), ctx_(ctx), parallel_(parallel) {}

    const TruncatedQuotient<Ctx>& at(std::uint32_t level) {
        auto it = cache_.find(level);
        if (it == cache_.end()) {
            it = cache_
                     .emplace(level, std::make_shared<TruncatedQuotient<Ctx>>(
                                         I_, level, ctx_, parallel_))
                     .first;
        }
        return *it->second;
    }

    const IdealHandle& ideal() const { return I_; }
    Ctx ctx() const { return ctx_; }

  private:
    IdealHandle I_;
    Ctx ctx_;
    bool parallel_;
    std::map<std::uint32_t, std::shared_ptr<TruncatedQuotient<Ctx>>> cache_;
};

extern template class TruncatedQuotient<FpCtx>;
extern template class TruncatedQuotient<QQCtx>;

}  // namespace locring
