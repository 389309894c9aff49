#include "locring/monomial.hpp"

namespace locring {

namespace {

void enumerate(int nvars, int v, std::uint32_t remaining, Monomial& acc,
               bool exact, const std::function<void(const Monomial&)>& visit) {
    if (v == nvars - 1) {
        Monomial m = acc;
        if (exact) {
            m.set_exp(v, static_cast<std::uint16_t>(remaining));
            visit(m);
        } else {
            for (std::uint32_t e = remaining + 1; e-- > 0;) {
                m.set_exp(v, static_cast<std::uint16_t>(e));
                visit(m);
            }
        }
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        acc.set_exp(v, static_cast<std::uint16_t>(e));
        enumerate(nvars, v + 1, remaining - e, acc, exact, visit);
    }
    acc.set_exp(v, 0);
}

}  // namespace

void for_each_monomial(int nvars, std::uint32_t lo, std::uint32_t hi,
                       const std::function<void(const Monomial&)>& visit) {
    for (std::uint32_t d = lo; d <= hi; ++d) {
        Monomial acc;
        if (nvars == 0) {
            if (d == 0) visit(acc);
            continue;
        }
        enumerate(nvars, 0, d, acc, /*exact=*/true, visit);
    }
}

std::vector<Monomial> monomials_of_degree(int nvars, std::uint32_t d) {
    std::vector<Monomial> out;
    for_each_monomial(nvars, d, d, [&](const Monomial& m) { out.push_back(m); });
    return out;
}

std::uint64_t count_monomials_upto(int nvars, std::uint32_t d) {
    // C(d + nvars, nvars)
    std::uint64_t num = 1;
    for (int i = 1; i <= nvars; ++i) {
        num = num * (d + i) / i;  // exact at each step
    }
    return num;
}

}  // namespace locring
