#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locring/monomial.hpp"
#include "locring/ring.hpp"

namespace locring {

struct Term {
    Monomial mono;
    Scalar coef;
};

// Exact multivariate polynomial. Terms are kept strictly descending under the
// order the polynomial was normalized with, with no zero coefficients; the
// leading term is always terms().front().
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial from_terms(std::vector<Term> terms, const Ring& ring,
                                 MonomialOrder ord);
    // terms already strictly descending under ord with no zero coefficients
    static Polynomial from_sorted_terms(std::vector<Term> terms, const Ring& ring,
                                        MonomialOrder ord);

    bool zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    MonomialOrder order() const { return ord_; }
    int nvars() const { return nvars_; }
    std::uint32_t field_char() const { return char_; }

    const Term& lead() const { return terms_.front(); }

    // max / min total degree over all terms
    std::uint32_t degree() const;
    std::uint32_t tail_degree() const;
    bool homogeneous() const { return zero() || degree() == tail_degree(); }

    Polynomial with_order(MonomialOrder ord, const Ring& ring) const;

  private:
    std::vector<Term> terms_;
    MonomialOrder ord_;
    std::uint8_t nvars_ = 0;
    std::uint32_t char_ = 0;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g, const Ring& ring);
Polynomial poly_sub(const Polynomial& f, const Polynomial& g, const Ring& ring);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const Ring& ring);
Polynomial poly_neg(const Polynomial& f, const Ring& ring);

// f - c * m * g; the reduction step
Polynomial poly_submul(const Polynomial& f, const Scalar& c, const Monomial& m,
                       const Polynomial& g, const Ring& ring);
Polynomial term_mul(const Polynomial& f, const Scalar& c, const Monomial& m,
                    const Ring& ring);
// leading coefficient scaled to 1
Polynomial monic(const Polynomial& f, const Ring& ring);
// drop all terms of total degree >= cap
Polynomial truncate_degrees(const Polynomial& f, std::uint32_t cap, const Ring& ring);

bool poly_equal(const Polynomial& f, const Polynomial& g, const Ring& ring);

// The sum of all terms of minimal total degree: the image of f in
// m^n / m^{n+1} for n = tail degree, as a form. Rejects zero input.
Polynomial initial_form(const Polynomial& f, const Ring& ring);

// Maximal term under ord, without resorting the whole polynomial.
Term leading_term(const Polynomial& f, MonomialOrder ord);

std::string to_string(const Polynomial& f, const Ring& ring);
std::string to_string(const Monomial& m, const Ring& ring);

// Expression parser: integer coefficients, named variables, ^, *, +, -,
// parentheses. Offsets in errors are byte positions into `text`.
Polynomial parse_polynomial(const std::string& text, const Ring& ring,
                            MonomialOrder ord = degrevlex());

}  // namespace locring
