#include "locring/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace locring {

Polynomial Polynomial::from_terms(std::vector<Term> terms, const Ring& ring,
                                  MonomialOrder ord) {
    const Field& F = ring.field;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return cmp(a.mono, b.mono, ord) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coef = F.add(merged.back().coef, t.coef);
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::vector<Term> out;
    out.reserve(merged.size());
    for (auto& t : merged)
        if (!F.is_zero(t.coef)) out.push_back(std::move(t));
    Polynomial p;
    p.terms_ = std::move(out);
    p.ord_ = ord;
    p.nvars_ = static_cast<std::uint8_t>(ring.nvars());
    p.char_ = ring.field.characteristic();
    return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms, const Ring& ring,
                                         MonomialOrder ord) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.ord_ = ord;
    p.nvars_ = static_cast<std::uint8_t>(ring.nvars());
    p.char_ = ring.field.characteristic();
    return p;
}

std::uint32_t Polynomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::uint32_t Polynomial::tail_degree() const {
    std::uint32_t d = terms_.empty() ? 0 : terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
}

Polynomial Polynomial::with_order(MonomialOrder ord, const Ring& ring) const {
    if (ord == ord_) return *this;
    return from_terms(terms_, ring, ord);
}

namespace {

void check_compatible(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    if (!f.zero() && (f.nvars() != ring.nvars() || f.field_char() != ring.field.characteristic()))
        throw InputError("polynomial does not belong to this ring");
    if (!g.zero() && (g.nvars() != ring.nvars() || g.field_char() != ring.field.characteristic()))
        throw InputError("polynomial does not belong to this ring");
    if (!f.zero() && !g.zero()) {
        if (f.nvars() != g.nvars()) throw InputError("mixed-arity polynomial operands");
        if (f.field_char() != g.field_char())
            throw InputError("mixed-field polynomial operands");
    }
}

// merge under a common order; sgn = +1 for add, -1 for sub
Polynomial merge(const Polynomial& f, const Polynomial& g, const Ring& ring, int sgn) {
    const Field& F = ring.field;
    MonomialOrder ord = f.zero() ? g.order() : f.order();
    Polynomial gg = g.with_order(ord, ring);
    std::vector<Term> out;
    out.reserve(f.size() + gg.size());
    std::size_t i = 0, j = 0;
    const auto& a = f.terms();
    const auto& b = gg.terms();
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = cmp(a[i].mono, b[j].mono, ord);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            Scalar v = sgn > 0 ? b[j].coef : F.neg(b[j].coef);
            out.push_back({b[j].mono, std::move(v)});
            ++j;
        } else {
            Scalar v = sgn > 0 ? F.add(a[i].coef, b[j].coef) : F.sub(a[i].coef, b[j].coef);
            if (!F.is_zero(v)) out.push_back({a[i].mono, std::move(v)});
            ++i;
            ++j;
        }
    }
    return Polynomial::from_sorted_terms(std::move(out), ring, ord);
}

}  // namespace

Polynomial poly_add(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    check_compatible(f, g, ring);
    return merge(f, g, ring, +1);
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    check_compatible(f, g, ring);
    return merge(f, g, ring, -1);
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    check_compatible(f, g, ring);
    const Field& F = ring.field;
    MonomialOrder ord = f.zero() ? g.order() : f.order();
    std::vector<Term> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms())
        for (const auto& b : g.terms())
            out.push_back({a.mono * b.mono, F.mul(a.coef, b.coef)});
    return Polynomial::from_terms(std::move(out), ring, ord);
}

Polynomial poly_neg(const Polynomial& f, const Ring& ring) {
    const Field& F = ring.field;
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.coef = F.neg(t.coef);
    return Polynomial::from_terms(std::move(out), ring, f.order());
}

Polynomial term_mul(const Polynomial& f, const Scalar& c, const Monomial& m,
                    const Ring& ring) {
    const Field& F = ring.field;
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Scalar v = F.mul(t.coef, c);
        if (!F.is_zero(v)) out.push_back({t.mono * m, std::move(v)});
    }
    // monomial orders are multiplicative, so sortedness is preserved
    return Polynomial::from_sorted_terms(std::move(out), ring, f.order());
}

Polynomial poly_submul(const Polynomial& f, const Scalar& c, const Monomial& m,
                       const Polynomial& g, const Ring& ring) {
    return poly_sub(f, term_mul(g, c, m, ring), ring);
}

Polynomial monic(const Polynomial& f, const Ring& ring) {
    if (f.zero()) return f;
    const Field& F = ring.field;
    if (F.is_one(f.lead().coef)) return f;
    Scalar s = F.inv(f.lead().coef);
    return term_mul(f, s, Monomial{}, ring);
}

Polynomial truncate_degrees(const Polynomial& f, std::uint32_t cap, const Ring& ring) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms())
        if (t.mono.degree() < cap) out.push_back(t);
    if (out.size() == f.size()) return f;
    return Polynomial::from_terms(std::move(out), ring, f.order());
}

bool poly_equal(const Polynomial& f, const Polynomial& g, const Ring& ring) {
    return poly_sub(f, g, ring).zero();
}

Polynomial initial_form(const Polynomial& f, const Ring& ring) {
    if (f.zero()) throw InputError("initial form of the zero element is undefined");
    std::uint32_t d = f.tail_degree();
    std::vector<Term> out;
    for (const auto& t : f.terms())
        if (t.mono.degree() == d) out.push_back(t);
    return Polynomial::from_terms(std::move(out), ring, f.order());
}

Term leading_term(const Polynomial& f, MonomialOrder ord) {
    if (f.zero()) throw InputError("leading term of the zero element is undefined");
    const Term* best = &f.terms().front();
    for (const auto& t : f.terms())
        if (cmp(t.mono, best->mono, ord) > 0) best = &t;
    return *best;
}

std::string to_string(const Monomial& m, const Ring& ring) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int v = 0; v < ring.nvars(); ++v) {
        if (m.exp(v) == 0) continue;
        if (!first) os << "*";
        os << ring.vars[v];
        if (m.exp(v) > 1) os << "^" << m.exp(v);
        first = false;
    }
    return os.str();
}

std::string to_string(const Polynomial& f, const Ring& ring) {
    if (f.zero()) return "0";
    const Field& F = ring.field;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string c = F.to_string(t.coef);
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c = c.substr(1);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (t.mono.is_unit()) {
            os << c;
        } else {
            if (c != "1") os << c << "*";
            os << to_string(t.mono, ring);
        }
    }
    return os.str();
}

Ring Ring::with_tag() const {
    Ring r = *this;
    if (r.nvars() >= kMaxVars)
        throw InputError("too many variables for a tag extension");
    r.vars.push_back("@t");
    return r;
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
    const std::string& s;
    const Ring& ring;
    MonomialOrder ord;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("at offset " + std::to_string(pos) + ": " + msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Polynomial expression() {
        Polynomial acc;
        bool negate = false;
        skip_ws();
        if (eat('+')) {
        } else if (eat('-')) {
            negate = true;
        }
        acc = term();
        if (negate) acc = poly_neg(acc, ring);
        for (;;) {
            if (eat('+')) {
                acc = poly_add(acc, term(), ring);
            } else if (eat('-')) {
                acc = poly_sub(acc, term(), ring);
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = poly_mul(acc, power(), ring);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
                // juxtaposition: "2x", "x(y+1)"
                acc = poly_mul(acc, power(), ring);
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (eat('^')) {
            long long e = integer();
            if (e < 0) fail("negative exponent");
            Polynomial acc = Polynomial::from_terms({{Monomial{}, ring.field.one()}}, ring, ord);
            for (long long i = 0; i < e; ++i) acc = poly_mul(acc, base, ring);
            return acc;
        }
        return base;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }

    Polynomial atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Polynomial inner = expression();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            Scalar v = ring.field.from_decimal_string(s.substr(start, pos - start), false);
            return Polynomial::from_terms({{Monomial{}, std::move(v)}}, ring, ord);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int v = ring.var_index(name);
            if (v < 0) fail("unknown variable '" + name + "'");
            return Polynomial::from_terms({{Monomial::var(v), ring.field.one()}}, ring, ord);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring, MonomialOrder ord) {
    Parser p{text, ring, ord};
    Polynomial out = p.expression();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace locring
