#include "locring/field.hpp"

namespace locring {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
        throw InputError("field characteristic must be 0 or a prime, got " +
                         std::to_string(p_));
}

std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p) {
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::logic_error("fp_inverse: not invertible");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

Scalar Field::zero() const {
    if (modular()) return Scalar(std::uint64_t{0});
    return Scalar(mpq_class(0));
}

Scalar Field::one() const {
    if (modular()) return Scalar(std::uint64_t{1});
    return Scalar(mpq_class(1));
}

Scalar Field::from_int(long long n) const {
    if (modular()) {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return Scalar(static_cast<std::uint64_t>(r));
    }
    mpq_class q(static_cast<long>(n));
    return Scalar(std::move(q));
}

Scalar Field::from_decimal_string(const std::string& digits, bool negative) const {
    mpz_class z(digits, 10);
    if (negative) z = -z;
    if (modular()) {
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return Scalar(r.get_ui());
    }
    return Scalar(mpq_class(z));
}

bool Field::is_zero(const Scalar& a) const {
    if (modular()) return fp(a) == 0;
    return qq(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
    if (modular()) return fp(a) == 1;
    return qq(a) == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    if (modular()) return fp(a) == fp(b);
    return qq(a) == qq(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (modular()) {
        std::uint64_t s = fp(a) + fp(b);
        if (s >= p_) s -= p_;
        return Scalar(s);
    }
    return Scalar(mpq_class(qq(a) + qq(b)));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (modular()) {
        std::uint64_t x = fp(a), y = fp(b);
        return Scalar(x >= y ? x - y : x + p_ - y);
    }
    return Scalar(mpq_class(qq(a) - qq(b)));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (modular()) return Scalar((fp(a) * fp(b)) % p_);
    return Scalar(mpq_class(qq(a) * qq(b)));
}

Scalar Field::neg(const Scalar& a) const {
    if (modular()) {
        std::uint64_t x = fp(a);
        return Scalar(x == 0 ? 0 : p_ - x);
    }
    return Scalar(mpq_class(-qq(a)));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw std::logic_error("division by zero");
    if (modular()) return Scalar(fp_inverse(fp(a), p_));
    return Scalar(mpq_class(1 / qq(a)));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::submul(const Scalar& a, const Scalar& b, const Scalar& c) const {
    if (modular()) {
        std::uint64_t prod = (fp(b) * fp(c)) % p_;
        std::uint64_t x = fp(a);
        return Scalar(x >= prod ? x - prod : x + p_ - prod);
    }
    return Scalar(mpq_class(qq(a) - qq(b) * qq(c)));
}

std::string Field::to_string(const Scalar& a) const {
    if (modular()) return std::to_string(fp(a));
    return qq(a).get_str();
}

Scalar Field::from_qq(mpq_class q) const {
    q.canonicalize();
    return Scalar(std::move(q));
}

}  // namespace locring
