#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace locring {

// Error taxonomy maps onto the CLI exit codes: input -> 2, stabilization -> 3,
// verification mismatch -> 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StabilizationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coefficient: residue mod p, or an exact rational. Which alternative is
// live is decided by the Field that created it; mixing fields is rejected by
// the polynomial layer.
using Scalar = std::variant<std::uint64_t, mpq_class>;

// Coefficient domain Q (characteristic 0) or F_p. The default modulus 32003
// is large enough that randomized generic choices behave as over an infinite
// residue field; exact Q is available for certification runs.
class Field {
  public:
    Field() : p_(32003) {}
    explicit Field(std::uint32_t characteristic);

    std::uint32_t characteristic() const { return p_; }
    bool modular() const { return p_ != 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long n) const;
    Scalar from_decimal_string(const std::string& digits, bool negative) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    // a - b*c, the inner step of every reduction loop
    Scalar submul(const Scalar& a, const Scalar& b, const Scalar& c) const;

    std::string to_string(const Scalar& a) const;

    std::uint64_t fp(const Scalar& a) const { return std::get<std::uint64_t>(a); }
    Scalar from_fp(std::uint64_t r) const { return Scalar(r % p_); }
    const mpq_class& qq(const Scalar& a) const { return std::get<mpq_class>(a); }
    Scalar from_qq(mpq_class q) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }

  private:
    std::uint32_t p_;
};

// Modular inverse by extended Euclid; a must be nonzero mod p.
std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace locring
