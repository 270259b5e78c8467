#pragma once

// Arithmetic over the prime field F_q and the extension F_{q^n} = F_q[x]/(p(x)).
//
// Elements of F_{q^n} are stored as coefficient vectors over the power basis
// 1, alpha, ..., alpha^{n-1}; coords[i] is the coefficient of alpha^i. This is
// exactly the row-vector representation used by the linalg module, so the
// standard isomorphism F_q^n -> F_{q^n} is the identity on the data.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitcodes {

using fq_t = std::uint32_t;

inline constexpr std::uint64_t kDefaultLogTableCap = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t value);

/// q^n, throwing InvalidArgument if it does not fit in 63 bits.
std::uint64_t checked_power(std::uint64_t q, unsigned n);

/// Prime factors of value in increasing order, without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t value);

/// All positive divisors of value in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t value);

class PrimeField {
public:
    explicit PrimeField(fq_t q);

    fq_t q() const noexcept { return q_; }

    fq_t add(fq_t a, fq_t b) const noexcept {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<fq_t>(s >= q_ ? s - q_ : s);
    }
    fq_t sub(fq_t a, fq_t b) const noexcept { return a >= b ? a - b : static_cast<fq_t>(a + (q_ - b)); }
    fq_t neg(fq_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
    fq_t mul(fq_t a, fq_t b) const noexcept {
        return static_cast<fq_t>((std::uint64_t{a} * b) % q_);
    }
    fq_t pow(fq_t a, std::uint64_t e) const noexcept;
    /// Multiplicative inverse; a must be nonzero.
    fq_t inv(fq_t a) const;

private:
    fq_t q_;
};

/// Polynomial over F_q, coefficients in ascending degree order.
class PolyFq {
public:
    PolyFq(fq_t q, std::vector<fq_t> coeffs);

    static PolyFq zero(fq_t q) { return PolyFq(q, {}); }
    static PolyFq constant(fq_t q, fq_t c) { return PolyFq(q, {c}); }
    static PolyFq monomial(fq_t q, unsigned degree, fq_t c = 1);

    /// Accepts an ascending coefficient list ("1,1,0,0,0,0,1") or a human
    /// form ("x^6+x+1", "2x^2-x+1").
    static PolyFq parse(std::string_view text, fq_t q);

    fq_t q() const noexcept { return q_; }
    const std::vector<fq_t>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    fq_t leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    fq_t operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    fq_t evaluate(fq_t point) const;

    PolyFq monic() const;

    /// Canonical human form, highest degree first: "x^6+x+1".
    std::string to_string() const;
    /// Ascending comma-separated coefficient list: "1,1,0,0,0,0,1".
    std::string to_coefficient_list() const;

    friend bool operator==(const PolyFq&, const PolyFq&) = default;
    friend PolyFq operator+(const PolyFq& a, const PolyFq& b);
    friend PolyFq operator-(const PolyFq& a, const PolyFq& b);
    friend PolyFq operator*(const PolyFq& a, const PolyFq& b);

private:
    void trim();

    fq_t q_;
    std::vector<fq_t> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<PolyFq, PolyFq> divmod(const PolyFq& a, const PolyFq& b);
PolyFq operator%(const PolyFq& a, const PolyFq& b);
PolyFq gcd(PolyFq a, PolyFq b);
PolyFq powmod(const PolyFq& base, std::uint64_t exponent, const PolyFq& modulus);

/// Deterministic irreducibility test: gcd(x^{q^i} - x, p) = 1 for i <= deg/2
/// together with x^{q^n} = x (mod p).
bool is_irreducible(const PolyFq& p);

/// Smallest e >= 1 with p | x^e - 1. Requires p irreducible with p(0) != 0.
std::uint64_t poly_order(const PolyFq& p);

bool is_primitive(const PolyFq& p);

/// Element of F_{q^n}; coords[i] is the coefficient of alpha^i.
struct ExtElem {
    fq_t q = 2;
    unsigned n = 0;
    std::vector<fq_t> coords;

    bool is_zero() const noexcept;
    /// Digit string, low degree first: alpha^4 + alpha^3 in F_{2^6} -> "000110".
    std::string to_string() const;

    friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// Base-q integer encoding with coords[0] as the least significant digit.
std::uint64_t encode_coords(const std::vector<fq_t>& coords, fq_t q);
std::vector<fq_t> decode_coords(std::uint64_t code, fq_t q, unsigned n);

class ExtField {
public:
    /// The modulus must be irreducible of degree n >= 1 with nonzero constant
    /// term; it is normalized to monic form.
    explicit ExtField(const PolyFq& modulus, std::uint64_t log_table_cap = kDefaultLogTableCap);

    fq_t q() const noexcept { return base_.q(); }
    unsigned n() const noexcept { return n_; }
    const PrimeField& base() const noexcept { return base_; }
    const PolyFq& modulus() const noexcept { return modulus_; }
    /// q^n
    std::uint64_t size() const noexcept { return size_; }
    /// Multiplicative order of alpha, equal to the order of the modulus.
    std::uint64_t order() const noexcept { return order_; }
    bool is_primitive() const noexcept { return primitive_; }
    std::uint64_t log_table_cap() const noexcept { return log_cap_; }

    ExtElem zero() const;
    ExtElem one() const;
    ExtElem alpha() const;
    /// Validates length and range.
    ExtElem element(std::vector<fq_t> coords) const;

    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem scale(fq_t c, const ExtElem& a) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem mul_alpha(const ExtElem& a) const;
    ExtElem pow(const ExtElem& a, std::uint64_t e) const;

    /// alpha^i with i reduced modulo order(); negative i allowed.
    ExtElem alpha_power(std::int64_t i) const;
    /// Unique b in [0, q^n - 2] with alpha^b = v.
    std::uint64_t discrete_log(const ExtElem& v) const;

    bool same_field(const ExtField& other) const noexcept { return modulus_ == other.modulus_; }

private:
    void check_member(const ExtElem& a) const;
    const std::vector<std::uint64_t>& log_table() const;

    struct LogCache;

    PrimeField base_;
    PolyFq modulus_;
    unsigned n_;
    std::uint64_t size_;
    std::uint64_t order_;
    bool primitive_;
    std::uint64_t log_cap_;
    std::shared_ptr<LogCache> cache_;
};

ExtElem ext_mul(const ExtElem& a, const ExtElem& b, const ExtField& field);
ExtElem alpha_power(std::int64_t i, const ExtField& field);
std::uint64_t discrete_log(const ExtElem& v, const ExtField& field);

}  // namespace orbitcodes
