#include "orbitcodes/gf.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <mutex>
#include <sstream>

#include "orbitcodes/error.hpp"

namespace orbitcodes {

bool is_prime(std::uint64_t value) {
    if (value < 2) return false;
    if (value % 2 == 0) return value == 2;
    for (std::uint64_t d = 3; d <= value / d; d += 2) {
        if (value % d == 0) return false;
    }
    return true;
}

std::uint64_t checked_power(std::uint64_t q, unsigned n) {
    constexpr std::uint64_t limit = std::uint64_t{1} << 63;
    std::uint64_t result = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (result > limit / q) {
            throw InvalidArgument("q^n = " + std::to_string(q) + "^" + std::to_string(n) +
                                  " exceeds the supported range");
        }
        result *= q;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d <= value / d; d += (d == 2 ? 1 : 2)) {
        if (value % d == 0) {
            factors.push_back(d);
            while (value % d == 0) value /= d;
        }
    }
    if (value > 1) factors.push_back(value);
    return factors;
}

std::vector<std::uint64_t> divisors(std::uint64_t value) {
    if (value == 0) throw InvalidArgument("divisors of zero are undefined");
    std::vector<std::uint64_t> result{1};
    std::uint64_t rest = value;
    for (std::uint64_t p : prime_factors(value)) {
        unsigned multiplicity = 0;
        while (rest % p == 0) {
            rest /= p;
            ++multiplicity;
        }
        const std::size_t current = result.size();
        std::uint64_t power = 1;
        for (unsigned e = 1; e <= multiplicity; ++e) {
            power *= p;
            for (std::size_t i = 0; i < current; ++i) result.push_back(result[i] * power);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(fq_t q) : q_(q) {
    if (!is_prime(q)) throw InvalidArgument("field size q = " + std::to_string(q) + " is not prime");
}

fq_t PrimeField::pow(fq_t a, std::uint64_t e) const noexcept {
    fq_t result = 1 % q_;
    fq_t base = a % q_;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

fq_t PrimeField::inv(fq_t a) const {
    if (a % q_ == 0) throw PreconditionError("zero has no multiplicative inverse");
    return pow(a, q_ - 2);
}

// ---------------------------------------------------------------------------
// PolyFq

PolyFq::PolyFq(fq_t q, std::vector<fq_t> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
    if (!is_prime(q)) throw InvalidArgument("field size q = " + std::to_string(q) + " is not prime");
    for (fq_t c : coeffs_) {
        if (c >= q) throw InvalidArgument("coefficient " + std::to_string(c) + " out of range for q = " + std::to_string(q));
    }
    trim();
}

PolyFq PolyFq::monomial(fq_t q, unsigned degree, fq_t c) {
    std::vector<fq_t> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return PolyFq(q, std::move(coeffs));
}

void PolyFq::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

fq_t PolyFq::evaluate(fq_t point) const {
    const PrimeField f(q_);
    fq_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, point), *it);
    return acc;
}

PolyFq PolyFq::monic() const {
    if (is_zero()) throw PreconditionError("the zero polynomial has no monic associate");
    const PrimeField f(q_);
    const fq_t s = f.inv(leading());
    std::vector<fq_t> c(coeffs_);
    for (auto& v : c) v = f.mul(v, s);
    return PolyFq(q_, std::move(c));
}

std::string PolyFq::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const fq_t c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (c != 1 || i == 0) out += std::to_string(c);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

std::string PolyFq::to_coefficient_list() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

namespace {

std::uint64_t parse_unsigned(std::string_view s, std::string_view context) {
    if (s.empty()) throw InvalidArgument("malformed polynomial '" + std::string(context) + "'");
    std::uint64_t value = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw InvalidArgument("malformed polynomial '" + std::string(context) + "'");
        if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
            throw InvalidArgument("number too large in polynomial '" + std::string(context) + "'");
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return value;
}

constexpr unsigned kMaxParsedDegree = 4096;

}  // namespace

PolyFq PolyFq::parse(std::string_view text, fq_t q) {
    const PrimeField f(q);
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    if (s.empty()) throw InvalidArgument("empty polynomial");

    if (s.find('x') == std::string::npos && s.find(',') != std::string::npos) {
        std::vector<fq_t> coeffs;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const std::uint64_t v = parse_unsigned(item, text);
            coeffs.push_back(static_cast<fq_t>(v % q));
        }
        if (coeffs.size() > kMaxParsedDegree + 1) throw InvalidArgument("polynomial degree too large");
        return PolyFq(q, std::move(coeffs));
    }

    std::vector<fq_t> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw InvalidArgument("malformed polynomial '" + std::string(text) + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string_view term(s.data() + pos, end - pos);
        if (term.empty()) throw InvalidArgument("malformed polynomial '" + std::string(text) + "'");

        fq_t coefficient = 1;
        unsigned exponent = 0;
        const auto xpos = term.find('x');
        if (xpos == std::string_view::npos) {
            coefficient = static_cast<fq_t>(parse_unsigned(term, text) % q);
        } else {
            std::string_view head = term.substr(0, xpos);
            if (!head.empty() && head.back() == '*') head.remove_suffix(1);
            if (!head.empty()) coefficient = static_cast<fq_t>(parse_unsigned(head, text) % q);
            std::string_view tail = term.substr(xpos + 1);
            if (tail.empty()) {
                exponent = 1;
            } else if (tail.front() == '^') {
                const std::uint64_t e = parse_unsigned(tail.substr(1), text);
                if (e > kMaxParsedDegree) throw InvalidArgument("polynomial degree too large");
                exponent = static_cast<unsigned>(e);
            } else {
                throw InvalidArgument("malformed polynomial '" + std::string(text) + "'");
            }
        }
        if (negative) coefficient = f.neg(coefficient);
        if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
        coeffs[exponent] = f.add(coeffs[exponent], coefficient);
        pos = end;
    }
    return PolyFq(q, std::move(coeffs));
}

namespace {

void require_same_field(const PolyFq& a, const PolyFq& b) {
    if (a.q() != b.q()) throw InvalidArgument("polynomials over different fields");
}

}  // namespace

PolyFq operator+(const PolyFq& a, const PolyFq& b) {
    require_same_field(a, b);
    const PrimeField f(a.q());
    std::vector<fq_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a[i], b[i]);
    return PolyFq(a.q(), std::move(c));
}

PolyFq operator-(const PolyFq& a, const PolyFq& b) {
    require_same_field(a, b);
    const PrimeField f(a.q());
    std::vector<fq_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a[i], b[i]);
    return PolyFq(a.q(), std::move(c));
}

PolyFq operator*(const PolyFq& a, const PolyFq& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return PolyFq::zero(a.q());
    const PrimeField f(a.q());
    std::vector<fq_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    return PolyFq(a.q(), std::move(c));
}

std::pair<PolyFq, PolyFq> divmod(const PolyFq& a, const PolyFq& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    const PrimeField f(a.q());
    std::vector<fq_t> rem(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {PolyFq::zero(a.q()), a};
    std::vector<fq_t> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const fq_t lead_inv = f.inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
        const fq_t c = f.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - db + j)];
            r = f.sub(r, f.mul(c, b[static_cast<std::size_t>(j)]));
        }
    }
    return {PolyFq(a.q(), std::move(quot)), PolyFq(a.q(), std::move(rem))};
}

PolyFq operator%(const PolyFq& a, const PolyFq& b) { return divmod(a, b).second; }

PolyFq gcd(PolyFq a, PolyFq b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        PolyFq r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

PolyFq powmod(const PolyFq& base, std::uint64_t exponent, const PolyFq& modulus) {
    PolyFq result = PolyFq::constant(base.q(), 1) % modulus;
    PolyFq b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1) result = (result * b) % modulus;
        exponent >>= 1;
        if (exponent) b = (b * b) % modulus;
    }
    return result;
}

bool is_irreducible(const PolyFq& p) {
    if (p.degree() < 1) throw InvalidArgument("irreducibility is only defined for non-constant polynomials");
    const PolyFq m = p.monic();
    const unsigned n = static_cast<unsigned>(m.degree());
    if (n == 1) return true;
    const fq_t q = m.q();
    const PolyFq x = PolyFq::monomial(q, 1);
    const PolyFq one = PolyFq::constant(q, 1);

    PolyFq frob = x % m;  // x^{q^i} mod m
    for (unsigned i = 1; i <= n / 2; ++i) {
        frob = powmod(frob, q, m);
        if (gcd(frob - x, m) != one) return false;
    }
    for (unsigned i = n / 2 + 1; i <= n; ++i) frob = powmod(frob, q, m);
    return frob == x % m;
}

std::uint64_t poly_order(const PolyFq& p) {
    if (p.degree() < 1) throw InvalidArgument("order is only defined for non-constant polynomials");
    if (p[0] == 0) throw PreconditionError("order requires p(0) != 0; got " + p.to_string());
    if (!is_irreducible(p)) throw PreconditionError("order requires an irreducible polynomial; got " + p.to_string());
    const std::uint64_t group = checked_power(p.q(), static_cast<unsigned>(p.degree())) - 1;
    const PolyFq x = PolyFq::monomial(p.q(), 1);
    const PolyFq one = PolyFq::constant(p.q(), 1);
    for (std::uint64_t d : divisors(group)) {
        if (powmod(x, d, p) == one) return d;
    }
    // Unreachable for irreducible p: x^{q^n-1} = 1 in F_q[x]/(p).
    throw PreconditionError("order of " + p.to_string() + " does not divide q^n - 1");
}

bool is_primitive(const PolyFq& p) {
    const std::uint64_t order = poly_order(p);
    return order == checked_power(p.q(), static_cast<unsigned>(p.degree())) - 1;
}

// ---------------------------------------------------------------------------
// ExtElem / ExtField

bool ExtElem::is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](fq_t c) { return c == 0; });
}

namespace {

char digit_char(fq_t v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

}  // namespace

std::string ExtElem::to_string() const {
    std::string out;
    out.reserve(coords.size());
    for (fq_t c : coords) out += digit_char(c);
    return out;
}

std::uint64_t encode_coords(const std::vector<fq_t>& coords, fq_t q) {
    std::uint64_t code = 0;
    for (auto it = coords.rbegin(); it != coords.rend(); ++it) code = code * q + *it;
    return code;
}

std::vector<fq_t> decode_coords(std::uint64_t code, fq_t q, unsigned n) {
    std::vector<fq_t> coords(n);
    for (unsigned i = 0; i < n; ++i) {
        coords[i] = static_cast<fq_t>(code % q);
        code /= q;
    }
    return coords;
}

struct ExtField::LogCache {
    std::once_flag once;
    std::vector<std::uint64_t> table;
};

ExtField::ExtField(const PolyFq& modulus, std::uint64_t log_table_cap)
    : base_(modulus.q()),
      modulus_(modulus.is_zero() ? modulus : modulus.monic()),
      n_(0),
      size_(0),
      order_(0),
      primitive_(false),
      log_cap_(log_table_cap),
      cache_(std::make_shared<LogCache>()) {
    if (modulus_.degree() < 1) throw InvalidArgument("field modulus must have degree >= 1");
    n_ = static_cast<unsigned>(modulus_.degree());
    size_ = checked_power(q(), n_);
    order_ = poly_order(modulus_);  // validates irreducibility and p(0) != 0
    primitive_ = order_ == size_ - 1;
}

void ExtField::check_member(const ExtElem& a) const {
    if (a.q != q() || a.n != n_ || a.coords.size() != n_)
        throw InvalidArgument("element does not belong to F_" + std::to_string(q()) + "^" + std::to_string(n_));
    for (fq_t c : a.coords) {
        if (c >= q()) throw InvalidArgument("element coordinate out of range");
    }
}

ExtElem ExtField::zero() const { return ExtElem{q(), n_, std::vector<fq_t>(n_, 0)}; }

ExtElem ExtField::one() const {
    ExtElem e = zero();
    e.coords[0] = 1;
    return e;
}

ExtElem ExtField::alpha() const {
    if (n_ == 1) {
        // alpha is the root of x + c, i.e. -c.
        return ExtElem{q(), 1, {base_.neg(modulus_[0])}};
    }
    ExtElem e = zero();
    e.coords[1] = 1;
    return e;
}

ExtElem ExtField::element(std::vector<fq_t> coords) const {
    ExtElem e{q(), n_, std::move(coords)};
    check_member(e);
    return e;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
    check_member(a);
    check_member(b);
    ExtElem r = zero();
    for (unsigned i = 0; i < n_; ++i) r.coords[i] = base_.add(a.coords[i], b.coords[i]);
    return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
    check_member(a);
    check_member(b);
    ExtElem r = zero();
    for (unsigned i = 0; i < n_; ++i) r.coords[i] = base_.sub(a.coords[i], b.coords[i]);
    return r;
}

ExtElem ExtField::scale(fq_t c, const ExtElem& a) const {
    check_member(a);
    ExtElem r = zero();
    for (unsigned i = 0; i < n_; ++i) r.coords[i] = base_.mul(c % q(), a.coords[i]);
    return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
    check_member(a);
    check_member(b);
    // Schoolbook product, then reduce with the monic modulus from the top down.
    std::vector<fq_t> prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (a.coords[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a.coords[i], b.coords[j]));
    }
    for (unsigned top = 2 * n_ - 2; top >= n_; --top) {
        const fq_t c = prod[top];
        if (c == 0) continue;
        prod[top] = 0;
        for (unsigned j = 0; j < n_; ++j) {
            prod[top - n_ + j] = base_.sub(prod[top - n_ + j], base_.mul(c, modulus_[j]));
        }
    }
    prod.resize(n_);
    return ExtElem{q(), n_, std::move(prod)};
}

ExtElem ExtField::mul_alpha(const ExtElem& a) const {
    check_member(a);
    if (n_ == 1) return mul(a, alpha());
    ExtElem r = zero();
    const fq_t carry = a.coords[n_ - 1];
    for (unsigned i = n_ - 1; i >= 1; --i) r.coords[i] = a.coords[i - 1];
    for (unsigned j = 0; j < n_; ++j) r.coords[j] = base_.sub(r.coords[j], base_.mul(carry, modulus_[j]));
    return r;
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t e) const {
    ExtElem result = one();
    ExtElem b = a;
    while (e > 0) {
        if (e & 1) result = mul(result, b);
        e >>= 1;
        if (e) b = mul(b, b);
    }
    return result;
}

ExtElem ExtField::alpha_power(std::int64_t i) const {
    const auto ord = static_cast<std::int64_t>(order_);
    std::int64_t r = i % ord;
    if (r < 0) r += ord;
    return pow(alpha(), static_cast<std::uint64_t>(r));
}

const std::vector<std::uint64_t>& ExtField::log_table() const {
    std::call_once(cache_->once, [this] {
        std::vector<std::uint64_t> table(size_, 0);
        ExtElem cur = one();
        for (std::uint64_t e = 0; e + 1 < size_; ++e) {
            table[encode_coords(cur.coords, q())] = e;
            cur = mul_alpha(cur);
        }
        cache_->table = std::move(table);
    });
    return cache_->table;
}

std::uint64_t ExtField::discrete_log(const ExtElem& v) const {
    check_member(v);
    if (v.is_zero()) throw InvalidArgument("discrete log of zero is undefined");
    if (!primitive_) throw PreconditionError("discrete log requires a primitive modulus; " + modulus_.to_string() + " is not");
    if (size_ > log_cap_)
        throw LogTableCapExceeded("q^n = " + std::to_string(size_) + " exceeds the log-table cap " + std::to_string(log_cap_));
    return log_table()[encode_coords(v.coords, q())];
}

ExtElem ext_mul(const ExtElem& a, const ExtElem& b, const ExtField& field) { return field.mul(a, b); }
ExtElem alpha_power(std::int64_t i, const ExtField& field) { return field.alpha_power(i); }
std::uint64_t discrete_log(const ExtElem& v, const ExtField& field) { return field.discrete_log(v); }

}  // namespace orbitcodes
