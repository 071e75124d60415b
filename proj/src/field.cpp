#include "dihomol/field.hpp"

#include <charconv>
#include <optional>
#include <ostream>

namespace dihomol {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32U)) {
        throw std::invalid_argument("prime field modulus must be below 2^32");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("F_p requires a prime p, got " + std::to_string(p));
    }
    return Field(p);
}

Field Field::parse(std::string_view token) {
    if (token == "Q" || token == "q" || token == "QQ") return rationals();
    std::string_view digits = token;
    if (!digits.empty() && (digits.front() == 'F' || digits.front() == 'f')) digits.remove_prefix(1);
    if (!digits.empty() && (digits.front() == 'p' || digits.front() == '=' || digits.front() == '_')) {
        digits.remove_prefix(1);
        if (!digits.empty() && digits.front() == '=') digits.remove_prefix(1);
    }
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("unrecognised field '" + std::string(token) + "' (expected Q or F<p>)");
    }
    return prime(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

namespace {

using Small = Scalar::Small;
using i128 = __int128;

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(i128 v) { return v <= kSmallLimit && v >= -kSmallLimit; }

/// num/den in lowest terms if both parts fit the inline range.
std::optional<Small> make_small(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    if (!fits(num) || !fits(den)) return std::nullopt;
    return Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

mpq_class to_mpq(const Small& s) {
    mpq_class q;
    mpz_set_si(mpq_numref(q.get_mpq_t()), s.num);
    mpz_set_si(mpq_denref(q.get_mpq_t()), s.den);
    return q;
}

std::uint64_t residue_of(long value, std::uint64_t p) {
    const i128 r = static_cast<i128>(value) % static_cast<i128>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<i128>(p) : r);
}

}  // namespace

Scalar::Scalar(const Field& field, long value) : field_(field) {
    if (field.is_rational()) {
        if (fits(value)) {
            value_ = Small{value, 1};
        } else {
            set_rational(mpq_class(value));
        }
    } else {
        value_ = residue_of(value, field.characteristic());
    }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
        mpq_class v = value;
        v.canonicalize();
        set_rational(std::move(v));
        return;
    }
    const std::uint64_t p = field.characteristic();
    const std::uint64_t den = reduce_mod(value.get_den(), p);
    if (den == 0) throw std::domain_error("denominator vanishes in " + field.name());
    const std::uint64_t num = reduce_mod(value.get_num(), p);
    value_ = num * pow_mod(den, p - 2, p) % p;
}

void Scalar::set_rational(mpq_class q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && fits(n.get_si()) && fits(d.get_si())) {
        value_ = Small{n.get_si(), d.get_si()};
    } else {
        value_ = std::move(q);
    }
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return Scalar(field, q);
}

bool Scalar::is_zero() const {
    if (const auto* s = std::get_if<Small>(&value_)) return s->num == 0;
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return false;  // big rationals are never zero
}

bool Scalar::is_one() const {
    if (const auto* s = std::get_if<Small>(&value_)) return s->num == 1 && s->den == 1;
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1 % field_.characteristic();
    return false;
}

mpq_class Scalar::rational() const {
    if (const auto* s = std::get_if<Small>(&value_)) return to_mpq(*s);
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldMismatch("rational() on a prime-field scalar");
}

std::uint64_t Scalar::residue() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw FieldMismatch("residue() on a rational scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
    if (!(field_ == other.field_)) {
        throw FieldMismatch("arithmetic between " + field_.name() + " and " + other.field_.name());
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar r = *this;
    if (const auto* s = std::get_if<Small>(&value_)) {
        r.value_ = s->num < 0 ? Small{-s->den, -s->num} : Small{s->den, s->num};
    } else if (const auto* q = std::get_if<mpq_class>(&value_)) {
        r.set_rational(1 / *q);
    } else {
        const std::uint64_t p = field_.characteristic();
        r.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        *r = (*r + std::get<std::uint64_t>(rhs.value_)) % field_.characteristic();
        return *this;
    }
    const auto* a = std::get_if<Small>(&value_);
    const auto* b = std::get_if<Small>(&rhs.value_);
    if (a && b) {
        if (a->den == 1 && b->den == 1) {
            const i128 sum = static_cast<i128>(a->num) + b->num;
            if (fits(sum)) {
                value_ = Small{static_cast<std::int64_t>(sum), 1};
                return *this;
            }
        }
        const i128 num = static_cast<i128>(a->num) * b->den + static_cast<i128>(b->num) * a->den;
        const i128 den = static_cast<i128>(a->den) * b->den;
        if (auto s = make_small(num, den)) {
            value_ = *s;
            return *this;
        }
    }
    set_rational(rational() + rhs.rational());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        *r = *r * std::get<std::uint64_t>(rhs.value_) % field_.characteristic();
        return *this;
    }
    const auto* a = std::get_if<Small>(&value_);
    const auto* b = std::get_if<Small>(&rhs.value_);
    if (a && b) {
        if (auto s = make_small(static_cast<i128>(a->num) * b->num, static_cast<i128>(a->den) * b->den)) {
            value_ = *s;
            return *this;
        }
    }
    set_rational(rational() * rhs.rational());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (auto* s = std::get_if<Small>(&r.value_)) {
        s->num = -s->num;
    } else if (auto* q = std::get_if<mpq_class>(&r.value_)) {
        *q = -*q;
    } else {
        auto& v = std::get<std::uint64_t>(r.value_);
        v = (field_.characteristic() - v) % field_.characteristic();
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
    if (const auto* s = std::get_if<Small>(&value_)) {
        return s->den == 1 ? std::to_string(s->num) : std::to_string(s->num) + "/" + std::to_string(s->den);
    }
    if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dihomol
