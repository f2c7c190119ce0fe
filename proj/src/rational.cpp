#include "rotnum/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "rotnum/error.hpp"

namespace rotnum {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::Parse: return "ParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::InvalidSpec: return "InvalidSpec";
        case Errc::InverseNotSupported: return "InverseNotSupported";
        case Errc::InvalidPL: return "InvalidPL";
        case Errc::ComplexityExceeded: return "ComplexityExceeded";
        case Errc::NotResolved: return "NotResolved";
        case Errc::RelatorNotSatisfied: return "RelatorNotSatisfied";
        case Errc::NotInCentralizer: return "NotInCentralizer";
        case Errc::InconsistentSplitting: return "InconsistentSplitting";
        case Errc::InvalidComparison: return "InvalidComparison";
        case Errc::LiftObstruction: return "LiftObstruction";
    }
    return "Error";
}

Rational::Rational(std::int64_t n) : q_(mpz_class(static_cast<long>(n))) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw Error(Errc::Parse, "not a rational: '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text), mpz_class(1));
    mpz_class num = parse_integer(trim(t.substr(0, slash)), text);
    std::string_view den_text = trim(t.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '-')
        throw Error(Errc::Parse, "negative denominator: '" + std::string(text) + "'");
    mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw Error(Errc::Parse, "zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::frac() const { return *this - Rational(floor(), mpz_class(1)); }

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Error(Errc::InvalidArgument, "integer out of 64-bit range: " + z.get_str());
    return static_cast<std::int64_t>(z.get_si());
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw Error(Errc::InvalidArgument, "not an integer: " + str());
    return rotnum::to_int64(q_.get_num());
}

std::int64_t Rational::numerator_int64() const { return rotnum::to_int64(q_.get_num()); }
std::int64_t Rational::denominator_int64() const { return rotnum::to_int64(q_.get_den()); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace rotnum

std::size_t std::hash<rotnum::Rational>::operator()(const rotnum::Rational& r) const noexcept {
    // Low limbs of numerator and denominator are enough to spread keys.
    auto limb = [](const mpz_class& z) -> std::size_t {
        return mpz_size(z.get_mpz_t()) ? static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) : 0;
    };
    const auto& q = r.value();
    std::size_t h = limb(q.get_num()) * 0x9e3779b97f4a7c15ULL;
    h ^= limb(q.get_den()) + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
    return sgn(q) < 0 ? ~h : h;
}
