#include "mmt/rational.hpp"

#include <cctype>
#include <ostream>

#include "mmt/error.hpp"

namespace mmt {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::LimitExceeded: return "LimitExceeded";
        case ErrorKind::AllCollinear: return "AllCollinear";
        case ErrorKind::DuplicatePoints: return "DuplicatePoints";
        case ErrorKind::InvalidFormula: return "InvalidFormula";
        case ErrorKind::NotPlanarWithHints: return "NotPlanarWithHints";
        case ErrorKind::DegenerateDirections: return "DegenerateDirections";
        case ErrorKind::CrossingAudit: return "CrossingAudit";
        case ErrorKind::CertificateMismatch: return "CertificateMismatch";
        case ErrorKind::NotSatisfying: return "NotSatisfying";
        case ErrorKind::MixedParity: return "MixedParity";
        case ErrorKind::DegenerateCollinearity: return "DegenerateCollinearity";
        case ErrorKind::AuditFailed: return "AuditFailed";
        case ErrorKind::SectorDegeneracy: return "SectorDegeneracy";
        case ErrorKind::UnknownArtifact: return "UnknownArtifact";
        case ErrorKind::InvalidInstance: return "InvalidInstance";
        case ErrorKind::Internal: return "Internal";
    }
    return "Error";
}

Rational::Rational(long n, long d) {
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& s) {
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!valid_int(num) || !valid_int(den))
        fail(ErrorKind::ParseError, "bad rational literal '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::str() const { return num_str() + "/" + den_str(); }

std::string Rational::num_str() const { return v_.get_num().get_str(); }

std::string Rational::den_str() const { return v_.get_den().get_str(); }

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) fail(ErrorKind::ParseError, "division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

bool Rational::is_perfect_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(v_.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(v_.get_den().get_mpz_t());
}

Rational Rational::exact_sqrt() const {
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

Rational Rational::sqrt_lower_bound(unsigned prec) const {
    // floor(sqrt(num * den * 4^prec)) / (den * 2^prec) <= sqrt(num/den), tight as prec grows.
    mpz_class scaled = v_.get_num() * v_.get_den();
    mpz_class root;
    scaled <<= 2 * prec;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    mpz_class den = v_.get_den();
    den <<= prec;
    mpq_class q(root, den);
    q.canonicalize();
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace mmt
