#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace okbody {

/// Exact rational scalar. GMP-backed; always stored gcd-reduced with a
/// positive denominator (mpq canonical form).
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Builds n/d in canonical form. Throws on d == 0.
/// Goes through mpz pairs: the (int,int) mpq constructor misreads negative
/// denominators.
inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rat(n, d);
}

inline Rat make_rat(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

/// Parses "p/q" or "p" with optional leading '-'. Decimal points are
/// rejected; inputs are exact by contract.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("decimal rational literal not accepted: " + s);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

/// Formats canonically: "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline int sign(const Rat& r) { return r.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// max(r, 0), the truncated positive part.
inline Rat pos_part(const Rat& r) { return r > 0 ? r : Rat(0); }

}  // namespace okbody
