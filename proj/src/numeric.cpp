#include "psi/numeric.hpp"

#include "psi/errors.hpp"

namespace psi {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt double_factorial(long k) {
    if (k < -1 || k % 2 == 0)
        throw InvalidInput("double_factorial: argument must be odd and >= -1, got " +
                           std::to_string(k));
    if (k == -1) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt double_factorial_any(long k) {
    if (k < -1)
        throw InvalidInput("double_factorial_any: argument must be >= -1, got " +
                           std::to_string(k));
    if (k <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt int_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Rational rational_of(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidInput("rational_of: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw InvalidInput("rational_from_string: empty input");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw InvalidInput("rational_from_string: malformed rational '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw InvalidInput("rational_from_string: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

} // namespace psi
