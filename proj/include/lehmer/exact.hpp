#ifndef LEHMER_EXACT_HPP
#define LEHMER_EXACT_HPP

// Exact integer and rational arithmetic plus the combinatorial primitives the
// closed forms are built from. BigInt and Rational are GMP's C++ classes;
// mpq_class keeps every result in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lehmer {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q", denominator omitted when it is 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline std::string to_string(const BigInt& n) { return n.get_str(10); }

/// Parses "p", "-p", "p/q" (optional leading sign on p only).
inline Rational parse_rational(std::string_view text)
{
    auto valid_digits = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                return false;
            }
        }
        return true;
    };

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!valid_digits(num) || !valid_digits(den)) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    Rational r(negative ? BigInt(-p) : p, q);
    r.canonicalize();
    return r;
}

/// num/den in lowest terms.
inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational abs(const Rational& q) { return ::abs(q); }

/// q^e for integer e (negative exponents invert; 0^e with e < 0 throws).
inline Rational pow(const Rational& q, long e)
{
    if (e < 0) {
        if (q == 0) {
            throw std::domain_error("pow: zero to a negative power");
        }
        return pow(Rational(1) / q, -e);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(num, den);
}

inline BigInt pow(const BigInt& b, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline BigInt factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// C(n, k); zero when k lies outside [0, n].
inline BigInt binomial(long n, long k)
{
    if (n < 0) {
        throw std::domain_error("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Binomial coefficient with a rational upper argument: a(a-1)...(a-k+1)/k!.
inline Rational binomial(const Rational& a, long k)
{
    if (k < 0) {
        return 0;
    }
    Rational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (a - i);
        r /= (i + 1);
    }
    return r;
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1).
inline Rational pochhammer(const Rational& a, long n)
{
    if (n < 0) {
        throw std::domain_error("pochhammer: negative length");
    }
    Rational r = 1;
    for (long i = 0; i < n; ++i) {
        r *= (a + i);
    }
    return r;
}

/// n!! for odd n >= -3, with (-1)!! = 1 and (-3)!! = -1.
inline BigInt double_factorial(long n)
{
    if (n % 2 == 0 || n < -3) {
        throw std::domain_error("double_factorial: n must be odd and >= -3, got " + std::to_string(n));
    }
    if (n == -3) {
        return -1;
    }
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), n < 0 ? 0UL : static_cast<unsigned long>(n));
    return r;
}

/// Stirling number of the second kind from the explicit alternating sum
///   S2(p, n) = (1/n!) * sum_{m=1}^{n} (-1)^{n-m} C(n, m) m^p.
/// The closed forms use E(k, n) = stirling2(k + 1, n).
inline BigInt stirling2(long p, long n)
{
    if (p < 1 || n < 1) {
        throw std::domain_error("stirling2: p and n must be positive");
    }
    if (n > p) {
        return 0;
    }
    BigInt sum = 0;
    for (long m = 1; m <= n; ++m) {
        BigInt term = binomial(n, m) * pow(BigInt(m), static_cast<unsigned long>(p));
        if ((n - m) % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    BigInt result;
    mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), factorial(n).get_mpz_t());
    return result;
}

/// Row E(k, 1..k+1) of the Stirling triangle used throughout the closed forms;
/// index 0 is unused and holds zero.
inline std::vector<BigInt> stirling_row(long k)
{
    std::vector<BigInt> row(static_cast<std::size_t>(k + 2));
    for (long n = 1; n <= k + 1; ++n) {
        row[static_cast<std::size_t>(n)] = stirling2(k + 1, n);
    }
    return row;
}

/// Exact sum_{m>=1} m^p X^m for |X| < 1 through Euler's finite double sum
///   sum_{n=1}^{p} sum_{m=1}^{n} (-1)^{m+n} C(n,m) m^p X^n (1-X)^{-n-1}.
inline Rational euler_power_sum(long p, const Rational& x)
{
    if (p < 1) {
        throw std::domain_error("euler_power_sum: p must be positive");
    }
    if (abs(x) >= 1) {
        throw std::domain_error("euler_power_sum: requires |X| < 1, got " + to_string(x));
    }
    const Rational one_minus = 1 - x;
    Rational total = 0;
    for (long n = 1; n <= p; ++n) {
        BigInt inner = 0;
        for (long m = 1; m <= n; ++m) {
            BigInt term = binomial(n, m) * pow(BigInt(m), static_cast<unsigned long>(p));
            if ((m + n) % 2 == 0) {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rational(inner) * pow(x, n) * pow(one_minus, -n - 1);
    }
    return total;
}

} // namespace lehmer

#endif
