#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ratcat {

/// Exact arbitrary-precision integer; all counting is done in this type.
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a closed-form formula that must divide exactly leaves a
/// remainder. Always indicates a bug, never a bad input.
struct exact_division_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// A pair of coprime positive integers a != b. Construction validates.
class CoprimePair {
public:
    CoprimePair(long a, long b);

    long a() const { return a_; }
    long b() const { return b_; }

    /// Smaller and larger member, respectively.
    long lo() const { return a_ < b_ ? a_ : b_; }
    long hi() const { return a_ < b_ ? b_ : a_; }

    bool operator==(const CoprimePair& o) const = default;

private:
    long a_;
    long b_;
};

BigInt factorial(long n);
BigInt binomial(long n, long k);

/// q / d, throwing exact_division_error unless d divides q.
BigInt exact_div(const BigInt& q, const BigInt& d);

/// (a+b-1)! / (a! b!); symmetric in a and b.
BigInt rational_catalan(const CoprimePair& p);

/// C(hi,lo)/hi where {lo,hi} = sorted {a,b}.
BigInt derived_catalan(const CoprimePair& p);

/// Repeatedly map (a,b) |-> sorted {b-a, a} until the smaller entry is 1,
/// emitting each pair with its rational Catalan number. Requires a < b.
std::vector<std::pair<CoprimePair, BigInt>> derivation_chain(const CoprimePair& p);

/// (1/a) C(a,i) C(b-1,i-1), for 1 <= i <= a.
BigInt narayana(const CoprimePair& p, long i);

/// (1/a) C(a,i) C(b+i-1,i-1), for 1 <= i <= a.
BigInt kirkman(const CoprimePair& p, long i);

/// Vertical-run type of an (a,b)-Dyck path: r[j] counts runs of length j,
/// 0 <= j <= a, including the trivial length-0 runs (one per east step that
/// is not preceded by a north step). Sum r[j] = b, sum j*r[j] = a.
class RunTypeVector {
public:
    RunTypeVector(const CoprimePair& p, std::vector<long> r);

    const std::vector<long>& entries() const { return r_; }

private:
    std::vector<long> r_;
};

/// (b-1)! / (r_0! r_1! ... r_a!).
BigInt kreweras(const CoprimePair& p, const RunTypeVector& r);

/// All valid run-type vectors for the pair, in lexicographic order of entries.
std::vector<RunTypeVector> all_run_types(const CoprimePair& p);

/// Integer polynomial in q, coefficient index = exponent. Normalized so the
/// highest stored coefficient is nonzero (the zero polynomial stores nothing).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    static IntPolynomial monomial(const BigInt& c, long exponent);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& coeff(long exponent) const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt eval_int(const BigInt& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const = default;

    /// Exact quotient; throws exact_division_error if a remainder is left or
    /// any coefficient division is inexact.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    /// Quotient and remainder by a monic divisor (integer arithmetic stays
    /// exact when the divisor's leading coefficient is 1).
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& divisor) const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// Gaussian binomial [m choose k]_q; evaluates to C(m,k) at q = 1.
IntPolynomial q_binomial(long m, long k);

/// [m]_q = 1 + q + ... + q^(m-1).
IntPolynomial q_bracket(long m);

/// The m-th cyclotomic polynomial.
IntPolynomial cyclotomic(long m);

/// X(q) = [a+b choose a]_q / [a+b]_q; the division is exact for coprime a,b.
IntPolynomial q_rational_catalan(const CoprimePair& p);

/// Exact evaluation of f at w^d, w a primitive m-th root of unity: reduce
/// exponents mod m, then reduce modulo the cyclotomic polynomial of order
/// m/gcd(m,d). Returns the integer value, or nullopt when the value is not
/// an integer.
std::optional<BigInt> eval_at_root_of_unity(const IntPolynomial& f, long m, long d);

}  // namespace ratcat
