#include "ratcat/numbers.hpp"

#include <algorithm>
#include <numeric>

namespace ratcat {

CoprimePair::CoprimePair(long a, long b) : a_(a), b_(b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("CoprimePair: entries must be positive");
    if (a == b)
        throw std::invalid_argument("CoprimePair: entries must differ");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("CoprimePair: gcd(a,b) must be 1");
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // divides exactly: product of j consecutive integers
    }
    return r;
}

BigInt exact_div(const BigInt& q, const BigInt& d) {
    if (d == 0) throw exact_division_error("exact_div: zero divisor");
    BigInt quot = q / d;
    if (quot * d != q) throw exact_division_error("exact_div: remainder left");
    return quot;
}

BigInt rational_catalan(const CoprimePair& p) {
    return exact_div(factorial(p.a() + p.b() - 1), factorial(p.a()) * factorial(p.b()));
}

BigInt derived_catalan(const CoprimePair& p) {
    return exact_div(binomial(p.hi(), p.lo()), BigInt(p.hi()));
}

std::vector<std::pair<CoprimePair, BigInt>> derivation_chain(const CoprimePair& p) {
    if (p.a() >= p.b())
        throw std::invalid_argument("derivation_chain: requires a < b");
    std::vector<std::pair<CoprimePair, BigInt>> chain;
    CoprimePair cur = p;
    chain.emplace_back(cur, rational_catalan(cur));
    while (cur.lo() > 1) {
        long x = cur.hi() - cur.lo();
        long y = cur.lo();
        cur = CoprimePair(std::min(x, y), std::max(x, y));
        chain.emplace_back(cur, rational_catalan(cur));
    }
    return chain;
}

BigInt narayana(const CoprimePair& p, long i) {
    if (i < 1 || i > p.a())
        throw std::invalid_argument("narayana: index out of range");
    return exact_div(binomial(p.a(), i) * binomial(p.b() - 1, i - 1), BigInt(p.a()));
}

BigInt kirkman(const CoprimePair& p, long i) {
    if (i < 1 || i > p.a())
        throw std::invalid_argument("kirkman: index out of range");
    return exact_div(binomial(p.a(), i) * binomial(p.b() + i - 1, i - 1), BigInt(p.a()));
}

RunTypeVector::RunTypeVector(const CoprimePair& p, std::vector<long> r) : r_(std::move(r)) {
    if (static_cast<long>(r_.size()) != p.a() + 1)
        throw std::invalid_argument("RunTypeVector: needs a+1 entries");
    long total = 0, weighted = 0;
    for (long j = 0; j <= p.a(); ++j) {
        if (r_[j] < 0) throw std::invalid_argument("RunTypeVector: negative entry");
        total += r_[j];
        weighted += j * r_[j];
    }
    if (total != p.b() || weighted != p.a())
        throw std::invalid_argument("RunTypeVector: entry sums are wrong");
}

BigInt kreweras(const CoprimePair& p, const RunTypeVector& r) {
    BigInt denom = 1;
    for (long rj : r.entries()) denom *= factorial(rj);
    return exact_div(factorial(p.b() - 1), denom);
}

namespace {

void run_types_rec(const CoprimePair& p, long j, long slots_left, long weight_left,
                   std::vector<long>& cur, std::vector<RunTypeVector>& out) {
    long a = p.a();
    if (j == a) {
        // only r_a is left, so both constraints must close at once
        if (weight_left % a == 0 && weight_left / a == slots_left) {
            cur[a] = slots_left;
            out.emplace_back(p, cur);
            cur[a] = 0;
        }
        return;
    }
    long max_rj = j == 0 ? slots_left : std::min(slots_left, weight_left / j);
    for (long rj = 0; rj <= max_rj; ++rj) {
        cur[j] = rj;
        run_types_rec(p, j + 1, slots_left - rj, weight_left - j * rj, cur, out);
    }
    cur[j] = 0;
}

}  // namespace

std::vector<RunTypeVector> all_run_types(const CoprimePair& p) {
    std::vector<RunTypeVector> out;
    std::vector<long> cur(p.a() + 1, 0);
    run_types_rec(p, 0, p.b(), p.a(), cur, out);
    return out;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, long exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<BigInt> v(exponent + 1, 0);
    v[exponent] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(long exponent) const {
    static const BigInt zero = 0;
    if (exponent < 0 || exponent >= static_cast<long>(coeffs_.size())) return zero;
    return coeffs_[exponent];
}

BigInt IntPolynomial::eval_int(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw exact_division_error("polynomial division by zero");
    std::vector<BigInt> rem = coeffs_;
    long dd = divisor.degree();
    const BigInt& lead = divisor.coeffs_.back();
    long qdeg = degree() - dd;
    if (qdeg < 0) {
        if (!is_zero()) throw exact_division_error("polynomial division leaves remainder");
        return {};
    }
    std::vector<BigInt> quot(qdeg + 1, 0);
    for (long k = qdeg; k >= 0; --k) {
        BigInt c = exact_div(rem[k + dd], lead);
        quot[k] = c;
        if (c != 0)
            for (long j = 0; j <= dd; ++j) rem[k + j] -= c * divisor.coeffs_[j];
    }
    for (const BigInt& c : rem)
        if (c != 0) throw exact_division_error("polynomial division leaves remainder");
    return IntPolynomial(std::move(quot));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(
    const IntPolynomial& divisor) const {
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<BigInt> rem = coeffs_;
    long dd = divisor.degree();
    long qdeg = degree() - dd;
    if (qdeg < 0) return {IntPolynomial{}, *this};
    std::vector<BigInt> quot(qdeg + 1, 0);
    for (long k = qdeg; k >= 0; --k) {
        BigInt c = rem[k + dd];
        quot[k] = c;
        if (c != 0)
            for (long j = 0; j <= dd; ++j) rem[k + j] -= c * divisor.coeffs_[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial q_bracket(long m) {
    if (m < 0) throw std::invalid_argument("q_bracket: negative argument");
    return IntPolynomial(std::vector<BigInt>(m, 1));
}

IntPolynomial q_binomial(long m, long k) {
    if (k < 0 || k > m) throw std::invalid_argument("q_binomial: k out of range");
    // Pascal recursion [m,k] = [m-1,k-1] + q^k [m-1,k], one row at a time.
    std::vector<IntPolynomial> row(m + 1);
    row[0] = IntPolynomial({BigInt(1)});
    for (long n = 1; n <= m; ++n) {
        for (long j = std::min(n, k); j >= 1; --j) {
            IntPolynomial shifted = j < n ? IntPolynomial::monomial(1, j) * row[j] : IntPolynomial{};
            row[j] = row[j - 1] + shifted;
        }
    }
    return row[k];
}

IntPolynomial cyclotomic(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic: order must be positive");
    // x^m - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::vector<BigInt> xm(m + 1, 0);
    xm[0] = -1;
    xm[m] = 1;
    IntPolynomial num{std::move(xm)};
    for (long d = 1; d < m; ++d)
        if (m % d == 0) num = num.divide_exact(cyclotomic(d));
    return num;
}

IntPolynomial q_rational_catalan(const CoprimePair& p) {
    return q_binomial(p.a() + p.b(), p.a()).divide_exact(q_bracket(p.a() + p.b()));
}

std::optional<BigInt> eval_at_root_of_unity(const IntPolynomial& f, long m, long d) {
    if (m < 1 || d < 0 || d >= m)
        throw std::invalid_argument("eval_at_root_of_unity: need m >= 1, 0 <= d < m");
    std::vector<BigInt> folded(m, 0);
    for (long e = 0; e <= f.degree(); ++e) folded[e % m] += f.coeff(e);
    IntPolynomial g{std::move(folded)};
    long k = d == 0 ? 1 : m / std::gcd(m, d);
    IntPolynomial rem = g.divmod_monic(cyclotomic(k)).second;
    if (rem.degree() > 0) return std::nullopt;
    return rem.is_zero() ? BigInt(0) : rem.coeff(0);
}

}  // namespace ratcat
