#pragma once

// Exact coefficient field for the whole engine: rational functions in the
// equivariant parameter h (and a few auxiliary variables) with Gaussian
// rational coefficients.  The common case -- a plain rational number -- is
// stored inline in two int64 words; anything larger (overflow, i, variables)
// promotes to a shared heavyweight representation.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvoa {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct scalar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gaussian rational a + b*i.
struct Gauss {
    BigRat re, im;
    Gauss() = default;
    Gauss(BigRat r) : re(std::move(r)) {}
    Gauss(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
    Gauss operator-(const Gauss& o) const { return {re - o.re, im - o.im}; }
    Gauss operator-() const { return {-re, -im}; }
    Gauss operator*(const Gauss& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gauss operator/(const Gauss& o) const {
        BigRat n = o.re * o.re + o.im * o.im;
        if (n.is_zero()) throw scalar_error("division by zero Gauss");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
    std::string str() const;
};

// Monomial in at most 8 variables, exponents 0..255 packed in a word.
using Mono = std::uint64_t;

inline int mono_exp(Mono m, int v) { return int((m >> (8 * v)) & 0xff); }
inline Mono mono_mul(Mono a, Mono b) { return a + b; }  // no overflow at our degrees
inline bool mono_divides(Mono a, Mono b) {
    for (int v = 0; v < 8; ++v)
        if (mono_exp(a, v) > mono_exp(b, v)) return false;
    return true;
}
inline Mono mono_div(Mono b, Mono a) { return b - a; }
Mono mono_var(int v, int e = 1);

// Sparse polynomial, terms sorted by monomial.
struct Poly {
    std::vector<std::pair<Mono, Gauss>> terms;

    static Poly constant(Gauss c);
    static Poly variable(int v);
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].first == 0); }
    Gauss constant_value() const;
    Poly operator+(const Poly&) const;
    Poly operator-(const Poly&) const;
    Poly operator-() const;
    Poly operator*(const Poly&) const;
    bool operator==(const Poly& o) const { return terms == o.terms; }
    int degree(int v) const;
    // Exact division; returns false if it does not divide.
    bool try_divide(const Poly& d, Poly& q) const;
    std::string str() const;
};

struct ScalarHeavy {
    Poly num, den;  // den never zero; normalized by Scalar::reduce
};

// The engine's scalar: element of Q(i)(h, x1..x7).  Fast path is a plain
// int64 rational (heavy == nullptr); everything exact, nothing ever rounds.
class Scalar {
  public:
    Scalar() : n_(0), d_(1) {}
    Scalar(long long n) : n_(n), d_(1) {}
    Scalar(long long n, long long d);
    static Scalar i();
    static Scalar hbar() { return variable(0); }
    static Scalar variable(int v);
    static Scalar of_rat(const BigRat& r);
    static Scalar of_gauss(const Gauss& g);
    // i^k with integer k (resolves half-integer powers of -1).
    static Scalar i_pow(long long k);

    bool is_zero() const { return !heavy_ && n_ == 0; }
    bool is_one() const { return !heavy_ && n_ == 1 && d_ == 1; }
    bool is_fast() const { return !heavy_; }
    bool is_rational() const;
    // Value as int64 rational; throws unless fast.
    long long fast_num() const { return n_; }
    long long fast_den() const { return d_; }

    Scalar operator+(const Scalar&) const;
    Scalar operator-(const Scalar&) const;
    Scalar operator*(const Scalar&) const;
    Scalar operator/(const Scalar&) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }
    bool operator==(const Scalar&) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inv() const;
    Scalar pow(long long e) const;
    // Substitute variable v by a scalar value.
    Scalar subst(int v, const Scalar& value) const;

    std::string str() const;
    std::size_t hash() const;

    const ScalarHeavy* heavy() const { return heavy_.get(); }

  private:
    long long n_, d_;
    std::shared_ptr<const ScalarHeavy> heavy_;

    static Scalar make_heavy(Poly num, Poly den);
    ScalarHeavy lift() const;  // fast -> heavy form
    friend Scalar heavy_add(const Scalar&, const Scalar&, int sign);
    friend Scalar heavy_mul(const Scalar&, const Scalar&);
    friend Scalar heavy_div(const Scalar&, const Scalar&);
};

inline Scalar operator*(long long a, const Scalar& s) { return Scalar(a) * s; }

// Names used when printing polynomials ("h" is variable 0).
const std::string& scalar_var_name(int v);
int scalar_register_var(const std::string& name);  // returns index

// Parses the grammar produced by Scalar::str(): signed products of
// rationals, "i" and named variables with ^ powers, sums in parentheses,
// and a single "/" for the denominator.
Scalar scalar_parse(const std::string& text);

}  // namespace tvoa
