#pragma once

// Exterior (odd polynomial) algebra on up to 32 anticommuting variables,
// with Berezin integration and the odd Fourier transform.  Monomials are
// bitmasks read in ascending variable order; every reordering goes through
// an explicit Koszul sign.

#include "tvoa/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tvoa {

using OddMono = std::uint32_t;

// Sign for writing theta_a * theta_b with a, b disjoint ascending masks:
// (-1)^{# pairs (i in a, j in b) with i > j}.
int koszul_sign(OddMono a, OddMono b);

struct OddPoly {
    // variable names; index in this vector = bit position
    std::vector<std::string> vars;
    std::map<OddMono, Scalar> terms;

    OddPoly() = default;
    explicit OddPoly(std::vector<std::string> names) : vars(std::move(names)) {}

    static OddPoly zero(std::vector<std::string> names) { return OddPoly(std::move(names)); }
    static OddPoly constant(std::vector<std::string> names, const Scalar& c);
    static OddPoly monomial(std::vector<std::string> names, OddMono m, const Scalar& c = Scalar(1));

    bool is_zero() const { return terms.empty(); }
    void add_term(OddMono m, const Scalar& c);
    Scalar coeff(OddMono m) const;
    // parity of every monomial if homogeneous; throws otherwise
    int parity() const;
    bool is_homogeneous() const;

    OddPoly operator+(const OddPoly&) const;
    OddPoly operator-(const OddPoly&) const;
    OddPoly operator*(const OddPoly&) const;
    OddPoly operator*(const Scalar&) const;
    OddPoly operator-() const;
    bool operator==(const OddPoly&) const;

    // left partial derivative d/d theta_v
    OddPoly derivative(int v) const;
    // scale a set of variables by s (e.g. chi -> -chi)
    OddPoly scale_vars(OddMono mask, const Scalar& s) const;
    // exponential of an even element with no constant term (nilpotent)
    OddPoly exp() const;

    std::string str() const;
};

// Berezin integral over the variables in `block`, normalized so that the
// ascending product of the block integrates to 1; remaining variables pass
// through with the Koszul sign of the factorization theta_m = theta_rest *
// theta_block.
OddPoly berezin(const OddPoly& f, OddMono block);
// Full integral when the polynomial uses all its variables as the block.
Scalar berezin_top(const OddPoly& f);

// Odd Fourier transform from the `theta` block to the `psi` block (both
// masks of equal popcount, paired in ascending order):
//   fhat = int dtheta  e^{i sum psi_k theta_k} f
// with the exponent ordered psi-first and expanded left to right.
OddPoly fourier_odd(const OddPoly& f, OddMono theta_block, OddMono psi_block);

}  // namespace tvoa
