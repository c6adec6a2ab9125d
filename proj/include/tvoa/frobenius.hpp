#pragma once

// Finite-dimensional super-Frobenius algebras: cup product, trace and
// pairing, convolution (adjoint of the coproduct under the signed
// pushforward pairing), Poincare duality and the cohomological
// Fourier-Mukai transform on abelian varieties.

#include "tvoa/errors.hpp"
#include "tvoa/linalg.hpp"
#include "tvoa/odd.hpp"
#include "tvoa/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tvoa {

using Element = std::vector<Scalar>;  // coefficients over the basis

struct BasisElem {
    std::string name;
    int parity = 0;
    int degree = 0;
};

struct SuperFrobenius {
    std::string name;
    std::vector<BasisElem> basis;
    std::vector<std::vector<Element>> mul;  // mul[i][j] = e_i * e_j
    std::vector<Scalar> trace;              // tau(e_i)
    // coproduct m^*(e_k) = sum c * e_p (x) e_q, needed for convolution
    bool has_coproduct = false;
    std::vector<std::vector<std::tuple<int, int, Scalar>>> coproduct;
    // convolution table, either provided directly or derived once from the
    // coproduct by adjunction
    mutable std::optional<std::vector<std::vector<Element>>> star_table;

    size_t dim() const { return basis.size(); }
    int index_of(const std::string& n) const;
    Element unit_element() const;  // cup unit, solved from the table
    Element e(size_t k) const;

    Element cup(const Element& a, const Element& b) const;
    Scalar tau(const Element& a) const;
    Scalar pair(const Element& a, const Element& b) const;  // tau(a*b)
    Matrix gram() const;

    // gamma (*) gamma': adjoint of the coproduct, <a*b, y> = <a(x)b, m^*(y)>.
    Element convolve(const Element& a, const Element& b) const;
    // solves u with  u (*) e_k = e_k for all k; nullopt if none exists
    std::optional<Element> convolution_unit() const;

    int parity_of(const Element& a) const;  // throws if inhomogeneous

    std::string show(const Element& a) const;
};

// Structural verification; each violation is one line naming the witnesses.
std::vector<std::string> frobenius_verify(const SuperFrobenius& A);

// H^*(A) for a principally polarized abelian variety of dimension g:
// exterior algebra on theta_1..theta_2g with tau = i^g * berezin.
SuperFrobenius abelian_cohomology(int g);

// The rational table used on the vertex-algebra side: basis {E, sp, sm, pt}
// with cup unit E, sp.sm = pt, tau(pt) = 1, and the free supercommutative
// convolution with unit pt, sp (*) sm = E.
SuperFrobenius elliptic_voa_algebra();

// ---------------------------------------------------------------------------
// Fourier-Mukai package on H^*(A).  Everything lives in one exterior algebra
// on 4g variables: theta block = bits [0, 2g), chi block = bits [2g, 4g).

struct FourierMukai {
    int g;
    std::vector<std::string> vars;  // t1..t2g, x1..x2g
    OddMono theta_block = 0, chi_block = 0;

    explicit FourierMukai(int g_);

    OddPoly theta_monomial(OddMono subset_of_2g) const;  // mask over [0,2g)
    // tau on the theta block: i^g * berezin
    OddPoly tau_theta(const OddPoly& f) const;
    // Phi^H(f) = tau(f * exp(c1(P))), c1(P) = sum theta_i chi_i
    OddPoly phi_h(const OddPoly& f) const;
    // Poincare duality theta -> chi with per-degree sign table derived from
    // the transform; see derive_pd_signs.
    OddPoly pd(const OddPoly& f) const;
    // odd Fourier transform theta -> chi with the pinned psi-theta kernel
    OddPoly fourier(const OddPoly& f) const;

    // derives the per-degree sign s(k) making
    //   Phi^H = PD_s o (-1)^{deg(deg+1)/2}
    // hold on one monomial per degree; throws if inconsistent within degree.
    std::vector<int> derive_pd_signs() const;
};

// JSON round trip of algebra tables (External Interfaces).
std::string frobenius_to_json(const SuperFrobenius& A);
SuperFrobenius frobenius_from_json(const std::string& text);

}  // namespace tvoa
