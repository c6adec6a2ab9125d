#pragma once

// Structure-constant realizations of the Lie superalgebras in play:
// the main algebra on H*(E)-labelled double loops, its kappa-variant,
// the toroidal extended affine algebra, Hamiltonian vector fields on the
// (2|2)-torus with their central extension, and po(0|m).

#include "tvoa/errors.hpp"
#include "tvoa/frobenius.hpp"
#include "tvoa/odd.hpp"
#include "tvoa/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace tvoa {

enum class Gen : int {
    W,     // w^{a,b}_gamma
    Wc,    // variant wbar^{a,b}_gamma
    K,     // toroidal k_{a,b}
    D,     // toroidal d_{a,b}
    X,     // g-part x_{a,b} (gamma = index in the finite algebra)
    Cs, Ct, Ks, Kt,  // central elements
    Ham,   // s^a t^b psi_mask, gamma = mask over {psi+, psi-}
};

struct LieKey {
    Gen tag;
    int a = 0, b = 0;
    int gamma = 0;
    bool operator<(const LieKey& o) const {
        if (tag != o.tag) return tag < o.tag;
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return gamma < o.gamma;
    }
    bool operator==(const LieKey& o) const {
        return tag == o.tag && a == o.a && b == o.b && gamma == o.gamma;
    }
    std::string str() const;
};

struct LieElement {
    std::map<LieKey, Scalar> terms;
    void add(const LieKey& k, const Scalar& c);
    LieElement operator+(const LieElement&) const;
    LieElement operator-(const LieElement&) const;
    LieElement operator*(const Scalar&) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const LieElement& o) const;
    std::string str() const;
    static LieElement single(const LieKey& k, const Scalar& c = Scalar(1));
};

struct LieAlgebra {
    std::string name;
    std::function<int(const LieKey&)> parity;
    std::function<LieElement(const LieKey&, const LieKey&)> bracket_keys;
    // basis keys with |a|,|b| <= bound (centrals included once)
    std::function<std::vector<LieKey>(int bound)> keys_in_box;

    LieElement bracket(const LieElement& x, const LieElement& y) const;
    int parity_of(const LieElement& x) const;
};

// g_{T*E}: bracket -det * w_{gamma (*) gamma'} + delta delta <g,g'>(a cs + b ct)
LieAlgebra gte_algebra();
// variant with kappa(a,b,c,d;gamma,eta) and single central charge (tag Ct)
LieAlgebra gte_circ_algebra();
// toroidal extended affine algebra of gl_0: K, D, Ks, Kt
LieAlgebra toroidal_gl0();
// affine gl_n at generic level: X(i*n+j, r) with the trace form, level tag Ct
LieAlgebra affine_gl(int n);
// central extension of Ham(C^{*2|2})_alpha by (Ks, Kt) via the same cocycle
LieAlgebra ham_hat(const Scalar& alpha_ev, const Scalar& alpha_odd);

struct JacobiReport {
    long long triples = 0;
    std::vector<std::string> violations;  // capped, each names the triple
    bool ok() const { return violations.empty(); }
};

// super-antisymmetry + graded Jacobi over all key triples in the box
JacobiReport super_jacobi_check(const LieAlgebra& alg, int bound, size_t max_violations = 8);

// ---------------------------------------------------------------------------
// Hamiltonian side

// psi_mask bits: 1 = psi+, 2 = psi-.
// poisson bracket {f,g}_alpha on monomials s^a t^b psi_mask
LieElement ham_poisson(const Scalar& alpha_ev, const Scalar& alpha_odd,
                       const LieKey& f, const LieKey& g);

struct HamIsoReport {
    bool intertwines = true;
    bool cocycle_identity = true;
    bool sl2z_vector = true;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// w^{a,b}_gamma -> s^a t^b F(gamma), F = -(canonical iso), checked mod the
// (0,0) grade; also extracts the (cs, ct)-cocycle, verifies its graded
// cocycle identity and its SL(2,Z) vector transformation law.
HamIsoReport ham_iso_check(int bound);

// slope subalgebra of g_{T*E}: generators w^{ka,kb}, central c_mu = a cs + b ct.
// mu given as (a, b), b >= 0, gcd 1; infinity = (1, 0).
struct SlopeData {
    std::vector<LieKey> generators;  // k in [-kmax, kmax]\{0}
    LieElement central;
};
SlopeData slope_subalgebra(int a, int b, int kmax);

// po(0|m) with the diagonal bracket; pairing <f,g> = int dxi f g
struct PoReport {
    bool nondegenerate = true, supersymmetric = true, invariant = true;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
PoReport invariant_pairing_check(int m);
// the bracket itself, exposed for tests
OddPoly po_bracket(const OddPoly& f, const OddPoly& g);
// po(0|2) bracket in symplectic coordinates psi+, psi-
OddPoly po2_paired_bracket(const OddPoly& f, const OddPoly& g);

// affine po(0|2) comparison for slope subalgebras of ham_hat((1,1))
std::vector<std::string> slope_affine_po_check(int a, int b, int kmax);

}  // namespace tvoa
