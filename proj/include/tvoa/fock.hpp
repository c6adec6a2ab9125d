#pragma once

// Truncated Fock modules for Heisenberg-Clifford algebras over a graded
// coefficient space, with lattice sectors (hyperbolic or root lattices,
// bimultiplicative cocycle) and odd zero/log modes for bc-ghost ranks.
//
// States are sparse combinations of interned canonical monomials
//   theta-part  *  creation factors alpha_{-n}(gamma)  *  e^{label}
// with theta symbols ordered before creation factors; every reordering of
// odd symbols goes through one Koszul-sign routine.

#include "tvoa/errors.hpp"
#include "tvoa/frobenius.hpp"
#include "tvoa/linalg.hpp"
#include "tvoa/scalar.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tvoa {

constexpr int kMaxLatticeRank = 4;

struct FockMono {
    std::array<int8_t, kMaxLatticeRank> label{0, 0, 0, 0};
    std::uint32_t theta = 0;                 // zero-sector mask
    std::vector<std::uint16_t> factors;      // (n << 8) | gamma, ascending

    static std::uint16_t pack(int n, int gamma) {
        return std::uint16_t((n << 8) | gamma);
    }
    static int f_mode(std::uint16_t f) { return f >> 8; }
    static int f_gamma(std::uint16_t f) { return f & 0xff; }

    bool operator==(const FockMono& o) const {
        return label == o.label && theta == o.theta && factors == o.factors;
    }
    std::size_t hash() const;
    int weight() const;
};

using StateId = std::int32_t;
using StateVec = std::vector<std::pair<StateId, Scalar>>;  // sorted by id

void state_add(StateVec& v, StateId id, const Scalar& c);
StateVec state_merge(const StateVec& a, const StateVec& b, const Scalar& bscale = Scalar(1));
StateVec state_scale(const StateVec& a, const Scalar& s);
bool state_eq(const StateVec& a, const StateVec& b);

struct FockSpec {
    std::vector<BasisElem> heis;             // gamma basis: name, parity, degree
    Matrix pairing;                          // <gamma_i, gamma_j>
    int lattice_rank = 0;
    std::vector<Element> lattice_vectors;    // L_j expressed in the gamma basis
    Matrix cocycle_sign;                     // eps(L_i, L_j) in {+-1}, bimultiplicative
    int bc_rank = 0;                         // pairs (theta^b_i, theta^c_i)
    std::vector<std::pair<int, int>> bc_dirs;  // (sp_i, sm_i) gamma indices
};

// canonical spec for V_{T*E}: gamma basis {E, sp, sm, pt}, L+ = Z E
FockSpec vte_spec(int bc_rank = 0);
// rank-n bc system alone (ghost modules): 2n odd gammas, no lattice
FockSpec bc_spec(int n);
// free bosons on an arbitrary pairing with an integral lattice inside
FockSpec lattice_spec(std::vector<BasisElem> heis, Matrix pairing,
                      std::vector<Element> lattice, Matrix cocycle_sign);

class FockModule {
  public:
    FockModule(FockSpec spec, int max_weight, int lattice_window);

    const FockSpec& spec() const { return spec_; }
    int max_weight() const { return max_weight_; }
    int lattice_window() const { return lattice_window_; }

    // tilde-mode rescale r(n, gamma): exposed modes act as r * alpha_n.
    // identity (paper convention) unless plain_modes() is toggled on.
    void set_plain_modes(bool plain) { plain_ = plain; }
    bool plain_modes() const { return plain_; }

    StateId intern(const FockMono& m) const;
    const FockMono& mono(StateId id) const;
    StateId vacuum_id() const;
    StateVec vacuum() const;

    int weight_of(StateId id) const;
    // sum of lattice label coordinates weighted by direction j
    int label_of(StateId id, int j) const;

    // --- mode operators (results accumulated into out with coefficient c) ---
    // alpha_n(gamma): n < 0 creation, n > 0 contraction, n = 0 lattice pairing
    void alpha(int n, int gamma, StateId v, StateVec& out, const Scalar& c) const;
    void alpha(int n, const Element& gamma, const StateVec& v, StateVec& out) const;
    // theta multiplication / derivative on the zero sector; bit index
    void theta_mul(int bit, StateId v, StateVec& out, const Scalar& c) const;
    void theta_del(int bit, StateId v, StateVec& out, const Scalar& c) const;

    // bc dictionary for pair i (requires bc_rank > 0):
    //   b_n = alpha_n(sp_i) (n != 0), b_0 = d/dtheta^c_i, theta^b_i = mult
    //   c_n = -alpha_n(sm_i) (n != 0), c_0 = d/dtheta^b_i, theta^c_i = mult
    void bc_mode(char which, int i, int n, StateId v, StateVec& out, const Scalar& c) const;
    void theta_op(char which, int i, StateId v, StateVec& out, const Scalar& c) const;

    // z^p-coefficient of the lattice vertex operator for the vector
    // sum m_j L_j: e^{m} z^{alpha_0(m)} exp(sum_{k>0} alpha_{-k}(m) z^k / k)
    //              exp(-sum_{k>0} alpha_k(m) z^{-k} / k), cocycle applied
    void gamma_coeff(const std::vector<int>& m, int p, StateId v, StateVec& out,
                     const Scalar& c) const;

    // contravariant form: labels and theta-parts delta-paired, alpha_{-n}
    // adjoint to alpha_n (convention recorded in the docs)
    Scalar state_pairing(StateId u, StateId v) const;
    Scalar state_pairing(const StateVec& u, const StateVec& v) const;

    // all monomials of the given weight, lattice label and theta mask
    const std::vector<StateId>& slice(int weight, std::array<int8_t, kMaxLatticeRank> label,
                                      std::uint32_t theta) const;
    // dimension counts per weight <= wmax for a fixed label/theta sector
    std::vector<long long> character(int wmax, std::array<int8_t, kMaxLatticeRank> label,
                                     std::uint32_t theta) const;

    Scalar heis_pair(int g1, int g2) const { return spec_.pairing.at(size_t(g1), size_t(g2)); }
    Scalar pair_with_lattice(int gamma, const std::array<int8_t, kMaxLatticeRank>& label) const;

  private:
    FockSpec spec_;
    int max_weight_, lattice_window_;
    bool plain_ = false;

    mutable std::vector<FockMono> monos_;
    mutable std::unordered_map<std::size_t, std::vector<StateId>> lookup_;
    mutable std::unordered_map<std::uint64_t, std::vector<StateId>> slices_;

    Scalar mode_rescale(int n, int gamma) const;
    int koszul_to_slot(const FockMono& m, size_t slot) const;  // odd symbols before slot
    void check_weight(int w) const;
    void check_label(const std::array<int8_t, kMaxLatticeRank>& l) const;
};

}  // namespace tvoa
