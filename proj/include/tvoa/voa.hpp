#pragma once

// Fields acting on a truncated Fock module.  A Field is an immutable
// expression tree (free-boson fields, lattice vertex operators, bc fields
// with their log/zero modes, normal-ordered products, derivatives and
// z-multiplications); an Evaluator extracts exact (z-power, log-degree)
// coefficients of a field applied to a state.  Zhu's change of coordinates
// and the coordinated twist X(v, z) = Y(z^{L0} T(v), z) live here too.

#include "tvoa/fock.hpp"

#include <map>
#include <memory>
#include <unordered_map>

namespace tvoa {

struct FieldNode;
using Field = std::shared_ptr<const FieldNode>;

struct FieldNode {
    enum class Kind {
        Alpha,     // alpha(gamma, z) = sum alpha_n z^{-n-1}
        Gamma,     // lattice vertex operator for sum m_j L_j
        BField,    // b(z) of bc pair i
        CField,    // c(z) of bc pair i: log z and theta^c modes included
        IntBoson,  // integrated boson phi(gamma,z): z^{-n}-modes alpha_n/(-n),
                   // optional constant (theta) and log (alpha_0) parts
        NProd,     // :A B:, splitting the left factor at z-power >= split(A)
        Deriv,     // d/dz
        Dz,        // z d/dz
        Zk,        // z^k *
        Scale, Sum,
        YState,    // Y(v, z) for a creation monomial v (built structurally)
    };
    Kind kind;
    Element gamma;            // Alpha / IntBoson
    std::vector<int> mvec;    // Gamma
    int bc_pair = 0;          // BField / CField
    bool with_const = false, with_log = false;  // IntBoson
    Field a, b;               // children
    int k = 0;                // Zk power / Deriv order 1
    Scalar scale;             // Scale
    std::vector<Field> parts; // Sum
    FockMono state;           // YState

    int parity_cache = -1;
};

// constructors
Field f_alpha(Element gamma);
Field f_alpha(const FockModule& M, int gamma_index);
Field f_bold_alpha(const FockModule& M, int gamma_index);  // z * alpha
Field f_gamma(std::vector<int> mvec);
Field f_b(int pair);
Field f_c(int pair);
Field f_int_boson(Element gamma, bool with_const, bool with_log);
Field f_nprod(Field a, Field b);
Field f_deriv(Field a);
Field f_dz(Field a);
Field f_zk(Field a, int k);
Field f_scale(Field a, Scalar s);
Field f_sum(std::vector<Field> parts);
Field f_ystate(const FockModule& M, const FockMono& v);

int field_parity(const FockModule& M, const Field& f);

// conformal vector of the free-boson part: (1/2) sum alpha_{-1}(g_i) alpha_{-1}(g^i)
FockMono conformal_state(const FockModule& M);
// omega field of the module (Y of the conformal state)
Field f_omega(const FockModule& M);

// L0-eigenvalue of a monomial: factor weight + <label, label>/2
long long state_l0(const FockModule& M, StateId id);

class Evaluator {
  public:
    explicit Evaluator(const FockModule& M) : M_(M) {}
    const FockModule& module() const { return M_; }

    // coefficient of z^p log^l in f applied to the state
    StateVec coeff(const Field& f, int p, int l, StateId v);
    StateVec coeff(const Field& f, int p, int l, const StateVec& v);

    // modes in the Y-style indexing: A_{(n)} = [z^{-n-1}] A
    StateVec y_mode(const Field& f, long long n, const StateVec& v) {
        return coeff(f, int(-n - 1), 0, v);
    }

    std::size_t cache_size() const { return cache_.size(); }

  private:
    const FockModule& M_;
    struct Key {
        const FieldNode* node;
        int p, l;
        StateId v;
        bool operator==(const Key& o) const {
            return node == o.node && p == o.p && l == o.l && v == o.v;
        }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = std::hash<const void*>()(k.node);
            h = h * 1099511628211ull + std::size_t(std::uint32_t(k.p));
            h = h * 1099511628211ull + std::size_t(k.l);
            h = h * 1099511628211ull + std::size_t(k.v);
            return h;
        }
    };
    std::unordered_map<Key, StateVec, KeyHash> cache_;

    StateVec compute(const Field& f, int p, int l, StateId v);
    // weight shift of [z^p]f on states with the given label: p + shift
    int shift_of(const Field& f, const std::array<int8_t, kMaxLatticeRank>& label) const;
    std::array<int8_t, kMaxLatticeRank> label_delta(const Field& f) const;
    int split_of(const Field& f) const;
};

// ---------------------------------------------------------------------------
// Zhu change of coordinates and coordinated fields

// exact Laurent-type series sum_{j >= lo} c_j z^j, finite window
struct ZSeries {
    int lo = 0;
    std::vector<Scalar> c;  // c[j - lo]
    Scalar at(int j) const {
        if (j < lo || j >= lo + int(c.size())) return Scalar(0);
        return c[size_t(j - lo)];
    }
};
// log(1+z)^n (1+z)^{w-1} up to z-order hi (n may be negative)
ZSeries zhu_series(long long n, long long w, int hi);

// a[n] b computed through Res_z(Y(a,z) log(1+z)^n (1+z)^{wt a - 1}) b
StateVec zhu_bracket_mode(Evaluator& ev, const FockMono& a, long long n, const StateVec& b);
// Zhu's T on a creation monomial: T(a_{(n)} b) = T(a)[n] T(b)
StateVec zhu_T(Evaluator& ev, const FockMono& v);

// X(v, z) = Y(z^{L0} T(v), z) as a field (finite sum of z^h Y(T_h(v), z))
Field f_coordinated(Evaluator& ev, const FockMono& v);
Field f_coordinated(Evaluator& ev, const StateVec& v);

}  // namespace tvoa
