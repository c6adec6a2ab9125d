#include "tvoa/liealg.hpp"

#include <bit>
#include <numeric>
#include <sstream>

namespace tvoa {

std::string LieKey::str() const {
    std::ostringstream os;
    switch (tag) {
        case Gen::W: os << "w(" << a << "," << b << ";" << gamma << ")"; break;
        case Gen::Wc: os << "wc(" << a << "," << b << ";" << gamma << ")"; break;
        case Gen::K: os << "k(" << a << "," << b << ")"; break;
        case Gen::D: os << "d(" << a << "," << b << ")"; break;
        case Gen::X: os << "x(" << gamma << ";" << a << "," << b << ")"; break;
        case Gen::Cs: os << "cs"; break;
        case Gen::Ct: os << "ct"; break;
        case Gen::Ks: os << "ks"; break;
        case Gen::Kt: os << "kt"; break;
        case Gen::Ham: os << "f(" << a << "," << b << ";" << gamma << ")"; break;
    }
    return os.str();
}

void LieElement::add(const LieKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(k);
    if (it == terms.end()) terms.emplace(k, c);
    else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

LieElement LieElement::single(const LieKey& k, const Scalar& c) {
    LieElement e;
    e.add(k, c);
    return e;
}

LieElement LieElement::operator+(const LieElement& o) const {
    LieElement r = *this;
    for (const auto& [k, c] : o.terms) r.add(k, c);
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
    LieElement r = *this;
    for (const auto& [k, c] : o.terms) r.add(k, -c);
    return r;
}

LieElement LieElement::operator*(const Scalar& s) const {
    LieElement r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms) r.terms.emplace(k, c * s);
    return r;
}

bool LieElement::operator==(const LieElement& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (auto jt = terms.begin(); jt != terms.end(); ++jt, ++it)
        if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
    return true;
}

std::string LieElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one()) os << k.str();
        else os << c.str() << "*" << k.str();
    }
    return os.str();
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
    LieElement r;
    for (const auto& [kx, cx] : x.terms)
        for (const auto& [ky, cy] : y.terms) {
            LieElement part = bracket_keys(kx, ky);
            for (const auto& [k, c] : part.terms) r.add(k, c * cx * cy);
        }
    return r;
}

int LieAlgebra::parity_of(const LieElement& x) const {
    int p = -1;
    for (const auto& [k, c] : x.terms) {
        int q = parity(k);
        if (p == -1) p = q;
        else if (p != q) throw input_error(name + ": inhomogeneous element");
    }
    return p == -1 ? 0 : p;
}

// ---------------------------------------------------------------------------
// g_{T*E}

namespace {

// shared coefficient algebra; basis E, sp, sm, pt
const SuperFrobenius& hvoa() {
    static SuperFrobenius A = elliptic_voa_algebra();
    return A;
}

long long det2(int a, int b, int c, int d) { return (long long)a * d - (long long)b * c; }

std::vector<LieKey> w_box(Gen tag, int bound, std::vector<LieKey> centrals) {
    std::vector<LieKey> keys;
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int g = 0; g < 4; ++g) keys.push_back({tag, a, b, g});
    for (auto& c : centrals) keys.push_back(c);
    return keys;
}

}  // namespace

LieAlgebra gte_algebra() {
    LieAlgebra L;
    L.name = "g_TE";
    L.parity = [](const LieKey& k) {
        return k.tag == Gen::W ? hvoa().basis[size_t(k.gamma)].parity : 0;
    };
    L.bracket_keys = [](const LieKey& x, const LieKey& y) -> LieElement {
        LieElement r;
        if (x.tag != Gen::W || y.tag != Gen::W) return r;  // centrals
        const SuperFrobenius& A = hvoa();
        long long dt = det2(x.a, x.b, y.a, y.b);
        if (dt != 0) {
            Element star = A.convolve(A.e(size_t(x.gamma)), A.e(size_t(y.gamma)));
            for (size_t g = 0; g < 4; ++g)
                if (!star[g].is_zero())
                    r.add({Gen::W, x.a + y.a, x.b + y.b, int(g)}, Scalar(-dt) * star[g]);
        }
        if (x.a + y.a == 0 && x.b + y.b == 0) {
            Scalar p = A.pair(A.e(size_t(x.gamma)), A.e(size_t(y.gamma)));
            if (!p.is_zero()) {
                r.add({Gen::Cs}, p * Scalar(x.a));
                r.add({Gen::Ct}, p * Scalar(x.b));
            }
        }
        return r;
    };
    L.keys_in_box = [](int bound) { return w_box(Gen::W, bound, {{Gen::Cs}, {Gen::Ct}}); };
    return L;
}

LieAlgebra gte_circ_algebra() {
    LieAlgebra L;
    L.name = "g_TE_circ";
    L.parity = [](const LieKey& k) {
        return k.tag == Gen::Wc ? hvoa().basis[size_t(k.gamma)].parity : 0;
    };
    L.bracket_keys = [](const LieKey& x, const LieKey& y) -> LieElement {
        LieElement r;
        if (x.tag != Gen::Wc || y.tag != Gen::Wc) return r;
        const SuperFrobenius& A = hvoa();
        long long dt = det2(x.a, x.b, y.a, y.b);
        Element star = A.convolve(A.e(size_t(x.gamma)), A.e(size_t(y.gamma)));
        int dg = A.basis[size_t(x.gamma)].degree;
        for (size_t g = 0; g < 4; ++g) {
            if (star[g].is_zero()) continue;
            long long kappa = -dt - (long long)x.a * A.basis[g].degree +
                              (long long)(x.a + y.a) * (dg - 1);
            if (kappa != 0)
                r.add({Gen::Wc, x.a + y.a, x.b + y.b, int(g)}, Scalar(kappa) * star[g]);
        }
        if (x.a + y.a == 0 && x.b + y.b == 0) {
            Scalar p = A.pair(A.e(size_t(x.gamma)), A.e(size_t(y.gamma)));
            // central coefficient b + deg(gamma) - 1: the mode expansion of
            // the variant OPE; the plain-b version is not a cocycle
            r.add({Gen::Ct}, p * Scalar(x.b + dg - 1));
        }
        return r;
    };
    L.keys_in_box = [](int bound) { return w_box(Gen::Wc, bound, {{Gen::Ct}}); };
    return L;
}

LieAlgebra toroidal_gl0() {
    LieAlgebra L;
    L.name = "t_gl0";
    L.parity = [](const LieKey&) { return 0; };
    L.bracket_keys = [](const LieKey& x, const LieKey& y) -> LieElement {
        LieElement r;
        auto central = [&](int a, int b, const Scalar& scale) {
            r.add({Gen::Ks}, Scalar(a) * scale);
            r.add({Gen::Kt}, Scalar(b) * scale);
        };
        long long dt = det2(x.a, x.b, y.a, y.b);
        bool diag = (x.a + y.a == 0 && x.b + y.b == 0);
        if (x.tag == Gen::D && y.tag == Gen::D) {
            if (dt) r.add({Gen::D, x.a + y.a, x.b + y.b, 0}, Scalar(-dt));
        } else if (x.tag == Gen::D && y.tag == Gen::K) {
            if (dt) r.add({Gen::K, x.a + y.a, x.b + y.b, 0}, Scalar(-dt));
            if (diag) central(x.a, x.b, Scalar(1));
        } else if (x.tag == Gen::K && y.tag == Gen::D) {
            // super-antisymmetry from the (D,K) case
            if (dt) r.add({Gen::K, x.a + y.a, x.b + y.b, 0}, Scalar(-dt));
            if (diag) central(y.a, y.b, Scalar(-1));
        }
        return r;  // [K,K] = 0, Ks/Kt central
    };
    L.keys_in_box = [](int bound) {
        std::vector<LieKey> keys;
        for (int a = -bound; a <= bound; ++a)
            for (int b = -bound; b <= bound; ++b) {
                if (a == 0 && b == 0) continue;
                keys.push_back({Gen::K, a, b, 0});
                keys.push_back({Gen::D, a, b, 0});
            }
        keys.push_back({Gen::Ks});
        keys.push_back({Gen::Kt});
        return keys;
    };
    return L;
}

LieAlgebra affine_gl(int n) {
    LieAlgebra L;
    L.name = "affine_gl" + std::to_string(n);
    L.parity = [](const LieKey&) { return 0; };
    L.bracket_keys = [n](const LieKey& x, const LieKey& y) -> LieElement {
        LieElement r;
        if (x.tag != Gen::X || y.tag != Gen::X) return r;
        int i = x.gamma / n, j = x.gamma % n;
        int k = y.gamma / n, l = y.gamma % n;
        int rr = x.b, ss = y.b;  // loop index kept in b
        if (j == k) r.add({Gen::X, 0, rr + ss, i * n + l}, Scalar(1));
        if (l == i) r.add({Gen::X, 0, rr + ss, k * n + j}, Scalar(-1));
        // trace form <E_ij, E_kl> = delta_jk delta_li, level tag Ct
        if (j == k && l == i && rr + ss == 0) r.add({Gen::Ct}, Scalar(rr));
        return r;
    };
    L.keys_in_box = [n](int bound) {
        std::vector<LieKey> keys;
        for (int g = 0; g < n * n; ++g)
            for (int m = -bound; m <= bound; ++m) keys.push_back({Gen::X, 0, m, g});
        keys.push_back({Gen::Ct});
        return keys;
    };
    return L;
}

// ---------------------------------------------------------------------------
// Hamiltonian superalgebra on C^{*2|2}

namespace {

const std::vector<std::string>& psi_names() {
    static std::vector<std::string> v = {"psi+", "psi-"};
    return v;
}

}  // namespace

// {f,g}_odd in symplectic coordinates:
// (-1)^{p(f)+1} (df/dpsi+ dg/dpsi- + df/dpsi- dg/dpsi+)
OddPoly po2_paired_bracket(const OddPoly& u, const OddPoly& v) {
    OddPoly r = u.derivative(0) * v.derivative(1) + u.derivative(1) * v.derivative(0);
    if (((u.parity() + 1) & 1) == 0) return r;  // (-1)^{p+1} = +1 when p odd
    return -r;
}

LieElement ham_poisson(const Scalar& aev, const Scalar& aodd, const LieKey& f, const LieKey& g) {
    if (f.tag != Gen::Ham || g.tag != Gen::Ham) return {};
    LieElement r;
    int A = f.a + g.a, B = f.b + g.b;
    OddPoly u = OddPoly::monomial(psi_names(), OddMono(f.gamma));
    OddPoly v = OddPoly::monomial(psi_names(), OddMono(g.gamma));
    if (!aev.is_zero()) {
        long long dt = det2(f.a, f.b, g.a, g.b);
        if (dt) {
            OddPoly uv = u * v;
            for (const auto& [m, c] : uv.terms)
                r.add({Gen::Ham, A, B, int(m)}, aev * Scalar(dt) * c);
        }
    }
    if (!aodd.is_zero()) {
        OddPoly ob = po2_paired_bracket(u, v);
        for (const auto& [m, c] : ob.terms) r.add({Gen::Ham, A, B, int(m)}, aodd * c);
    }
    return r;
}

LieAlgebra ham_hat(const Scalar& alpha_ev, const Scalar& alpha_odd) {
    LieAlgebra L;
    L.name = "ham_hat";
    L.parity = [](const LieKey& k) {
        return k.tag == Gen::Ham ? std::popcount(unsigned(k.gamma)) & 1 : 0;
    };
    L.bracket_keys = [alpha_ev, alpha_odd](const LieKey& x, const LieKey& y) -> LieElement {
        LieElement r = ham_poisson(alpha_ev, alpha_odd, x, y);
        if (x.tag == Gen::Ham && y.tag == Gen::Ham && x.a + y.a == 0 && x.b + y.b == 0) {
            // cocycle xi(f,g) = <u,v>_po * (a, b)
            OddPoly uv = OddPoly::monomial(psi_names(), OddMono(x.gamma)) *
                         OddPoly::monomial(psi_names(), OddMono(y.gamma));
            Scalar p = berezin_top(uv);
            if (!p.is_zero()) {
                r.add({Gen::Ks}, p * Scalar(x.a));
                r.add({Gen::Kt}, p * Scalar(x.b));
            }
        }
        return r;
    };
    L.keys_in_box = [](int bound) {
        std::vector<LieKey> keys;
        for (int a = -bound; a <= bound; ++a)
            for (int b = -bound; b <= bound; ++b)
                for (int m = 0; m < 4; ++m) {
                    if (a == 0 && b == 0 && m == 0) continue;  // the constant is central
                    keys.push_back({Gen::Ham, a, b, m});
                }
        keys.push_back({Gen::Ks});
        keys.push_back({Gen::Kt});
        return keys;
    };
    return L;
}

// ---------------------------------------------------------------------------
// checks

JacobiReport super_jacobi_check(const LieAlgebra& alg, int bound, size_t max_violations) {
    JacobiReport rep;
    auto keys = alg.keys_in_box(bound);
    auto record = [&](const std::string& s) {
        if (rep.violations.size() < max_violations) rep.violations.push_back(s);
    };
    // super-antisymmetry on pairs
    for (const auto& x : keys)
        for (const auto& y : keys) {
            LieElement xy = alg.bracket_keys(x, y);
            LieElement yx = alg.bracket_keys(y, x);
            int s = (alg.parity(x) && alg.parity(y)) ? 1 : -1;
            if (!(xy == yx * Scalar(s)))
                record("antisymmetry fails at [" + x.str() + "," + y.str() + "]");
        }
    // graded Jacobi on triples
    for (const auto& x : keys)
        for (const auto& y : keys)
            for (const auto& z : keys) {
                ++rep.triples;
                int px = alg.parity(x), py = alg.parity(y), pz = alg.parity(z);
                LieElement j;
                auto term = [&](const LieKey& u, const LieKey& v, const LieKey& w, int sign) {
                    LieElement inner = alg.bracket_keys(v, w);
                    LieElement outer = alg.bracket(LieElement::single(u), inner);
                    j = j + outer * Scalar(sign);
                };
                term(x, y, z, (px && pz) ? -1 : 1);
                term(y, z, x, (py && px) ? -1 : 1);
                term(z, x, y, (pz && py) ? -1 : 1);
                if (!j.is_zero())
                    record("jacobi fails at (" + x.str() + "," + y.str() + "," + z.str() +
                           ") residual " + j.str());
            }
    return rep;
}

HamIsoReport ham_iso_check(int bound) {
    HamIsoReport rep;
    const SuperFrobenius& A = hvoa();
    auto viol = [&](const std::string& s) {
        if (rep.violations.size() < 16) rep.violations.push_back(s);
    };
    // dictionary F = -(canonical iso): pt -> -1, sp -> -psi+, sm -> -psi-, E -> -psi+psi-
    // (recorded convention; the minus sign absorbs the det-sign mismatch)
    auto F = [&](int gamma) -> std::pair<int, Scalar> {
        switch (gamma) {
            case 0: return {3, Scalar(-1)};  // E -> -psi+psi-
            case 1: return {1, Scalar(-1)};  // sp -> -psi+
            case 2: return {2, Scalar(-1)};  // sm -> -psi-
            default: return {0, Scalar(-1)}; // pt -> -1
        }
    };
    LieAlgebra g = gte_algebra();
    auto project = [](const LieElement& e) {  // drop centrals and the (0,0) grade
        LieElement r;
        for (const auto& [k, c] : e.terms)
            if (k.tag == Gen::W && !(k.a == 0 && k.b == 0)) r.add(k, c);
        return r;
    };
    auto to_ham = [&](const LieElement& e) {
        LieElement r;
        for (const auto& [k, c] : e.terms) {
            auto [m, s] = F(k.gamma);
            r.add({Gen::Ham, k.a, k.b, m}, c * s);
        }
        return r;
    };
    for (int a = -bound; a <= bound; ++a)
        for (int b = -bound; b <= bound; ++b)
            for (int c = -bound; c <= bound; ++c)
                for (int d = -bound; d <= bound; ++d)
                    for (int g1 = 0; g1 < 4; ++g1)
                        for (int g2 = 0; g2 < 4; ++g2) {
                            LieKey x{Gen::W, a, b, g1}, y{Gen::W, c, d, g2};
                            LieElement lhs = to_ham(project(g.bracket_keys(x, y)));
                            auto [m1, s1] = F(g1);
                            auto [m2, s2] = F(g2);
                            LieElement rhs =
                                ham_poisson(Scalar(1), Scalar(0), {Gen::Ham, a, b, m1},
                                            {Gen::Ham, c, d, m2}) * (s1 * s2);
                            // compare away from the (0,0) grade
                            LieElement rr;
                            for (const auto& [k, cc] : rhs.terms)
                                if (!(k.a == 0 && k.b == 0)) rr.add(k, cc);
                            if (!(lhs == rr)) {
                                rep.intertwines = false;
                                viol("intertwiner fails at " + x.str() + "," + y.str());
                            }
                        }
    // cocycle xi(x,y) = (cs, ct) part of the bracket; graded cocycle identity
    auto xi = [&](const LieElement& e) {
        std::pair<Scalar, Scalar> v{Scalar(0), Scalar(0)};
        for (const auto& [k, c] : e.terms) {
            if (k.tag == Gen::Cs) v.first = c;
            if (k.tag == Gen::Ct) v.second = c;
        }
        return v;
    };
    auto keys = g.keys_in_box(bound);
    for (const auto& x : keys)
        for (const auto& y : keys)
            for (const auto& z : keys) {
                if (x.tag != Gen::W || y.tag != Gen::W || z.tag != Gen::W) continue;
                int px = g.parity(x), py = g.parity(y), pz = g.parity(z);
                auto term = [&](const LieKey& u, const LieKey& v, const LieKey& w, int sign) {
                    LieElement inner = project(g.bracket_keys(v, w));
                    LieElement outer = g.bracket(LieElement::single(u), inner);
                    auto p = xi(outer);
                    return std::make_pair(p.first * Scalar(sign), p.second * Scalar(sign));
                };
                auto t1 = term(x, y, z, (px && pz) ? -1 : 1);
                auto t2 = term(y, z, x, (py && px) ? -1 : 1);
                auto t3 = term(z, x, y, (pz && py) ? -1 : 1);
                if (!(t1.first + t2.first + t3.first).is_zero() ||
                    !(t1.second + t2.second + t3.second).is_zero()) {
                    rep.cocycle_identity = false;
                    viol("cocycle identity fails at (" + x.str() + "," + y.str() + "," +
                         z.str() + ")");
                }
            }
    // SL(2,Z) acts on indices; xi transforms in the vector representation
    int mats[2][2][2] = {{{0, -1}, {1, 0}}, {{1, 1}, {0, 1}}};
    for (auto& M : mats) {
        for (const auto& x : keys)
            for (const auto& y : keys) {
                if (x.tag != Gen::W || y.tag != Gen::W) continue;
                LieKey xa{Gen::W, M[0][0] * x.a + M[0][1] * x.b,
                          M[1][0] * x.a + M[1][1] * x.b, x.gamma};
                LieKey ya{Gen::W, M[0][0] * y.a + M[0][1] * y.b,
                          M[1][0] * y.a + M[1][1] * y.b, y.gamma};
                auto lhs = xi(g.bracket_keys(xa, ya));
                auto v = xi(g.bracket_keys(x, y));
                Scalar r1 = Scalar(M[0][0]) * v.first + Scalar(M[0][1]) * v.second;
                Scalar r2 = Scalar(M[1][0]) * v.first + Scalar(M[1][1]) * v.second;
                if (!(lhs.first == r1) || !(lhs.second == r2)) {
                    rep.sl2z_vector = false;
                    viol("sl2z vector law fails at " + x.str() + "," + y.str());
                }
            }
    }
    return rep;
}

SlopeData slope_subalgebra(int a, int b, int kmax) {
    if (b < 0 || (b == 0 && a != 1)) throw input_error("slope not in lowest terms");
    if (std::gcd(a, b) != 1) throw input_error("slope not in lowest terms");
    SlopeData s;
    for (int k = -kmax; k <= kmax; ++k) {
        if (k == 0) continue;
        for (int g = 0; g < 4; ++g) s.generators.push_back({Gen::W, k * a, k * b, g});
    }
    s.central.add({Gen::Cs}, Scalar(a));
    s.central.add({Gen::Ct}, Scalar(b));
    return s;
}

// ---------------------------------------------------------------------------
// po(0|m)

namespace {
std::vector<std::string> xi_names(int m) {
    std::vector<std::string> v;
    for (int i = 0; i < m; ++i) v.push_back("xi" + std::to_string(i + 1));
    return v;
}
}  // namespace

OddPoly po_bracket(const OddPoly& f, const OddPoly& g) {
    OddPoly r(f.vars);
    for (size_t v = 0; v < f.vars.size(); ++v) r = r + f.derivative(int(v)) * g.derivative(int(v));
    if (f.parity() == 0 && !f.terms.empty()) r = -r;  // (-1)^{p(f)+1}
    return r;
}

PoReport invariant_pairing_check(int m) {
    if (m > 6) throw unsupported_error("po(0|m) check capped at m = 6");
    PoReport rep;
    auto vs = xi_names(m);
    size_t n = size_t(1) << m;
    auto mono = [&](size_t k) { return OddPoly::monomial(vs, OddMono(k)); };
    auto pairing = [&](const OddPoly& f, const OddPoly& g) { return berezin_top(f * g); };
    Matrix gram(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gram.at(i, j) = pairing(mono(i), mono(j));
    if (det(gram).is_zero()) {
        rep.nondegenerate = false;
        rep.violations.push_back("pairing degenerate");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            int pi = std::popcount(i) & 1, pj = std::popcount(j) & 1;
            Scalar want = (pi && pj) ? -gram.at(j, i) : gram.at(j, i);
            if (!(gram.at(i, j) == want)) {
                rep.supersymmetric = false;
                rep.violations.push_back("supersymmetry fails at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            }
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Scalar lhs = pairing(po_bracket(mono(i), mono(j)), mono(k));
                Scalar rhs = pairing(mono(i), po_bracket(mono(j), mono(k)));
                if (!(lhs == rhs)) {
                    rep.invariant = false;
                    if (rep.violations.size() < 8)
                        rep.violations.push_back("invariance fails at (" + std::to_string(i) +
                                                 "," + std::to_string(j) + "," +
                                                 std::to_string(k) + ")");
                }
            }
    return rep;
}

std::vector<std::string> slope_affine_po_check(int a, int b, int kmax) {
    // slope generators of ham_hat((1,1)) vs affine po(0|2):
    // [u T^k, v T^l] = {u,v} T^{k+l} + k delta_{k+l,0} <u,v> c_mu
    std::vector<std::string> bad;
    LieAlgebra H = ham_hat(Scalar(1), Scalar(1));
    auto vs = psi_names();
    for (int k = -kmax; k <= kmax; ++k)
        for (int l = -kmax; l <= kmax; ++l) {
            if (k == 0 || l == 0) continue;
            for (int u = 0; u < 4; ++u)
                for (int v = 0; v < 4; ++v) {
                    LieKey x{Gen::Ham, k * a, k * b, u}, y{Gen::Ham, l * a, l * b, v};
                    LieElement got = H.bracket_keys(x, y);
                    LieElement want;
                    OddPoly pb = po2_paired_bracket(OddPoly::monomial(vs, OddMono(u)),
                                                    OddPoly::monomial(vs, OddMono(v)));
                    for (const auto& [m, c] : pb.terms)
                        want.add({Gen::Ham, (k + l) * a, (k + l) * b, int(m)}, c);
                    if (k + l == 0) {
                        Scalar p = berezin_top(OddPoly::monomial(vs, OddMono(u)) *
                                               OddPoly::monomial(vs, OddMono(v)));
                        want.add({Gen::Ks}, p * Scalar(k) * Scalar(a));
                        want.add({Gen::Kt}, p * Scalar(k) * Scalar(b));
                    }
                    if (!(got == want))
                        bad.push_back("slope affine po(0|2) mismatch at k=" + std::to_string(k) +
                                      " l=" + std::to_string(l) + " u=" + std::to_string(u) +
                                      " v=" + std::to_string(v));
                }
        }
    return bad;
}

}  // namespace tvoa
