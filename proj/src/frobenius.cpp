#include "tvoa/frobenius.hpp"

#include <bit>
#include <sstream>

#include "json.hpp"

namespace tvoa {

int SuperFrobenius::index_of(const std::string& n) const {
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].name == n) return int(i);
    throw input_error(name + ": no basis element named " + n);
}

Element SuperFrobenius::e(size_t k) const {
    Element v(dim());
    v.at(k) = Scalar(1);
    return v;
}

Element SuperFrobenius::unit_element() const {
    // solve u * e_k = e_k for all k
    size_t n = dim();
    Matrix m(n * n, n);
    std::vector<Scalar> rhs(n * n);
    for (size_t k = 0; k < n; ++k)
        for (size_t c = 0; c < n; ++c) {
            for (size_t l = 0; l < n; ++l) m.at(k * n + c, l) = mul[l][k][c];
            rhs[k * n + c] = (c == k) ? Scalar(1) : Scalar(0);
        }
    std::vector<Scalar> u;
    if (!solve(m, rhs, u)) throw input_error(name + ": algebra has no unit");
    return u;
}

Element SuperFrobenius::cup(const Element& a, const Element& b) const {
    if (a.size() != dim() || b.size() != dim())
        throw input_error(name + ": element not in basis span");
    Element r(dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (size_t k = 0; k < dim(); ++k)
                if (!mul[i][j][k].is_zero()) r[k] += c * mul[i][j][k];
        }
    }
    return r;
}

Scalar SuperFrobenius::tau(const Element& a) const {
    Scalar t(0);
    for (size_t i = 0; i < dim(); ++i) t += a[i] * trace[i];
    return t;
}

Scalar SuperFrobenius::pair(const Element& a, const Element& b) const {
    return tau(cup(a, b));
}

Matrix SuperFrobenius::gram() const {
    Matrix g(dim(), dim());
    for (size_t i = 0; i < dim(); ++i)
        for (size_t j = 0; j < dim(); ++j) g.at(i, j) = tau(mul[i][j]);
    return g;
}

// Derive the basis-level convolution table by adjunction:
//   < e_i (*) e_j , e_k > = < e_i (x) e_j , m^*(e_k) >
// with the tensor-square pairing <a(x)b, c(x)d> = (-1)^{p(b)p(c)}<a,c><b,d>.
static std::vector<std::vector<Element>> derive_star(const SuperFrobenius& A) {
    size_t n = A.dim();
    Matrix g = A.gram();
    Matrix gt(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) gt.at(i, j) = g.at(j, i);
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Scalar> rhs(n);
            for (size_t k = 0; k < n; ++k) {
                Scalar v(0);
                for (const auto& [p, q, c] : A.coproduct[k]) {
                    Scalar term = c * g.at(i, size_t(p)) * g.at(j, size_t(q));
                    if (A.basis[j].parity && A.basis[p].parity) term = -term;
                    v += term;
                }
                rhs[k] = v;
            }
            std::vector<Scalar> u;
            if (!solve(gt, rhs, u))
                throw input_error(A.name + ": degenerate pairing in convolution");
            table[i][j] = std::move(u);
        }
    return table;
}

Element SuperFrobenius::convolve(const Element& a, const Element& b) const {
    if (a.size() != dim() || b.size() != dim())
        throw input_error(name + ": element not in basis span");
    if (!star_table) {
        if (!has_coproduct)
            throw unsupported_error(name + ": convolution needs coproduct data");
        star_table = derive_star(*this);
    }
    Element r(dim());
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            const Element& t = (*star_table)[i][j];
            for (size_t k = 0; k < dim(); ++k)
                if (!t[k].is_zero()) r[k] += c * t[k];
        }
    }
    return r;
}

std::optional<Element> SuperFrobenius::convolution_unit() const {
    size_t n = dim();
    Matrix m(n * n, n);
    std::vector<Scalar> rhs(n * n);
    for (size_t k = 0; k < n; ++k) {
        Element ek = e(k);
        for (size_t l = 0; l < n; ++l) {
            Element lk = convolve(e(l), ek);
            for (size_t c = 0; c < n; ++c) m.at(k * n + c, l) = lk[c];
        }
        for (size_t c = 0; c < n; ++c) rhs[k * n + c] = (c == k) ? Scalar(1) : Scalar(0);
    }
    std::vector<Scalar> u;
    if (!solve(m, rhs, u)) return std::nullopt;
    return u;
}

int SuperFrobenius::parity_of(const Element& a) const {
    int p = -1;
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        if (p == -1) p = basis[i].parity;
        else if (p != basis[i].parity) throw input_error(name + ": inhomogeneous element");
    }
    return p == -1 ? 0 : p;
}

std::string SuperFrobenius::show(const Element& a) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (a[i].is_one()) os << basis[i].name;
        else os << a[i].str() << "*" << basis[i].name;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<std::string> frobenius_verify(const SuperFrobenius& A) {
    std::vector<std::string> bad;
    size_t n = A.dim();
    auto nm = [&](size_t i) { return A.basis[i].name; };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // supercommutativity
            Element ij = A.mul[i][j], ji = A.mul[j][i];
            int sign = (A.basis[i].parity && A.basis[j].parity) ? -1 : 1;
            for (size_t k = 0; k < n; ++k) {
                Scalar want = sign < 0 ? -ji[k] : ji[k];
                if (!(ij[k] == want)) {
                    bad.push_back("supercommutativity fails at (" + nm(i) + "," + nm(j) + ")");
                    break;
                }
            }
            // degree and parity additivity
            for (size_t k = 0; k < n; ++k)
                if (!ij[k].is_zero()) {
                    if (A.basis[k].degree != A.basis[i].degree + A.basis[j].degree)
                        bad.push_back("degree additivity fails at (" + nm(i) + "," + nm(j) + ")");
                    if (A.basis[k].parity != ((A.basis[i].parity + A.basis[j].parity) & 1))
                        bad.push_back("parity additivity fails at (" + nm(i) + "," + nm(j) + ")");
                }
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Element lhs = A.cup(A.mul[i][j], A.e(k));
                Element rhs = A.cup(A.e(i), A.mul[j][k]);
                if (!(lhs == rhs))
                    bad.push_back("associativity fails at (" + nm(i) + "," + nm(j) + "," + nm(k) + ")");
                Scalar flhs = A.tau(A.cup(A.mul[i][j], A.e(k)));
                Scalar frhs = A.tau(A.cup(A.e(i), A.mul[j][k]));
                if (!(flhs == frhs))
                    bad.push_back("frobenius compatibility fails at (" + nm(i) + "," + nm(j) + "," + nm(k) + ")");
            }
    if (det(A.gram()).is_zero()) bad.push_back("pairing degenerate");
    return bad;
}

// ---------------------------------------------------------------------------

SuperFrobenius abelian_cohomology(int g) {
    int m = 2 * g;
    size_t n = size_t(1) << m;
    std::vector<std::string> vnames;
    for (int v = 0; v < m; ++v) vnames.push_back("t" + std::to_string(v + 1));

    SuperFrobenius A;
    A.name = "H*(A_g" + std::to_string(g) + ")";
    for (size_t mask = 0; mask < n; ++mask) {
        std::string nm;
        for (int v = 0; v < m; ++v)
            if (mask & (size_t(1) << v)) nm += vnames[v];
        if (nm.empty()) nm = "1";
        A.basis.push_back({nm, std::popcount(mask) & 1, std::popcount(OddMono(mask))});
    }
    A.mul.assign(n, std::vector<Element>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            Element r(n);
            if (!(a & b)) {
                int s = koszul_sign(OddMono(a), OddMono(b));
                r[a | b] = Scalar(s);
            }
            A.mul[a][b] = std::move(r);
        }
    A.trace.assign(n, Scalar(0));
    A.trace[n - 1] = Scalar::i_pow(g);  // tau = (-1)^{g/2} int dtheta

    // coproduct: theta_i -> theta'_i + theta''_i, multiplicative
    std::vector<std::string> big;
    for (int v = 0; v < m; ++v) big.push_back(vnames[v] + "'");
    for (int v = 0; v < m; ++v) big.push_back(vnames[v] + "''");
    A.has_coproduct = true;
    A.coproduct.resize(n);
    for (size_t mask = 0; mask < n; ++mask) {
        OddPoly prod = OddPoly::constant(big, Scalar(1));
        for (int v = 0; v < m; ++v)
            if (mask & (size_t(1) << v)) {
                OddPoly s = OddPoly::monomial(big, OddMono(1) << v);
                s.add_term(OddMono(1) << (m + v), Scalar(1));
                prod = prod * s;
            }
        for (const auto& [mono, c] : prod.terms) {
            // primed bits all precede double-primed bits, so the ascending
            // monomial is already factored with no extra sign
            OddMono p = mono & ((OddMono(1) << m) - 1);
            OddMono q = mono >> m;
            A.coproduct[mask].emplace_back(int(p), int(q), c);
        }
    }
    return A;
}

SuperFrobenius elliptic_voa_algebra() {
    SuperFrobenius A;
    A.name = "H*(E)_voa";
    A.basis = {{"E", 0, 0}, {"sp", 1, 1}, {"sm", 1, 1}, {"pt", 0, 2}};
    auto el = [&](int k, Scalar c = Scalar(1)) {
        Element v(4);
        if (k >= 0) v[size_t(k)] = c;
        return v;
    };
    const int E = 0, SP = 1, SM = 2, PT = 3;
    A.mul.assign(4, std::vector<Element>(4, el(-1)));
    // cup: unit E, sp.sm = pt
    A.mul[E][E] = el(E);
    A.mul[E][SP] = el(SP);
    A.mul[E][SM] = el(SM);
    A.mul[E][PT] = el(PT);
    A.mul[SP][E] = el(SP);
    A.mul[SM][E] = el(SM);
    A.mul[PT][E] = el(PT);
    A.mul[SP][SM] = el(PT);
    A.mul[SM][SP] = el(PT, Scalar(-1));
    A.trace = {Scalar(0), Scalar(0), Scalar(0), Scalar(1)};
    // convolution: unit pt, free supercommutative on sp, sm with sp (*) sm = E
    std::vector<std::vector<Element>> star(4, std::vector<Element>(4, el(-1)));
    star[PT][PT] = el(PT);
    star[PT][SP] = el(SP);
    star[PT][SM] = el(SM);
    star[PT][E] = el(E);
    star[SP][PT] = el(SP);
    star[SM][PT] = el(SM);
    star[E][PT] = el(E);
    star[SP][SM] = el(E);
    star[SM][SP] = el(E, Scalar(-1));
    star[SP][E] = el(-1);
    A.star_table = std::move(star);
    return A;
}

// ---------------------------------------------------------------------------
// Fourier-Mukai package

FourierMukai::FourierMukai(int g_) : g(g_) {
    for (int v = 0; v < 2 * g; ++v) vars.push_back("t" + std::to_string(v + 1));
    for (int v = 0; v < 2 * g; ++v) vars.push_back("x" + std::to_string(v + 1));
    for (int v = 0; v < 2 * g; ++v) theta_block |= OddMono(1) << v;
    for (int v = 0; v < 2 * g; ++v) chi_block |= OddMono(1) << (2 * g + v);
}

OddPoly FourierMukai::theta_monomial(OddMono subset) const {
    return OddPoly::monomial(vars, subset);
}

OddPoly FourierMukai::tau_theta(const OddPoly& f) const {
    return berezin(f, theta_block) * Scalar::i_pow(g);
}

OddPoly FourierMukai::phi_h(const OddPoly& f) const {
    // ch(P) = exp(sum theta_i chi_i); each factor is even
    OddPoly kernel = OddPoly::constant(vars, Scalar(1));
    for (int v = 0; v < 2 * g; ++v) {
        OddPoly tx = OddPoly::monomial(vars, OddMono(1) << v) *
                     OddPoly::monomial(vars, OddMono(1) << (2 * g + v));
        kernel = kernel * (OddPoly::constant(vars, Scalar(1)) + tx);
    }
    return tau_theta(f * kernel);
}

std::vector<int> FourierMukai::derive_pd_signs() const {
    std::vector<int> s(size_t(2 * g) + 1, 0);
    for (OddMono a = 0; a < (OddMono(1) << (2 * g)); ++a) {
        int k = std::popcount(a);
        OddMono comp = theta_block & ~a;
        OddMono chi_comp = comp << (2 * g);
        OddPoly lhs = phi_h(theta_monomial(a));
        long long half = (long long)k * (k + 1) / 2;
        if (half & 1) lhs = -lhs;
        // lhs must be a multiple of chi_{comp}
        for (const auto& [mm, cc] : lhs.terms)
            if (mm != chi_comp) throw scalar_error("phi_h not supported on the complement");
        Scalar coeff = lhs.coeff(chi_comp);
        Scalar t = tau_theta(theta_monomial(a) * theta_monomial(comp)).coeff(0);
        Scalar ratio = coeff / t;
        int sign;
        if (ratio == Scalar(1)) sign = 1;
        else if (ratio == Scalar(-1)) sign = -1;
        else throw scalar_error("pd sign is not +-1");
        if (s[size_t(k)] == 0) s[size_t(k)] = sign;
        else if (s[size_t(k)] != sign) throw scalar_error("pd sign not constant in degree");
    }
    return s;
}

OddPoly FourierMukai::pd(const OddPoly& f) const {
    std::vector<int> s = derive_pd_signs();
    OddPoly r(vars);
    for (const auto& [m, c] : f.terms) {
        if (m & chi_block) throw input_error("pd input must live in the theta block");
        int k = std::popcount(m);
        OddMono comp = theta_block & ~m;
        Scalar t = tau_theta(theta_monomial(m) * theta_monomial(comp)).coeff(0);
        Scalar v = c * t * Scalar(s[size_t(k)]);
        r.add_term(comp << (2 * g), v);
    }
    return r;
}

OddPoly FourierMukai::fourier(const OddPoly& f) const {
    return fourier_odd(f, theta_block, chi_block);
}

// ---------------------------------------------------------------------------
// JSON

std::string frobenius_to_json(const SuperFrobenius& A) {
    nlohmann::json j;
    j["name"] = A.name;
    for (const auto& b : A.basis)
        j["basis"].push_back({{"name", b.name}, {"parity", b.parity}, {"degree", b.degree}});
    for (size_t i = 0; i < A.dim(); ++i) {
        nlohmann::json row;
        for (size_t k = 0; k < A.dim(); ++k) {
            nlohmann::json cell;
            for (const auto& c : A.mul[i][k]) cell.push_back(c.str());
            row.push_back(cell);
        }
        j["mul"].push_back(row);
    }
    Matrix g = A.gram();
    for (size_t i = 0; i < A.dim(); ++i) {
        nlohmann::json row;
        for (size_t k = 0; k < A.dim(); ++k) row.push_back(g.at(i, k).str());
        j["pairing"].push_back(row);
    }
    for (const auto& t : A.trace) j["trace"].push_back(t.str());
    if (A.has_coproduct) {
        nlohmann::json cp;
        for (const auto& terms : A.coproduct) {
            nlohmann::json row;
            for (const auto& [p, q, c] : terms) row.push_back({p, q, c.str()});
            cp.push_back(row);
        }
        j["coproduct"] = cp;
    }
    return j.dump(1);
}

SuperFrobenius frobenius_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SuperFrobenius A;
    A.name = j.value("name", "algebra");
    for (const auto& b : j.at("basis"))
        A.basis.push_back({b.at("name"), b.at("parity"), b.at("degree")});
    size_t n = A.dim();
    A.mul.assign(n, std::vector<Element>(n, Element(n)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t c = 0; c < n; ++c)
                A.mul[i][k][c] = scalar_parse(j.at("mul").at(i).at(k).at(c).get<std::string>());
    A.trace.assign(n, Scalar(0));
    for (size_t i = 0; i < n; ++i)
        A.trace[i] = scalar_parse(j.at("trace").at(i).get<std::string>());
    if (j.contains("coproduct")) {
        A.has_coproduct = true;
        A.coproduct.resize(n);
        for (size_t k = 0; k < n; ++k)
            for (const auto& t : j.at("coproduct").at(k))
                A.coproduct[k].emplace_back(t.at(0).get<int>(), t.at(1).get<int>(),
                                            scalar_parse(t.at(2).get<std::string>()));
    }
    return A;
}

}  // namespace tvoa
