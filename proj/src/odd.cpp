#include "tvoa/odd.hpp"

#include <bit>
#include <sstream>

namespace tvoa {

int koszul_sign(OddMono a, OddMono b) {
    int crossings = 0;
    OddMono bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        crossings += std::popcount(a >> (j + 1));
    }
    return (crossings & 1) ? -1 : 1;
}

OddPoly OddPoly::constant(std::vector<std::string> names, const Scalar& c) {
    OddPoly p(std::move(names));
    if (!c.is_zero()) p.terms[0] = c;
    return p;
}

OddPoly OddPoly::monomial(std::vector<std::string> names, OddMono m, const Scalar& c) {
    OddPoly p(std::move(names));
    if (!c.is_zero()) p.terms[m] = c;
    return p;
}

void OddPoly::add_term(OddMono m, const Scalar& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
        if (!c.is_zero()) terms[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Scalar OddPoly::coeff(OddMono m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Scalar(0) : it->second;
}

bool OddPoly::is_homogeneous() const {
    if (terms.empty()) return true;
    int p = std::popcount(terms.begin()->first) & 1;
    for (const auto& [m, c] : terms)
        if ((std::popcount(m) & 1) != p) return false;
    return true;
}

int OddPoly::parity() const {
    if (terms.empty()) return 0;
    if (!is_homogeneous()) throw scalar_error("parity of inhomogeneous odd polynomial");
    return std::popcount(terms.begin()->first) & 1;
}

OddPoly OddPoly::operator+(const OddPoly& o) const {
    OddPoly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

OddPoly OddPoly::operator-() const {
    OddPoly r = *this;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

OddPoly OddPoly::operator-(const OddPoly& o) const { return *this + (-o); }

OddPoly OddPoly::operator*(const OddPoly& o) const {
    OddPoly r(vars);
    for (const auto& [ma, ca] : terms)
        for (const auto& [mb, cb] : o.terms) {
            if (ma & mb) continue;  // theta^2 = 0
            Scalar c = ca * cb;
            if (koszul_sign(ma, mb) < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    return r;
}

OddPoly OddPoly::operator*(const Scalar& s) const {
    OddPoly r(vars);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms) r.terms[m] = c * s;
    return r;
}

bool OddPoly::operator==(const OddPoly& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (auto jt = terms.begin(); jt != terms.end(); ++jt, ++it)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

OddPoly OddPoly::derivative(int v) const {
    OddPoly r(vars);
    OddMono bit = OddMono(1) << v;
    for (const auto& [m, c] : terms) {
        if (!(m & bit)) continue;
        int below = std::popcount(m & (bit - 1));
        r.add_term(m & ~bit, (below & 1) ? -c : c);
    }
    return r;
}

OddPoly OddPoly::scale_vars(OddMono mask, const Scalar& s) const {
    OddPoly r(vars);
    for (const auto& [m, c] : terms) {
        int k = std::popcount(m & mask);
        r.add_term(m, c * s.pow(k));
    }
    return r;
}

OddPoly OddPoly::exp() const {
    if (terms.count(0)) throw scalar_error("exp needs vanishing constant term");
    if (!terms.empty() && parity() != 0) throw scalar_error("exp of odd element");
    OddPoly acc = OddPoly::constant(vars, Scalar(1));
    OddPoly p = *this;
    Scalar fact(1);
    for (long long n = 1; !p.is_zero(); ++n) {
        fact *= Scalar(n);
        acc = acc + p * fact.inv();
        p = p * *this;
    }
    return acc;
}

OddPoly berezin(const OddPoly& f, OddMono block) {
    OddPoly r(f.vars);
    for (const auto& [m, c] : f.terms) {
        if ((m & block) != block) continue;
        OddMono rest = m & ~block;
        int s = koszul_sign(rest, block);
        r.add_term(rest, s < 0 ? -c : c);
    }
    return r;
}

Scalar berezin_top(const OddPoly& f) {
    OddMono block = 0;
    for (size_t v = 0; v < f.vars.size(); ++v) block |= OddMono(1) << v;
    OddPoly r = berezin(f, block);
    return r.coeff(0);
}

OddPoly fourier_odd(const OddPoly& f, OddMono theta_block, OddMono psi_block) {
    if (std::popcount(theta_block) != std::popcount(psi_block))
        throw scalar_error("fourier blocks of unequal size");
    OddPoly kernel = OddPoly::constant(f.vars, Scalar(1));
    OddMono tb = theta_block, pb = psi_block;
    while (tb) {
        int t = std::countr_zero(tb);
        tb &= tb - 1;
        int p = std::countr_zero(pb);
        pb &= pb - 1;
        OddPoly factor = OddPoly::constant(f.vars, Scalar(1));
        OddPoly pt = OddPoly::monomial(f.vars, OddMono(1) << p) *
                     OddPoly::monomial(f.vars, OddMono(1) << t);
        kernel = kernel * (factor + pt * Scalar::i());
    }
    return berezin(kernel * f, theta_block);
}

std::string OddPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        for (size_t v = 0; v < vars.size(); ++v)
            if (m & (OddMono(1) << v)) {
                if (!mono.empty()) mono += "*";
                mono += vars[v];
            }
        if (mono.empty()) os << c.str();
        else if (c.is_one()) os << mono;
        else os << c.str() << "*" << mono;
    }
    return os.str();
}

}  // namespace tvoa
