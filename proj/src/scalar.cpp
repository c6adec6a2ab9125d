#include "tvoa/scalar.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <sstream>

namespace tvoa {

// ---------------------------------------------------------------------------
// variable registry

namespace {
std::vector<std::string> g_var_names = {"h"};
}

const std::string& scalar_var_name(int v) { return g_var_names.at(size_t(v)); }

int scalar_register_var(const std::string& name) {
    for (size_t i = 0; i < g_var_names.size(); ++i)
        if (g_var_names[i] == name) return int(i);
    if (g_var_names.size() >= 8) throw scalar_error("too many scalar variables");
    g_var_names.push_back(name);
    return int(g_var_names.size()) - 1;
}

Mono mono_var(int v, int e) {
    if (v < 0 || v >= 8 || e < 0 || e > 255) throw scalar_error("bad monomial");
    return Mono(e) << (8 * v);
}

// ---------------------------------------------------------------------------
// Gauss

std::string Gauss::str() const {
    std::ostringstream os;
    auto imag = [&]() {
        if (im == 1) os << "i";
        else if (im == -1) os << "-i";
        else os << im << "*i";
    };
    if (im.is_zero()) {
        os << re;
    } else if (re.is_zero()) {
        imag();
    } else {
        os << re;
        if (im > 0) os << "+";
        imag();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(Gauss c) {
    Poly p;
    if (!c.is_zero()) p.terms.emplace_back(0, std::move(c));
    return p;
}

Poly Poly::variable(int v) {
    Poly p;
    p.terms.emplace_back(mono_var(v), Gauss(BigRat(1)));
    return p;
}

Gauss Poly::constant_value() const {
    if (terms.empty()) return Gauss(BigRat(0));
    if (terms.size() == 1 && terms[0].first == 0) return terms[0].second;
    throw scalar_error("polynomial is not constant");
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
        if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
            r.terms.push_back(terms[i++]);
        } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
            r.terms.push_back(o.terms[j++]);
        } else {
            Gauss c = terms[i].second + o.terms[j].second;
            if (!c.is_zero()) r.terms.emplace_back(terms[i].first, std::move(c));
            ++i, ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& a : terms) {
        Poly part;
        part.terms.reserve(o.terms.size());
        for (const auto& b : o.terms)
            part.terms.emplace_back(mono_mul(a.first, b.first), a.second * b.second);
        std::sort(part.terms.begin(), part.terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        r = r + part;
    }
    return r;
}

int Poly::degree(int v) const {
    int d = 0;
    for (const auto& t : terms) d = std::max(d, mono_exp(t.first, v));
    return d;
}

bool Poly::try_divide(const Poly& d, Poly& q) const {
    if (d.is_zero()) throw scalar_error("polynomial division by zero");
    Poly rem = *this;
    q = Poly{};
    const auto& lead = d.terms.back();
    while (!rem.is_zero()) {
        const auto& rl = rem.terms.back();
        if (!mono_divides(lead.first, rl.first)) return false;
        Poly t;
        t.terms.emplace_back(mono_div(rl.first, lead.first), rl.second / lead.second);
        q = q + t;
        rem = rem - t * d;
    }
    return true;
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        std::string cs = it->second.str();
        if (!first) os << " + ";
        first = false;
        std::string vars;
        for (int v = 0; v < 8; ++v) {
            int e = mono_exp(it->first, v);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += scalar_var_name(v);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            os << cs;
        } else {
            bool needs_parens = cs.find('+') != std::string::npos ||
                                cs.find('-') != std::string::npos;
            if (cs == "1") os << vars;
            else if (cs == "-1") os << "-" << vars;
            else if (needs_parens && !(cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                                       cs.find('-', 1) == std::string::npos))
                os << "(" << cs << ")*" << vars;
            else os << cs << "*" << vars;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

bool fits64(__int128 v) {
    return v <= __int128(INT64_MAX / 2) && v >= __int128(INT64_MIN / 2);
}

}  // namespace

Scalar::Scalar(long long n, long long d) : n_(n), d_(d) {
    if (d_ == 0) throw scalar_error("division by zero");
    if (d_ < 0) { n_ = -n_; d_ = -d_; }
    long long g = gcd_ll(n_, d_);
    if (g > 1) { n_ /= g; d_ /= g; }
}

Scalar Scalar::of_rat(const BigRat& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (num >= INT64_MIN / 2 && num <= INT64_MAX / 2 && den <= INT64_MAX / 2) {
        Scalar s;
        s.n_ = num.convert_to<long long>();
        s.d_ = den.convert_to<long long>();
        return s;
    }
    return make_heavy(Poly::constant(Gauss(r)), Poly::constant(Gauss(BigRat(1))));
}

Scalar Scalar::of_gauss(const Gauss& g) {
    if (g.is_real()) return of_rat(g.re);
    return make_heavy(Poly::constant(g), Poly::constant(Gauss(BigRat(1))));
}

Scalar Scalar::i() { return of_gauss(Gauss(BigRat(0), BigRat(1))); }

Scalar Scalar::i_pow(long long k) {
    k = ((k % 4) + 4) % 4;
    switch (k) {
        case 0: return Scalar(1);
        case 1: return i();
        case 2: return Scalar(-1);
        default: return -i();
    }
}

Scalar Scalar::variable(int v) {
    return make_heavy(Poly::variable(v), Poly::constant(Gauss(BigRat(1))));
}

bool Scalar::is_rational() const {
    if (!heavy_) return true;
    return heavy_->num.is_constant() && heavy_->den.is_constant() &&
           heavy_->num.constant_value().is_real() && heavy_->den.constant_value().is_real();
}

ScalarHeavy Scalar::lift() const {
    if (heavy_) return *heavy_;
    return {Poly::constant(Gauss(BigRat(n_))), Poly::constant(Gauss(BigRat(d_)))};
}

// Normalize: strip common monomial factor, attempt exact division, divide
// through by integer content, make the denominator's leading coefficient 1.
Scalar Scalar::make_heavy(Poly num, Poly den) {
    if (den.is_zero()) throw scalar_error("division by zero");
    if (num.is_zero()) return Scalar(0);

    // common monomial factor
    auto common_mono = [](const Poly& p) {
        Mono m = p.terms[0].first;
        for (const auto& t : p.terms) {
            Mono r = 0;
            for (int v = 0; v < 8; ++v)
                r |= mono_var(v, std::min(mono_exp(m, v), mono_exp(t.first, v)));
            m = r;
        }
        return m;
    };
    Mono cm = 0;
    {
        Mono mn = common_mono(num), md = common_mono(den);
        for (int v = 0; v < 8; ++v) cm |= mono_var(v, std::min(mono_exp(mn, v), mono_exp(md, v)));
    }
    if (cm != 0) {
        for (auto& t : num.terms) t.first = mono_div(t.first, cm);
        for (auto& t : den.terms) t.first = mono_div(t.first, cm);
    }

    // exact polynomial division if possible
    Poly q;
    if (num.try_divide(den, q)) {
        num = std::move(q);
        den = Poly::constant(Gauss(BigRat(1)));
    } else if (den.try_divide(num, q) && !q.is_constant()) {
        // num/den = 1/q
        den = std::move(q);
        num = Poly::constant(Gauss(BigRat(1)));
    }

    // normalize leading denominator coefficient to 1
    Gauss lead = den.terms.back().second;
    if (!(lead == Gauss(BigRat(1)))) {
        for (auto& t : num.terms) t.second = t.second / lead;
        for (auto& t : den.terms) t.second = t.second / lead;
    }

    // fast-path demotion
    if (num.is_constant() && den.is_constant()) {
        Gauss nc = num.constant_value(), dc = den.constant_value();
        Gauss v = nc / dc;
        if (v.is_real() && denominator(v.re) <= INT64_MAX / 2 && numerator(v.re) >= INT64_MIN / 2 &&
            numerator(v.re) <= INT64_MAX / 2) {
            Scalar s;
            s.n_ = numerator(v.re).convert_to<long long>();
            s.d_ = denominator(v.re).convert_to<long long>();
            return s;
        }
    }
    Scalar s;
    s.n_ = 0;
    s.d_ = 1;
    s.heavy_ = std::make_shared<const ScalarHeavy>(ScalarHeavy{std::move(num), std::move(den)});
    return s;
}

Scalar heavy_add(const Scalar& a, const Scalar& b, int sign) {
    ScalarHeavy x = a.lift(), y = b.lift();
    Poly num = x.num * y.den;
    Poly t = y.num * x.den;
    num = sign > 0 ? num + t : num - t;
    return Scalar::make_heavy(std::move(num), x.den * y.den);
}

Scalar heavy_mul(const Scalar& a, const Scalar& b) {
    ScalarHeavy x = a.lift(), y = b.lift();
    return Scalar::make_heavy(x.num * y.num, x.den * y.den);
}

Scalar heavy_div(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw scalar_error("division by zero");
    ScalarHeavy x = a.lift(), y = b.lift();
    return Scalar::make_heavy(x.num * y.den, x.den * y.num);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!heavy_ && !o.heavy_) {
        __int128 n = __int128(n_) * o.d_ + __int128(o.n_) * d_;
        __int128 d = __int128(d_) * o.d_;
        if (fits64(n) && fits64(d)) {
            long long nn = (long long)n, dd = (long long)d;
            long long g = gcd_ll(nn, dd);
            Scalar s;
            s.n_ = g ? nn / g : 0;
            s.d_ = g ? dd / g : 1;
            if (s.n_ == 0) s.d_ = 1;
            return s;
        }
    }
    return heavy_add(*this, o, +1);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (!heavy_ && !o.heavy_) {
        __int128 n = __int128(n_) * o.d_ - __int128(o.n_) * d_;
        __int128 d = __int128(d_) * o.d_;
        if (fits64(n) && fits64(d)) {
            long long nn = (long long)n, dd = (long long)d;
            long long g = gcd_ll(nn, dd);
            Scalar s;
            s.n_ = g ? nn / g : 0;
            s.d_ = g ? dd / g : 1;
            if (s.n_ == 0) s.d_ = 1;
            return s;
        }
    }
    return heavy_add(*this, o, -1);
}

Scalar Scalar::operator-() const {
    if (!heavy_) {
        Scalar s;
        s.n_ = -n_;
        s.d_ = d_;
        return s;
    }
    return Scalar(0) - *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (!heavy_ && !o.heavy_) {
        if (n_ == 0 || o.n_ == 0) return Scalar(0);
        long long g1 = gcd_ll(n_, o.d_), g2 = gcd_ll(o.n_, d_);
        __int128 n = __int128(n_ / g1) * (o.n_ / g2);
        __int128 d = __int128(d_ / g2) * (o.d_ / g1);
        if (fits64(n) && fits64(d)) {
            Scalar s;
            s.n_ = (long long)n;
            s.d_ = (long long)d;
            return s;
        }
    }
    return heavy_mul(*this, o);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw scalar_error("division by zero");
    if (!heavy_ && !o.heavy_) {
        Scalar inv;
        inv.n_ = o.n_ < 0 ? -o.d_ : o.d_;
        inv.d_ = o.n_ < 0 ? -o.n_ : o.n_;
        return *this * inv;
    }
    return heavy_div(*this, o);
}

Scalar Scalar::inv() const { return Scalar(1) / *this; }

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!heavy_ && !o.heavy_) return n_ == o.n_ && d_ == o.d_;
    // cross multiply, exact
    ScalarHeavy x = lift(), y = o.lift();
    return (x.num * y.den - y.num * x.den).is_zero();
}

Scalar Scalar::subst(int v, const Scalar& value) const {
    if (!heavy_) return *this;
    auto eval = [&](const Poly& p) {
        Scalar acc(0);
        for (const auto& t : p.terms) {
            Scalar c = Scalar::of_gauss(t.second);
            Scalar term = c;
            for (int w = 0; w < 8; ++w) {
                int e = mono_exp(t.first, w);
                if (!e) continue;
                Scalar base = (w == v) ? value : Scalar::variable(w);
                term *= base.pow(e);
            }
            acc += term;
        }
        return acc;
    };
    return eval(heavy_->num) / eval(heavy_->den);
}

std::string Scalar::str() const {
    if (!heavy_) {
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }
    const Poly& num = heavy_->num;
    const Poly& den = heavy_->den;
    if (den.is_constant() && den.constant_value() == Gauss(BigRat(1))) {
        if (num.terms.size() == 1) return num.str();
        return "(" + num.str() + ")";
    }
    std::string ns = num.terms.size() > 1 ? "(" + num.str() + ")" : num.str();
    std::string ds = den.terms.size() > 1 ? "(" + den.str() + ")" : den.str();
    return ns + "/" + ds;
}

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;
    explicit Parser(const std::string& t) : s(t) {}
    void skip() { while (p < s.size() && s[p] == ' ') ++p; }
    bool eat(char c) {
        skip();
        if (p < s.size() && s[p] == c) { ++p; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw scalar_error("scalar parse error at " + std::to_string(p) + ": " + why);
    }

    Scalar parse_sum() {
        skip();
        bool neg = eat('-');
        if (!neg) eat('+');
        Scalar v = parse_product();
        if (neg) v = -v;
        while (true) {
            skip();
            if (p >= s.size() || (s[p] != '+' && s[p] != '-')) return v;
            bool minus = s[p] == '-';
            ++p;
            Scalar t = parse_product();
            v = minus ? v - t : v + t;
        }
    }

    Scalar parse_product() {
        Scalar v = parse_factor();
        while (true) {
            skip();
            if (eat('*')) { v *= parse_factor(); continue; }
            if (p < s.size() && s[p] == '/') {
                // lookahead: only treat as division inside a product chain
                ++p;
                v /= parse_factor();
                continue;
            }
            return v;
        }
    }

    Scalar parse_factor() {
        skip();
        if (eat('(')) {
            Scalar v = parse_sum();
            if (!eat(')')) fail("missing )");
            return parse_power(v);
        }
        if (p < s.size() && (std::isdigit(s[p]))) {
            size_t q = p;
            while (q < s.size() && std::isdigit(s[q])) ++q;
            BigInt n(s.substr(p, q - p));
            p = q;
            Scalar v = Scalar::of_rat(BigRat(n));
            return parse_power(v);
        }
        if (p < s.size() && (std::isalpha(s[p]))) {
            size_t q = p;
            while (q < s.size() && (std::isalnum(s[q]) || s[q] == '_')) ++q;
            std::string name = s.substr(p, q - p);
            p = q;
            Scalar v;
            if (name == "i") v = Scalar::i();
            else v = Scalar::variable(scalar_register_var(name));
            return parse_power(v);
        }
        if (eat('-')) return -parse_factor();
        fail("unexpected character");
    }

    Scalar parse_power(Scalar base) {
        skip();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            size_t q = p;
            while (q < s.size() && std::isdigit(s[q])) ++q;
            if (q == p) fail("missing exponent");
            long long e = std::stoll(s.substr(p, q - p));
            p = q;
            return base.pow(neg ? -e : e);
        }
        return base;
    }
};

}  // namespace

Scalar scalar_parse(const std::string& text) {
    Parser pr(text);
    Scalar v = pr.parse_sum();
    pr.skip();
    if (pr.p != text.size()) pr.fail("trailing input");
    return v;
}

std::size_t Scalar::hash() const {
    if (!heavy_) return std::hash<long long>()(n_) * 1000003u ^ std::hash<long long>()(d_);
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& t : heavy_->num.terms) {
        h ^= std::hash<Mono>()(t.first) + 0x9e3779b9 + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>()(t.second.str());
    }
    for (const auto& t : heavy_->den.terms) h ^= std::hash<Mono>()(t.first) * 31;
    return h;
}

}  // namespace tvoa
