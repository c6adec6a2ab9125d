#include "tvoa/fock.hpp"

#include <algorithm>
#include <bit>

namespace tvoa {

std::size_t FockMono::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int j = 0; j < kMaxLatticeRank; ++j) h = h * 1099511628211ull + std::size_t(label[j] + 128);
    h = h * 1099511628211ull + theta;
    for (auto f : factors) h = h * 1099511628211ull + f;
    return h;
}

int FockMono::weight() const {
    int w = 0;
    for (auto f : factors) w += f_mode(f);
    return w;
}

void state_add(StateVec& v, StateId id, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(v.begin(), v.end(), id,
                               [](const auto& p, StateId x) { return p.first < x; });
    if (it != v.end() && it->first == id) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    } else {
        v.insert(it, {id, c});
    }
}

StateVec state_merge(const StateVec& a, const StateVec& b, const Scalar& bscale) {
    StateVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) {
            Scalar c = b[j].second * bscale;
            if (!c.is_zero()) r.emplace_back(b[j].first, c);
            ++j;
        } else {
            Scalar c = a[i].second + b[j].second * bscale;
            if (!c.is_zero()) r.emplace_back(a[i].first, c);
            ++i, ++j;
        }
    }
    return r;
}

StateVec state_scale(const StateVec& a, const Scalar& s) {
    StateVec r;
    if (s.is_zero()) return r;
    r.reserve(a.size());
    for (const auto& [id, c] : a) r.emplace_back(id, c * s);
    return r;
}

bool state_eq(const StateVec& a, const StateVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// specs

FockSpec vte_spec(int bc_rank) {
    FockSpec s;
    s.heis = {{"E", 0, 0}, {"sp", 1, 1}, {"sm", 1, 1}, {"pt", 0, 2}};
    s.pairing = Matrix(4, 4);
    s.pairing.at(0, 3) = Scalar(1);
    s.pairing.at(3, 0) = Scalar(1);
    s.pairing.at(1, 2) = Scalar(1);
    s.pairing.at(2, 1) = Scalar(-1);
    s.lattice_rank = 1;
    Element eVec(4);
    eVec[0] = Scalar(1);
    s.lattice_vectors = {eVec};
    s.cocycle_sign = Matrix(1, 1);
    s.cocycle_sign.at(0, 0) = Scalar(1);
    s.bc_rank = bc_rank;
    if (bc_rank == 1) s.bc_dirs = {{1, 2}};
    else if (bc_rank != 0) throw input_error("vte_spec supports bc_rank 0 or 1");
    return s;
}

FockSpec bc_spec(int n) {
    FockSpec s;
    for (int i = 0; i < n; ++i) {
        s.heis.push_back({"sp" + std::to_string(i + 1), 1, 1});
        s.heis.push_back({"sm" + std::to_string(i + 1), 1, 1});
    }
    s.pairing = Matrix(size_t(2 * n), size_t(2 * n));
    for (int i = 0; i < n; ++i) {
        s.pairing.at(size_t(2 * i), size_t(2 * i + 1)) = Scalar(1);
        s.pairing.at(size_t(2 * i + 1), size_t(2 * i)) = Scalar(-1);
    }
    s.lattice_rank = 0;
    s.cocycle_sign = Matrix(0, 0);
    s.bc_rank = n;
    for (int i = 0; i < n; ++i) s.bc_dirs.emplace_back(2 * i, 2 * i + 1);
    return s;
}

FockSpec lattice_spec(std::vector<BasisElem> heis, Matrix pairing,
                      std::vector<Element> lattice, Matrix cocycle_sign) {
    FockSpec s;
    s.heis = std::move(heis);
    s.pairing = std::move(pairing);
    s.lattice_rank = int(lattice.size());
    s.lattice_vectors = std::move(lattice);
    s.cocycle_sign = std::move(cocycle_sign);
    return s;
}

// ---------------------------------------------------------------------------
// module

FockModule::FockModule(FockSpec spec, int max_weight, int lattice_window)
    : spec_(std::move(spec)), max_weight_(max_weight), lattice_window_(lattice_window) {
    if (spec_.lattice_rank > kMaxLatticeRank) throw input_error("lattice rank too large");
    intern(FockMono{});
}

StateId FockModule::intern(const FockMono& m) const {
    auto& bucket = lookup_[m.hash()];
    for (StateId id : bucket)
        if (monos_[size_t(id)] == m) return id;
    monos_.push_back(m);
    StateId id = StateId(monos_.size()) - 1;
    bucket.push_back(id);
    return id;
}

const FockMono& FockModule::mono(StateId id) const { return monos_[size_t(id)]; }

StateId FockModule::vacuum_id() const { return 0; }

StateVec FockModule::vacuum() const { return {{0, Scalar(1)}}; }

int FockModule::weight_of(StateId id) const { return mono(id).weight(); }

int FockModule::label_of(StateId id, int j) const { return mono(id).label[size_t(j)]; }

void FockModule::check_weight(int w) const {
    if (w > max_weight_)
        throw truncation_error("state weight " + std::to_string(w) + " exceeds truncation " +
                               std::to_string(max_weight_));
}

void FockModule::check_label(const std::array<int8_t, kMaxLatticeRank>& l) const {
    for (int j = 0; j < spec_.lattice_rank; ++j)
        if (l[size_t(j)] > lattice_window_ || l[size_t(j)] < -lattice_window_)
            throw truncation_error("lattice label outside window");
}

Scalar FockModule::mode_rescale(int n, int gamma) const {
    if (!plain_) return Scalar(1);
    // tilde modes: alpha~_n(pt) = h alpha_n(pt); alpha~_n(sp/sm) = h alpha_n for n > 0
    const std::string& nm = spec_.heis[size_t(gamma)].name;
    if (nm == "pt") return Scalar::hbar();
    if (spec_.heis[size_t(gamma)].parity == 1 && n > 0) return Scalar::hbar();
    return Scalar(1);
}

int FockModule::koszul_to_slot(const FockMono& m, size_t slot) const {
    int odd = std::popcount(m.theta);
    for (size_t i = 0; i < slot; ++i)
        odd += spec_.heis[size_t(FockMono::f_gamma(m.factors[i]))].parity;
    return odd;
}

Scalar FockModule::pair_with_lattice(int gamma, const std::array<int8_t, kMaxLatticeRank>& label) const {
    Scalar r(0);
    for (int j = 0; j < spec_.lattice_rank; ++j) {
        if (label[size_t(j)] == 0) continue;
        Scalar p(0);
        const Element& L = spec_.lattice_vectors[size_t(j)];
        for (size_t i = 0; i < L.size(); ++i)
            if (!L[i].is_zero()) p += L[i] * spec_.pairing.at(size_t(gamma), i);
        r += p * Scalar(label[size_t(j)]);
    }
    return r;
}

void FockModule::alpha(int n, int gamma, StateId v, StateVec& out, const Scalar& c) const {
    const FockMono& m = mono(v);
    Scalar coeff = c * mode_rescale(n, gamma);
    int par = spec_.heis[size_t(gamma)].parity;
    if (n == 0) {
        // bc pairs: alpha_0(sp) = d/dtheta^c, alpha_0(sm) = d/dtheta^b
        for (int i = 0; i < spec_.bc_rank; ++i) {
            if (spec_.bc_dirs[size_t(i)].first == gamma) return theta_del(2 * i + 1, v, out, coeff);
            if (spec_.bc_dirs[size_t(i)].second == gamma) return theta_del(2 * i, v, out, coeff);
        }
        state_add(out, v, coeff * pair_with_lattice(gamma, m.label));
        return;
    }
    if (n < 0) {
        auto f = FockMono::pack(-n, gamma);
        check_weight(m.weight() - n);
        FockMono r = m;
        auto it = std::lower_bound(r.factors.begin(), r.factors.end(), f);
        size_t slot = size_t(it - r.factors.begin());
        if (par && it != r.factors.end() && *it == f) return;  // odd square
        int sign = par ? koszul_to_slot(m, slot) : 0;
        r.factors.insert(it, f);
        state_add(out, intern(r), (sign & 1) ? -coeff : coeff);
        return;
    }
    // annihilation: contract against matching creation factors
    for (size_t j = 0; j < m.factors.size(); ++j) {
        if (FockMono::f_mode(m.factors[j]) != n) continue;
        int g2 = FockMono::f_gamma(m.factors[j]);
        Scalar p = heis_pair(gamma, g2);
        if (p.is_zero()) continue;
        int sign = par ? koszul_to_slot(m, j) : 0;
        FockMono r = m;
        r.factors.erase(r.factors.begin() + long(j));
        Scalar t = coeff * p * Scalar(n);
        state_add(out, intern(r), (sign & 1) ? -t : t);
    }
}

void FockModule::alpha(int n, const Element& gamma, const StateVec& v, StateVec& out) const {
    for (size_t g = 0; g < gamma.size(); ++g) {
        if (gamma[g].is_zero()) continue;
        for (const auto& [id, c] : v) alpha(n, int(g), id, out, c * gamma[g]);
    }
}

void FockModule::theta_mul(int bit, StateId v, StateVec& out, const Scalar& c) const {
    const FockMono& m = mono(v);
    std::uint32_t b = std::uint32_t(1) << bit;
    if (m.theta & b) return;
    int below = std::popcount(m.theta & (b - 1));
    FockMono r = m;
    r.theta |= b;
    state_add(out, intern(r), (below & 1) ? -c : c);
}

void FockModule::theta_del(int bit, StateId v, StateVec& out, const Scalar& c) const {
    const FockMono& m = mono(v);
    std::uint32_t b = std::uint32_t(1) << bit;
    if (!(m.theta & b)) return;
    int below = std::popcount(m.theta & (b - 1));
    FockMono r = m;
    r.theta &= ~b;
    state_add(out, intern(r), (below & 1) ? -c : c);
}

void FockModule::bc_mode(char which, int i, int n, StateId v, StateVec& out, const Scalar& c) const {
    if (i >= spec_.bc_rank) throw input_error("bc pair out of range");
    auto [sp, sm] = spec_.bc_dirs[size_t(i)];
    if (which == 'b') {
        if (n == 0) return theta_del(2 * i + 1, v, out, c);  // [theta^c, b_0] = 1
        return alpha(n, sp, v, out, c);
    }
    if (which == 'c') {
        if (n == 0) return theta_del(2 * i, v, out, c);  // [theta^b, c_0] = 1
        return alpha(n, sm, v, out, -c);
    }
    throw input_error("bc_mode expects 'b' or 'c'");
}

void FockModule::theta_op(char which, int i, StateId v, StateVec& out, const Scalar& c) const {
    if (i >= spec_.bc_rank) throw input_error("bc pair out of range");
    if (which == 'b') return theta_mul(2 * i, v, out, c);
    if (which == 'c') return theta_mul(2 * i + 1, v, out, c);
    throw input_error("theta_op expects 'b' or 'c'");
}

// ---------------------------------------------------------------------------
// lattice vertex operator coefficients

namespace {

// multisets of creation factors (k, dir) with total mode sum cdeg; the
// coefficient of each multiset is prod mu_dir^mult / (k^mult * mult!)
struct PartEnum {
    struct Type { int k, dir; Scalar mu; };
    std::vector<Type> types;
    std::vector<std::uint16_t> acc;
    std::function<void(const std::vector<std::uint16_t>&, const Scalar&)> sink;

    PartEnum(const std::vector<std::pair<int, Scalar>>& dirs, int cdeg) {
        for (const auto& [d, mu] : dirs)
            for (int k = 1; k <= cdeg; ++k) types.push_back({k, d, mu});
    }
    void rec(size_t ti, int remaining, const Scalar& coeff) {
        if (remaining == 0) {
            sink(acc, coeff);
            return;
        }
        if (ti == types.size()) return;
        rec(ti + 1, remaining, coeff);
        const Type& t = types[ti];
        Scalar c = coeff;
        size_t base = acc.size();
        for (int m = 1; m * t.k <= remaining; ++m) {
            c = c * t.mu / (Scalar(t.k) * Scalar(m));
            acc.push_back(FockMono::pack(t.k, t.dir));
            rec(ti + 1, remaining - m * t.k, c);
        }
        acc.resize(base);
    }
};

}  // namespace

void FockModule::gamma_coeff(const std::vector<int>& mvec, int p, StateId v, StateVec& out,
                             const Scalar& c) const {
    if (int(mvec.size()) != spec_.lattice_rank) throw input_error("lattice vector rank mismatch");
    const FockMono& m0 = mono(v);
    // lambda in the gamma basis
    size_t dim = spec_.heis.size();
    Element lam(dim);
    for (int j = 0; j < spec_.lattice_rank; ++j)
        for (size_t i = 0; i < dim; ++i)
            lam[i] += Scalar(mvec[size_t(j)]) * spec_.lattice_vectors[size_t(j)][i];
    for (size_t i = 0; i < dim; ++i)
        if (!lam[i].is_zero() && spec_.heis[i].parity)
            throw input_error("lattice vector has odd components");

    // z^{alpha_0(lambda)} on the incoming label must be an integer power
    Scalar zpow(0);
    for (size_t i = 0; i < dim; ++i)
        if (!lam[i].is_zero()) zpow += lam[i] * pair_with_lattice(int(i), m0.label);
    if (!zpow.is_fast() || zpow.fast_den() != 1)
        throw degenerate_error("lattice operator has non-integer z-power");
    int pl = int(zpow.fast_num());

    // cocycle sign eps(m, label)
    int neg = 0;
    for (int i = 0; i < spec_.lattice_rank; ++i)
        for (int j = 0; j < spec_.lattice_rank; ++j)
            if (spec_.cocycle_sign.at(size_t(i), size_t(j)) == Scalar(-1))
                neg += mvec[size_t(i)] * m0.label[size_t(j)];
    Scalar base = (neg & 1) ? -c : c;

    // shifted label
    FockMono shifted = m0;
    for (int j = 0; j < spec_.lattice_rank; ++j) {
        int nl = shifted.label[size_t(j)] + mvec[size_t(j)];
        if (nl > 127 || nl < -127) throw truncation_error("lattice label overflow");
        shifted.label[size_t(j)] = int8_t(nl);
    }
    check_label(shifted.label);

    // annihilation stage: subsets of even factors with <lambda, gamma_f> != 0,
    // each hit contributing -<lambda, gamma_f> and z^{-mode}
    struct Hit {
        size_t pos;
        Scalar coeff;
        int mode;
    };
    std::vector<Hit> hits;
    for (size_t jf = 0; jf < shifted.factors.size(); ++jf) {
        int g = FockMono::f_gamma(shifted.factors[jf]);
        if (spec_.heis[size_t(g)].parity) continue;
        Scalar pr(0);
        for (size_t i = 0; i < dim; ++i)
            if (!lam[i].is_zero()) pr += lam[i] * heis_pair(int(i), g);
        if (pr.is_zero()) continue;
        hits.push_back({jf, -pr, FockMono::f_mode(shifted.factors[jf])});
    }

    // creation directions for lambda
    std::vector<std::pair<int, Scalar>> dirs;
    for (size_t i = 0; i < dim; ++i)
        if (!lam[i].is_zero()) dirs.emplace_back(int(i), lam[i]);

    size_t nh = hits.size();
    for (std::uint32_t sub = 0; sub < (std::uint32_t(1) << nh); ++sub) {
        Scalar acoeff = base;
        int adeg = 0;
        FockMono stripped = shifted;
        // erase from the back so positions stay valid
        for (int t = int(nh) - 1; t >= 0; --t) {
            if (!(sub & (std::uint32_t(1) << t))) continue;
            acoeff *= hits[size_t(t)].coeff;
            adeg += hits[size_t(t)].mode;
            stripped.factors.erase(stripped.factors.begin() + long(hits[size_t(t)].pos));
        }
        int cdeg = p + adeg - pl;
        if (cdeg < 0) continue;
        if (stripped.weight() + cdeg > max_weight_)
            throw truncation_error("vertex operator output exceeds truncation");
        auto sink = [&](const std::vector<std::uint16_t>& fs, const Scalar& cc) {
            FockMono r = stripped;
            for (auto f : fs) {
                auto it = std::lower_bound(r.factors.begin(), r.factors.end(), f);
                r.factors.insert(it, f);
            }
            state_add(out, intern(r), acoeff * cc);
        };
        if (cdeg == 0) {
            sink({}, Scalar(1));
        } else {
            PartEnum pe(dirs, cdeg);
            pe.sink = sink;
            pe.rec(0, cdeg, Scalar(1));
        }
    }
}

// ---------------------------------------------------------------------------
// pairing, slices, characters

Scalar FockModule::state_pairing(StateId u, StateId v) const {
    const FockMono& mu = mono(u);
    if (mu.factors.empty()) {
        const FockMono& mv = mono(v);
        return (mu.label == mv.label && mu.theta == mv.theta && mv.factors.empty())
                   ? Scalar(1)
                   : Scalar(0);
    }
    // peel the first factor of u and apply its annihilator to v
    FockMono rest = mu;
    std::uint16_t f = rest.factors.front();
    rest.factors.erase(rest.factors.begin());
    StateVec image;
    alpha(FockMono::f_mode(f), FockMono::f_gamma(f), v, image, Scalar(1));
    StateId rid = intern(rest);
    Scalar r(0);
    for (const auto& [id, c] : image) r += c * state_pairing(rid, id);
    return r;
}

Scalar FockModule::state_pairing(const StateVec& u, const StateVec& v) const {
    Scalar r(0);
    for (const auto& [iu, cu] : u)
        for (const auto& [iv, cv] : v) r += cu * cv * state_pairing(iu, iv);
    return r;
}

const std::vector<StateId>& FockModule::slice(int weight,
                                              std::array<int8_t, kMaxLatticeRank> label,
                                              std::uint32_t theta) const {
    std::uint64_t key = std::uint64_t(std::uint32_t(weight)) << 40 | std::uint64_t(theta) << 32;
    for (int j = 0; j < kMaxLatticeRank; ++j)
        key |= std::uint64_t(std::uint8_t(label[size_t(j)])) << (8 * j);
    auto it = slices_.find(key);
    if (it != slices_.end()) return it->second;

    std::vector<StateId> ids;
    // enumerate factor multisets of total weight `weight`, factors ascending
    std::vector<std::uint16_t> acc;
    std::function<void(int, std::uint16_t)> rec = [&](int remaining, std::uint16_t minf) {
        if (remaining == 0) {
            FockMono m;
            m.label = label;
            m.theta = theta;
            m.factors = acc;
            ids.push_back(intern(m));
            return;
        }
        for (int n = 1; n <= remaining; ++n)
            for (size_t g = 0; g < spec_.heis.size(); ++g) {
                std::uint16_t f = FockMono::pack(n, int(g));
                if (f < minf) continue;
                if (spec_.heis[g].parity && !acc.empty() && acc.back() == f) continue;
                acc.push_back(f);
                rec(remaining - n, f);
                acc.pop_back();
            }
    };
    rec(weight, 0);
    std::sort(ids.begin(), ids.end());
    return slices_.emplace(key, std::move(ids)).first->second;
}

std::vector<long long> FockModule::character(int wmax,
                                             std::array<int8_t, kMaxLatticeRank> label,
                                             std::uint32_t theta) const {
    std::vector<long long> dims;
    for (int w = 0; w <= wmax; ++w) dims.push_back((long long)slice(w, label, theta).size());
    return dims;
}

}  // namespace tvoa
