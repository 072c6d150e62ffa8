#include "gtlab/completion.hpp"

#include <sstream>
#include <vector>

namespace gtlab {

RhoPoly rho_poly_mul(const RhoPoly& a, const RhoPoly& b, int trunc) {
    RhoPoly out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            unsigned k = ka + kb;
            if (k > static_cast<unsigned>(trunc)) continue;
            Rat& slot = out[k];
            slot += ca * cb;
            if (slot == 0) out.erase(k);
        }
    }
    return out;
}

RhoPoly rho_poly_exp_of(long rate, int trunc) {
    RhoPoly out;
    Rat c(1);
    out[0] = c;
    for (int k = 1; k <= trunc; ++k) {
        c = c * rate / k;
        if (c != 0) out[static_cast<unsigned>(k)] = c;
    }
    return out;
}

ClassicalLoopSum& ClassicalLoopSum::add(const CyclicWord& w, const Rat& q) {
    if (q == 0) return *this;
    auto [it, inserted] = terms_.emplace(w, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

ClassicalLoopSum ClassicalLoopSum::operator+(const ClassicalLoopSum& rhs) const {
    ClassicalLoopSum out = *this;
    for (const auto& [w, q] : rhs.terms_) out.add(w, q);
    return out;
}

ClassicalLoopSum ClassicalLoopSum::operator-(const ClassicalLoopSum& rhs) const {
    ClassicalLoopSum out = *this;
    for (const auto& [w, q] : rhs.terms_) out.add(w, -q);
    return out;
}

ClassicalLoopSum ClassicalLoopSum::scaled(const Rat& q) const {
    ClassicalLoopSum out(n_, N_);
    if (q == 0) return out;
    for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * q);
    return out;
}

ClassicalLoopSum ClassicalLoopSum::without_trivial() const {
    ClassicalLoopSum out(n_, N_);
    for (const auto& [w, q] : terms_)
        if (!w.empty()) out.terms_.emplace(w, q);
    return out;
}

CompletedLoopSum& CompletedLoopSum::add(const FramedClass& c, unsigned rho_k,
                                        const Rat& q) {
    if (q == 0 || rho_k > static_cast<unsigned>(N_)) return *this;
    RhoPoly& p = terms_[c];
    Rat& slot = p[rho_k];
    slot += q;
    if (slot == 0) p.erase(rho_k);
    if (p.empty()) terms_.erase(c);
    return *this;
}

CompletedLoopSum& CompletedLoopSum::add_poly(const FramedClass& c,
                                             const RhoPoly& p) {
    for (const auto& [k, q] : p) add(c, k, q);
    return *this;
}

CompletedLoopSum CompletedLoopSum::operator+(const CompletedLoopSum& rhs) const {
    CompletedLoopSum out = *this;
    for (const auto& [c, p] : rhs.terms_) out.add_poly(c, p);
    return out;
}

CompletedLoopSum CompletedLoopSum::operator-(const CompletedLoopSum& rhs) const {
    return *this + rhs.scaled(Rat(-1));
}

CompletedLoopSum CompletedLoopSum::scaled(const Rat& q) const {
    CompletedLoopSum out(n_, N_);
    if (q == 0) return out;
    for (const auto& [c, p] : terms_) {
        RhoPoly sp;
        for (const auto& [k, v] : p) sp.emplace(k, v * q);
        out.terms_.emplace(c, std::move(sp));
    }
    return out;
}

CompletedLoopSum CompletedLoopSum::without_trivial() const {
    CompletedLoopSum out(n_, N_);
    for (const auto& [c, p] : terms_)
        if (!c.word.empty()) out.terms_.emplace(c, p);
    return out;
}

CyclicSeries theta(const CompletedLoopSum& u, const Framing& f) {
    CyclicSeries out(u.gens(), u.trunc());
    for (const auto& [c, poly] : u.terms()) {
        TruncSeries m = magnus_expand(c.word.representative(), u.gens(), u.trunc());
        RhoPoly e = rho_poly_exp_of(rot_f(c, f), u.trunc());
        for (const auto& [k, q] : poly) {
            for (const auto& [ke, qe] : e) {
                unsigned kk = k + ke;
                if (kk > static_cast<unsigned>(u.trunc())) continue;
                for (const auto& [mono, mc] : m.terms()) {
                    Mono key = mono;
                    key.rho += kk;
                    out.add_term(std::move(key), q * qe * mc);
                }
            }
        }
    }
    return out;
}

CyclicSeries theta_classical(const ClassicalLoopSum& u) {
    CyclicSeries out(u.gens(), u.trunc());
    for (const auto& [w, q] : u.terms()) {
        TruncSeries m = magnus_expand(w.representative(), u.gens(), u.trunc());
        for (const auto& [mono, mc] : m.terms()) out.add_term(mono, q * mc);
    }
    return out;
}

CompletedLoopSum s_f_lift(const ClassicalLoopSum& u, const Framing& f) {
    CompletedLoopSum out(u.gens(), u.trunc());
    for (const auto& [w, q] : u.terms()) out.add(s_f(w, f), 0, q);
    return out;
}

ClassicalLoopSum phi_forget(const CompletedLoopSum& u) {
    ClassicalLoopSum out(u.gens(), u.trunc());
    for (const auto& [c, poly] : u.terms()) {
        auto it = poly.find(0);
        if (it != poly.end()) out.add(c.word, it->second);
    }
    return out;
}

namespace {

// Coefficients of t^m, m = 0..N, in (log(1+t))^k.
std::vector<Rat> log_power_coeffs(unsigned k, int N) {
    std::vector<Rat> base(N + 1, Rat(0));
    for (int m = 1; m <= N; ++m) base[m] = Rat(m % 2 == 1 ? 1 : -1, m);
    std::vector<Rat> acc(N + 1, Rat(0));
    acc[0] = 1;
    for (unsigned i = 0; i < k; ++i) {
        std::vector<Rat> next(N + 1, Rat(0));
        for (int a = 0; a <= N; ++a) {
            if (acc[a] == 0) continue;
            for (int b = 1; a + b <= N; ++b)
                next[a + b] += acc[a] * base[b];
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

LoopSum rho_expand(const CompletedLoopSum& u) {
    const int N = u.trunc();
    // Pascal triangle up to N.
    std::vector<std::vector<Rat>> C(N + 1, std::vector<Rat>(N + 1, Rat(0)));
    for (int m = 0; m <= N; ++m) {
        C[m][0] = 1;
        for (int j = 1; j <= m; ++j)
            C[m][j] = C[m - 1][j - 1] + (j <= m - 1 ? C[m - 1][j] : Rat(0));
    }
    LoopSum out;
    for (const auto& [c, poly] : u.terms()) {
        for (const auto& [k, q] : poly) {
            if (k == 0) {
                out.add(c, q);
                continue;
            }
            std::vector<Rat> lp = log_power_coeffs(k, N);
            // rho^k = sum_m lp[m] (r-1)^m; (r-1)^m c = sum_j C(m,j)(-1)^(m-j) r^j c.
            for (int m = static_cast<int>(k); m <= N; ++m) {
                if (lp[m] == 0) continue;
                for (int j = 0; j <= m; ++j) {
                    Rat coeff = q * lp[m] * C[m][j];
                    if ((m - j) % 2 == 1) coeff = -coeff;
                    out.add(r_action(c, j), coeff);
                }
            }
        }
    }
    return out;
}

CompletedLoopSum completed_bracket(const CompletedLoopSum& a,
                                   const CompletedLoopSum& b, LoopAlgebra& alg) {
    CompletedLoopSum out(a.gens(), a.trunc());
    for (const auto& [ca, pa] : a.terms()) {
        for (const auto& [cb, pb] : b.terms()) {
            RhoPoly p = rho_poly_mul(pa, pb, a.trunc());
            if (p.empty()) continue;
            LoopSum br = alg.bracket_classes(ca, cb);
            for (const auto& [c, q] : br.terms()) {
                RhoPoly scaled;
                for (const auto& [k, v] : p) scaled.emplace(k, v * q);
                out.add_poly(c, scaled);
            }
        }
    }
    return out;
}

TensorLoopSum completed_cobracket(const CompletedLoopSum& a, LoopAlgebra& alg) {
    return alg.cobracket(rho_expand(a));
}

CompletedLoopSum eps_tensor_left(const TensorLoopSum& t, const Framing& f,
                                 int n_gens, int trunc) {
    CompletedLoopSum out(n_gens, trunc);
    for (const auto& [key, q] : t.terms()) {
        RhoPoly e = rho_poly_exp_of(rot_f(key.first, f), trunc);
        for (auto& [k, v] : e) v *= q;
        out.add_poly(key.second, e);
    }
    return out;
}

std::string format_completed(const CompletedLoopSum& u) {
    if (!u.has_terms()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [c, poly] : u.terms()) {
        for (const auto& [k, q] : poly) {
            if (!first) out << " + ";
            first = false;
            out << rat_str(q);
            if (k > 0) {
                out << " * rho";
                if (k > 1) out << "^" << k;
            }
            out << " * " << format_loop(c);
        }
    }
    return out.str();
}

std::string format_classical(const ClassicalLoopSum& u) {
    if (!u.has_terms()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, q] : u.terms()) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(q) << " * |" << format_word(w) << "|";
    }
    return out.str();
}

}  // namespace gtlab
