#include "gtlab/derivations.hpp"

#include <algorithm>

namespace gtlab {

TruncSeries strip_pure_powers(const TruncSeries& s, int i) {
    TruncSeries out(s.gens(), s.trunc());
    for (const auto& [m, c] : s.terms()) {
        bool pure = !m.word.empty() &&
                    std::all_of(m.word.begin(), m.word.end(),
                                [&](std::uint8_t l) { return l == i; });
        if (!pure) out.add_term(m, c);
    }
    return out;
}

TangentialDerivation::TangentialDerivation(std::vector<TruncSeries> components) {
    for (std::size_t i = 0; i < components.size(); ++i) {
        TruncSeries c = strip_pure_powers(components[i], static_cast<int>(i) + 1);
        if (!c.rho_free()) throw InputError("derivation components must be rho-free");
        if (!is_lie_element(c))
            throw InputError("derivation component " + std::to_string(i + 1) +
                             " fails the Lie test");
        components[i] = std::move(c);
    }
    a_ = std::move(components);
}

bool TangentialDerivation::is_zero() const {
    for (const auto& c : a_)
        if (!c.is_zero()) return false;
    return true;
}

TruncSeries TangentialDerivation::apply(const TruncSeries& s) const {
    const int n = s.gens();
    const int N = s.trunc();
    TruncSeries out(n, N);
    for (const auto& [m, c] : s.terms()) {
        for (std::size_t pos = 0; pos < m.word.size(); ++pos) {
            int g = m.word[pos];
            // prefix * [X_g, a_g] * suffix
            const TruncSeries& ag = a_.at(g - 1);
            TruncSeries xg = TruncSeries::gen(g, n, N);
            TruncSeries mid = xg * ag - ag * xg;
            TruncSeries pre(n, N);
            {
                Mono pm;
                pm.word.assign(m.word.begin(), m.word.begin() + pos);
                pm.rho = m.rho;
                pre.add_term(std::move(pm), c);
            }
            TruncSeries suf(n, N);
            {
                Mono sm;
                sm.word.assign(m.word.begin() + pos + 1, m.word.end());
                suf.add_term(std::move(sm), Rat(1));
            }
            out = out + pre * mid * suf;
        }
    }
    return out;
}

CyclicSeries TangentialDerivation::apply(const CyclicSeries& s) const {
    // Lift each necklace to a word, apply, and re-project; well defined
    // because derivations commute with cyclic permutation in the trace.
    TruncSeries lift(s.gens(), s.trunc());
    for (const auto& [m, c] : s.terms()) lift.add_term(m, c);
    return cyclic_project(apply(lift));
}

TangentialDerivation TangentialDerivation::operator+(
    const TangentialDerivation& rhs) const {
    std::vector<TruncSeries> comps;
    for (std::size_t i = 0; i < a_.size(); ++i) comps.push_back(a_[i] + rhs.a_[i]);
    return TangentialDerivation(std::move(comps));
}

TangentialDerivation TangentialDerivation::scaled(const Rat& q) const {
    std::vector<TruncSeries> comps;
    for (const auto& c : a_) comps.push_back(c.scaled(q));
    return TangentialDerivation(std::move(comps));
}

TangentialDerivation tder_bracket(const TangentialDerivation& d,
                                  const TangentialDerivation& e) {
    std::vector<TruncSeries> comps;
    for (int i = 1; i <= d.gens(); ++i) {
        TruncSeries di = d.component(i);
        TruncSeries ei = e.component(i);
        comps.push_back(d.apply(ei) - e.apply(di) + (di * ei - ei * di));
    }
    return TangentialDerivation(std::move(comps));
}

CyclicSeries divergence(const TangentialDerivation& d) {
    if (d.gens() == 0) return CyclicSeries(0, 0);
    const int n = d.gens();
    const int N = d.trunc();
    TruncSeries acc(n, N);
    for (int k = 1; k <= n; ++k)
        acc = acc + TruncSeries::gen(k, n, N) * right_partial(d.component(k), k);
    return cyclic_project(acc);
}

CyclicSeries es_trace(const std::vector<TruncSeries>& components, int degree_m) {
    if (components.empty()) return CyclicSeries(0, 0);
    const int n = static_cast<int>(components.size());
    const int N = components[0].trunc();
    TruncSeries acc(n, N);
    for (int i = 1; i <= n; ++i) {
        const TruncSeries& ai = components[i - 1];
        for (const auto& [m, c] : ai.terms()) {
            if (m.rho != 0) throw InputError("es_trace requires rho-free input");
            if (m.degree() != static_cast<std::size_t>(degree_m) + 1)
                throw InputError("es_trace requires homogeneous degree m+1 input");
            if (m.word.empty() || m.word.front() != i) continue;
            Mono rest;
            rest.word.assign(m.word.begin() + 1, m.word.end());
            acc.add_term(std::move(rest), c);
        }
    }
    return cyclic_project(acc);
}

TangentialSolve solve_tangential(const std::vector<TruncSeries>& rhs) {
    TangentialSolve result;
    if (rhs.empty()) {
        result.solution = TangentialDerivation();
        return result;
    }
    const int n = static_cast<int>(rhs.size());
    const int N = rhs[0].trunc();
    std::vector<TruncSeries> comps;
    for (int i = 1; i <= n; ++i) {
        const TruncSeries& S = rhs[i - 1];
        if (!S.rho_free()) {
            result.error = "component " + std::to_string(i) + " is not rho-free";
            return result;
        }
        // a(w) is recovered by rotating trailing X_i letters to the front:
        // S(X_i w) = a(w) - a(X_i w') when w = w' X_i, else a(w) = S(X_i w).
        TruncSeries a(n, N);
        std::map<Mono, Rat> memo;
        auto coeff_a = [&](const Mono& w, auto&& self) -> Rat {
            auto it = memo.find(w);
            if (it != memo.end()) return it->second;
            bool pure = !w.word.empty() &&
                        std::all_of(w.word.begin(), w.word.end(),
                                    [&](std::uint8_t l) { return l == i; });
            Rat val(0);
            if (!pure) {
                Mono xi_w;
                xi_w.word.push_back(static_cast<std::uint8_t>(i));
                xi_w.word.insert(xi_w.word.end(), w.word.begin(), w.word.end());
                val = S.coeff(xi_w);
                if (!w.word.empty() && w.word.back() == i) {
                    Mono rot;
                    rot.word.push_back(static_cast<std::uint8_t>(i));
                    rot.word.insert(rot.word.end(), w.word.begin(),
                                    w.word.end() - 1);
                    val += self(rot, self);
                }
            }
            memo.emplace(w, val);
            return val;
        };
        // Enumerate candidate monomials of a up to degree N-1 from the
        // support of S plus everything reachable by the recursion; a word w
        // can only carry a nonzero coefficient if X_i w or a trailing
        // rotation of it meets the support of S.
        for (const auto& [m, c] : S.terms()) {
            if (m.word.empty()) {
                result.error = "component " + std::to_string(i) +
                               " has a constant term";
                return result;
            }
            // Strip a leading X_i if present, then consider all trailing
            // rotations as candidates.
            if (m.word.front() == static_cast<std::uint8_t>(i)) {
                Mono w;
                w.word.assign(m.word.begin() + 1, m.word.end());
                // All words whose rotation chain passes through w: w itself
                // and words obtained by moving leading X_i's to the tail.
                Mono cur = w;
                while (true) {
                    Rat v = coeff_a(cur, coeff_a);
                    if (v != 0) a.add_term(cur, v - a.coeff(cur));
                    if (cur.word.empty() || cur.word.front() != i) break;
                    Mono next;
                    next.word.assign(cur.word.begin() + 1, cur.word.end());
                    next.word.push_back(static_cast<std::uint8_t>(i));
                    if (next == w) break;  // full cycle
                    cur = next;
                }
            }
        }
        // Verify the defining equation; inconsistencies are reported.
        TruncSeries xi = TruncSeries::gen(i, n, N);
        if (xi * a - a * xi != S) {
            result.error = "component " + std::to_string(i) +
                           ": right-hand side is not tangential";
            return result;
        }
        if (!is_lie_element(strip_pure_powers(a, i))) {
            result.error = "component " + std::to_string(i) +
                           " fails the Lie test";
            return result;
        }
        comps.push_back(std::move(a));
    }
    result.solution = TangentialDerivation(std::move(comps));
    return result;
}

}  // namespace gtlab
