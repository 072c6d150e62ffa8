#include "gtlab/twists.hpp"

#include <sstream>

namespace gtlab {

namespace {

// Truncated coefficients of log(1+u) and of products thereof, as
// polynomials in u with the filtration bound deg <= N.
std::vector<Rat> log_series(int N) {
    std::vector<Rat> c(N + 1, Rat(0));
    for (int m = 1; m <= N; ++m) c[m] = Rat(m % 2 == 1 ? 1 : -1, m);
    return c;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                          int N) {
    std::vector<Rat> out(N + 1, Rat(0));
    for (int i = 0; i <= N; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Re-expand a polynomial in u = C - 1 into coefficients of the powers C^j.
std::vector<Rat> to_group_powers(const std::vector<Rat>& in_u, int N) {
    std::vector<std::vector<Rat>> C(N + 1, std::vector<Rat>(N + 1, Rat(0)));
    for (int m = 0; m <= N; ++m) {
        C[m][0] = 1;
        for (int j = 1; j <= m; ++j)
            C[m][j] = C[m - 1][j - 1] + (j <= m - 1 ? C[m - 1][j] : Rat(0));
    }
    std::vector<Rat> out(N + 1, Rat(0));
    for (int m = 0; m <= N; ++m) {
        if (in_u[m] == 0) continue;
        for (int j = 0; j <= m; ++j) {
            Rat c = in_u[m] * C[m][j];
            if ((m - j) % 2 == 1) c = -c;
            out[j] += c;
        }
    }
    return out;
}

}  // namespace

bool is_null_homologous(const GroupWord& w, int n_gens) {
    for (int i = 1; i <= n_gens; ++i)
        if (w.exponent_sum(i) != 0) return false;
    return true;
}

bool taut_embedded(const CyclicWord& w, LoopAlgebra& alg) {
    Polyline p = taut_template(w, alg.surface(), 0);
    return self_intersections(p).empty();
}

ClassicalLoopSum twist_log_classical(const GroupWord& C, int trunc, int n_gens) {
    if (C.empty()) return ClassicalLoopSum(n_gens, trunc);
    const int N = trunc;
    std::vector<Rat> lg = log_series(N);
    std::vector<Rat> sq = poly_mul(lg, lg, N);
    std::vector<Rat> by_power = to_group_powers(sq, N);
    ClassicalLoopSum out(n_gens, N);
    for (int j = 0; j <= N; ++j)
        out.add(cyclic_canonical(C.pow(j)), by_power[j] / 2);
    return out;
}

TwistLog twist_log(const GroupWord& C, int h, const Framing& f, int trunc,
                   LoopAlgebra& alg) {
    const int N = trunc;
    const int n = alg.holes();
    if (C.empty()) throw InputError("twist curve must be nontrivial");
    if (N < 2) throw InputError("twist expansion needs trunc >= 2");

    CyclicWord cw = cyclic_canonical(C);
    FramedClass taut_class{cw, alg.taut(cw)};
    Rat kappa = Rat(rot_f(taut_class, f), 2);
    if (is_null_homologous(C, n)) kappa += 1 - 2 * h;

    CompletedLoopSum loop(n, N);
    // 1/2 (log C)^2 part.
    {
        std::vector<Rat> sq = poly_mul(log_series(N), log_series(N), N);
        std::vector<Rat> by_power = to_group_powers(sq, N);
        for (int j = 0; j <= N; ++j)
            loop.add(s_f(cyclic_canonical(C.pow(j)), f), 0, by_power[j] / 2);
    }
    // kappa rho log C part (degree bound N - 1 for the word part).
    if (kappa != 0) {
        std::vector<Rat> lg = log_series(N - 1);
        std::vector<Rat> by_power = to_group_powers(lg, N - 1);
        for (int j = 0; j <= N - 1; ++j)
            loop.add(s_f(cyclic_canonical(C.pow(j)), f), 1, kappa * by_power[j]);
        // 1/2 kappa^2 rho^2 on the trivial class.
        loop.add(s_f(CyclicWord{}, f), 2, kappa * kappa / 2);
    }

    TwistLog out;
    out.loop_form = loop;
    out.trace_form = theta(loop, f);
    out.kappa = kappa;
    return out;
}

std::vector<TruncSeries> sigma_series(const ClassicalLoopSum& u,
                                      LoopAlgebra& alg) {
    const int n = u.gens();
    const int N = u.trunc();
    std::vector<TruncSeries> out;
    for (int i = 1; i <= n; ++i) {
        GroupWord xi(std::vector<Letter>{Letter(i)}, n);
        TruncSeries acc(n, N);
        for (const auto& [w, q] : u.terms()) {
            FramedClass c{w, alg.taut(w)};
            BasedSum terms = alg.sigma_classes(c, BasedClass{xi, alg.based_taut(xi)});
            for (const auto& [word, coeff] : terms.classical())
                acc = acc + magnus_expand(word, n, N).scaled(q * coeff);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

LPlusReport lplus_member(const ClassicalLoopSum& u, LoopAlgebra& alg) {
    LPlusReport rep;
    ClassicalLoopSum v = u.without_trivial();
    CyclicSeries cs = theta_classical(v);
    rep.filtration_ok = true;
    for (std::size_t d = 1; d <= 2; ++d) {
        CyclicSeries comp = cs.component(d);
        if (!comp.is_zero()) {
            rep.filtration_ok = false;
            rep.witness = "filtration: nonzero degree-" + std::to_string(d) +
                          " component " + format_series(comp);
            break;
        }
    }
    rep.coproduct_ok = true;
    std::vector<TruncSeries> sig = sigma_series(v, alg);
    for (int i = 1; i <= v.gens() && rep.coproduct_ok; ++i) {
        const TruncSeries& S = sig[i - 1];
        TruncSeries xi = TruncSeries::one(v.gens(), v.trunc()) +
                         TruncSeries::gen(i, v.gens(), v.trunc());
        TensorSeries lhs = coproduct(S);
        TensorSeries rhs =
            TensorSeries::tensor_of(S, xi) + TensorSeries::tensor_of(xi, S);
        if (!(lhs - rhs).is_zero()) {
            rep.coproduct_ok = false;
            if (rep.witness.empty())
                rep.witness = "coproduct condition fails on generator " +
                              std::to_string(i);
        }
    }
    rep.member = rep.filtration_ok && rep.coproduct_ok;
    return rep;
}

CompletedLoopSum canonical_section(const ClassicalLoopSum& u, const Framing& f,
                                   LoopAlgebra& alg) {
    LPlusReport rep = lplus_member(u, alg);
    if (!rep.member)
        throw InputError("canonical_section requires membership: " + rep.witness);
    return s_f_lift(u.without_trivial(), f);
}

CompletedLoopSum es_plus(const CompletedLoopSum& v, const Framing& f,
                         LoopAlgebra& alg) {
    TensorLoopSum t = completed_cobracket(v.without_trivial(), alg);
    return eps_tensor_left(t, f, v.gens(), v.trunc()).without_trivial();
}

ClassicalLoopSum es_map(const ClassicalLoopSum& u, const Framing& f,
                        LoopAlgebra& alg) {
    CompletedLoopSum lifted = s_f_lift(u.without_trivial(), f);
    return phi_forget(es_plus(lifted, f, alg));
}

TderExtract tder_extract(const ClassicalLoopSum& u, LoopAlgebra& alg) {
    TderExtract out;
    TangentialSolve solved = solve_tangential(sigma_series(u.without_trivial(), alg));
    if (!solved.solution) {
        out.error = solved.error;
        return out;
    }
    out.derivation = std::move(*solved.solution);
    return out;
}

CompareReport compare_es_div(const ClassicalLoopSum& u, const Framing& f,
                             LoopAlgebra& alg) {
    CompareReport rep;
    rep.lplus = lplus_member(u, alg);
    rep.es_side = theta_classical(es_map(u, f, alg));
    TderExtract ext = tder_extract(u, alg);
    if (!ext.derivation) {
        rep.error = ext.error;
        return rep;
    }
    rep.div_side = divergence(*ext.derivation);
    rep.agrees_from_degree_3 = true;
    for (std::size_t d = 0; d <= static_cast<std::size_t>(u.trunc()); ++d) {
        if (!(rep.es_side.component(d) - rep.div_side.component(d)).is_zero()) {
            rep.disagreeing_degrees.push_back(d);
            if (d >= 3) rep.agrees_from_degree_3 = false;
        }
    }
    return rep;
}

CommutatorReport commutator_image(const GroupWord& C1, const GroupWord& C2,
                                  int h1, int h2, const Framing& f, int trunc,
                                  LoopAlgebra& alg) {
    const int n = alg.holes();
    TwistLog t1 = twist_log(C1, h1, f, trunc, alg);
    TwistLog t2 = twist_log(C2, h2, f, trunc, alg);

    CompletedLoopSum pure1 = s_f_lift(twist_log_classical(C1, trunc, n), f);
    CompletedLoopSum pure2 = s_f_lift(twist_log_classical(C2, trunc, n), f);

    CompletedLoopSum lhs = completed_bracket(t1.loop_form, t2.loop_form, alg);
    CompletedLoopSum rhs = completed_bracket(pure1, pure2, alg);

    CommutatorReport rep;
    rep.lhs_trace = theta(lhs.without_trivial(), f);
    rep.rhs_trace = theta(rhs.without_trivial(), f);
    rep.equal = rep.lhs_trace == rep.rhs_trace;
    ClassicalLoopSum es = phi_forget(es_plus(lhs, f, alg));
    rep.es_vanishes = theta_classical(es).is_zero();
    return rep;
}

}  // namespace gtlab
