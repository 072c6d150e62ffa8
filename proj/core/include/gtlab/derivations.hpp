#pragma once

#include "gtlab/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gtlab {

// Tangential derivation of the free Lie algebra: x_i -> [x_i, a_i], given by
// rho-free Lie-element components normalized to contain no pure powers of
// their own generator (the centralizer ambiguity).
class TangentialDerivation {
public:
    TangentialDerivation() = default;
    // Validates each component (Lie test) and applies the normalization.
    TangentialDerivation(std::vector<TruncSeries> components);

    int gens() const { return static_cast<int>(a_.size()); }
    int trunc() const { return a_.empty() ? 0 : a_[0].trunc(); }
    const TruncSeries& component(int i) const { return a_.at(i - 1); }
    const std::vector<TruncSeries>& components() const { return a_; }
    bool is_zero() const;

    // Extend X_j -> [X_j, a_j] over monomials by the Leibniz rule.
    TruncSeries apply(const TruncSeries& s) const;
    CyclicSeries apply(const CyclicSeries& s) const;

    TangentialDerivation operator+(const TangentialDerivation& rhs) const;
    TangentialDerivation scaled(const Rat& q) const;

private:
    std::vector<TruncSeries> a_;
};

// Strip pure powers X_i^k from a candidate i-th component.
TruncSeries strip_pure_powers(const TruncSeries& s, int i);

// Bracket of tangential derivations: component_i = d(e_i) - e(d_i) + [d_i, e_i].
TangentialDerivation tder_bracket(const TangentialDerivation& d,
                                  const TangentialDerivation& e);

// div(d) = | sum_k X_k * (right partial_k of a_k) |.
CyclicSeries divergence(const TangentialDerivation& d);

// Contraction trace of homogeneous derivation data of degree m+1 per
// component: keep the terms of a_i starting with X_i, strip that letter, sum
// over i, and project cyclically. Throws on inhomogeneous input.
CyclicSeries es_trace(const std::vector<TruncSeries>& components, int degree_m);

// Solve [X_i, a_i] = S_i degreewise for rho-free Lie components; reports the
// first inconsistency instead of repairing it.
struct TangentialSolve {
    std::optional<TangentialDerivation> solution;
    std::string error;  // empty on success
};
TangentialSolve solve_tangential(const std::vector<TruncSeries>& rhs);

}  // namespace gtlab
