#pragma once

#include "gtlab/loop_ops.hpp"
#include "gtlab/series.hpp"
#include "gtlab/surface.hpp"

#include <map>

namespace gtlab {

// Polynomial in the central variable rho, truncated at degree N on use.
using RhoPoly = std::map<unsigned, Rat>;

RhoPoly rho_poly_mul(const RhoPoly& a, const RhoPoly& b, int trunc);
RhoPoly rho_poly_exp_of(long rate, int trunc);  // exp(rate * rho)

// Element of the classical completed loop space, represented as a finite
// rational combination of free homotopy classes, read modulo filtration
// degree > N. Equality is decided in cyclic-word series coordinates.
class ClassicalLoopSum {
public:
    ClassicalLoopSum() = default;
    ClassicalLoopSum(int n_gens, int trunc) : n_(n_gens), N_(trunc) {}

    int gens() const { return n_; }
    int trunc() const { return N_; }
    const std::map<CyclicWord, Rat>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }

    ClassicalLoopSum& add(const CyclicWord& w, const Rat& q);
    ClassicalLoopSum operator+(const ClassicalLoopSum& rhs) const;
    ClassicalLoopSum operator-(const ClassicalLoopSum& rhs) const;
    ClassicalLoopSum scaled(const Rat& q) const;
    ClassicalLoopSum without_trivial() const;

private:
    int n_ = 0;
    int N_ = 0;
    std::map<CyclicWord, Rat> terms_;
};

// Element of the completed regular loop space: finite combination of framed
// classes with rho-polynomial coefficients, read modulo filtration > N.
class CompletedLoopSum {
public:
    CompletedLoopSum() = default;
    CompletedLoopSum(int n_gens, int trunc) : n_(n_gens), N_(trunc) {}

    int gens() const { return n_; }
    int trunc() const { return N_; }
    const std::map<FramedClass, RhoPoly>& terms() const { return terms_; }
    bool has_terms() const { return !terms_.empty(); }

    CompletedLoopSum& add(const FramedClass& c, unsigned rho_k, const Rat& q);
    CompletedLoopSum& add_poly(const FramedClass& c, const RhoPoly& p);
    CompletedLoopSum operator+(const CompletedLoopSum& rhs) const;
    CompletedLoopSum operator-(const CompletedLoopSum& rhs) const;
    CompletedLoopSum scaled(const Rat& q) const;
    // Quotient by the trivial line: drop empty-word classes.
    CompletedLoopSum without_trivial() const;

private:
    int n_ = 0;
    int N_ = 0;
    std::map<FramedClass, RhoPoly> terms_;
};

// Cyclic-word series coordinates: a framed class maps to
// exp(rot_f * rho) |magnus(word)|. These coordinates are faithful modulo
// filtration > N and are the canonical equality test for completed elements.
CyclicSeries theta(const CompletedLoopSum& u, const Framing& f);
CyclicSeries theta_classical(const ClassicalLoopSum& u);

// Classwise rot_f = 0 lift, extended linearly.
CompletedLoopSum s_f_lift(const ClassicalLoopSum& u, const Framing& f);

// Forget the smooth structure: set rho to zero and drop rotation data.
ClassicalLoopSum phi_forget(const CompletedLoopSum& u);

// Expand rho-polynomial coefficients into a finite framed-class combination
// via the truncated series of powers of log in the monogon shift. Sound
// because the m-th power of (shift - 1) has filtration at least m.
LoopSum rho_expand(const CompletedLoopSum& u);

// Bracket and cobracket on completed elements. The bracket is bilinear over
// the rho ring; the cobracket is only Q-linear and goes through rho_expand.
CompletedLoopSum completed_bracket(const CompletedLoopSum& a,
                                   const CompletedLoopSum& b, LoopAlgebra& alg);
TensorLoopSum completed_cobracket(const CompletedLoopSum& a, LoopAlgebra& alg);

// (eps_f (x) 1): the left tensor factor becomes exp(rot_f rho).
CompletedLoopSum eps_tensor_left(const TensorLoopSum& t, const Framing& f,
                                 int n_gens, int trunc);

std::string format_completed(const CompletedLoopSum& u);
std::string format_classical(const ClassicalLoopSum& u);

}  // namespace gtlab
