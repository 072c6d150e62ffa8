#pragma once

#include "gtlab/completion.hpp"
#include "gtlab/derivations.hpp"
#include "gtlab/loop_ops.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gtlab {

// All exponent sums zero, i.e. trivial first homology class.
bool is_null_homologous(const GroupWord& w, int n_gens);

// Sufficient embeddedness check: the taut template has no self-crossing.
bool taut_embedded(const CyclicWord& w, LoopAlgebra& alg);

// Dehn-twist logarithm data. The trace form is the image in cyclic-word
// series coordinates of the active framing; the loop form is the finite
// framed-class expansion feeding the loop operations. The rho cross
// coefficient is rot_f(C)/2, plus (1-2h) when C is null-homologous (where
// the whole cross term vanishes anyway since |log C| = 0).
struct TwistLog {
    CompletedLoopSum loop_form;
    CyclicSeries trace_form;
    Rat kappa;
};

TwistLog twist_log(const GroupWord& C, int h, const Framing& f, int trunc,
                   LoopAlgebra& alg);

// The classical twist image 1/2 |(log C)^2| as a finite class combination.
ClassicalLoopSum twist_log_classical(const GroupWord& C, int trunc, int n_gens);

// sigma(u)(x_i) transported to the completion, one series per generator.
std::vector<TruncSeries> sigma_series(const ClassicalLoopSum& u,
                                      LoopAlgebra& alg);

struct LPlusReport {
    bool member = false;
    bool filtration_ok = false;
    bool coproduct_ok = false;
    std::string witness;  // first violation, empty when member
};

// Membership in the subalgebra cut out by filtration >= 3 and the
// coproduct-compatibility of the induced derivation (checked on generators,
// which suffices since the condition is multiplicative).
LPlusReport lplus_member(const ClassicalLoopSum& u, LoopAlgebra& alg);

// Classwise rot_f = 0 lift, gated on membership; throws InputError with the
// witness otherwise.
CompletedLoopSum canonical_section(const ClassicalLoopSum& u, const Framing& f,
                                   LoopAlgebra& alg);

// ES_f^+ = (eps_f (x) 1) o cobracket, on the quotient by the trivial line.
CompletedLoopSum es_plus(const CompletedLoopSum& v, const Framing& f,
                         LoopAlgebra& alg);

// ES_f = phi o ES_f^+ o (rot_f = 0 lift). Total map; the canonical-section
// framing independence is a property of members, checked separately.
ClassicalLoopSum es_map(const ClassicalLoopSum& u, const Framing& f,
                        LoopAlgebra& alg);

struct TderExtract {
    std::optional<TangentialDerivation> derivation;
    std::string error;
};

// Solve sigma(u)(x_i) = [x_i, a_i] degreewise; no silent repair.
TderExtract tder_extract(const ClassicalLoopSum& u, LoopAlgebra& alg);

struct CompareReport {
    LPlusReport lplus;
    CyclicSeries es_side;        // theta of ES_f(u)
    CyclicSeries div_side;       // divergence of the extracted derivation
    std::string error;           // nonempty when a pipeline failed
    std::vector<std::size_t> disagreeing_degrees;
    bool agrees_from_degree_3 = false;
};

// The central comparison: the graded map through the loop pipeline against
// the divergence through the algebra pipeline. Degree >= 3 agreement is the
// contract; lower-degree discrepancies are reported, not asserted.
CompareReport compare_es_div(const ClassicalLoopSum& u, const Framing& f,
                             LoopAlgebra& alg);

struct CommutatorReport {
    CyclicSeries lhs_trace;  // bracket of the full twist images
    CyclicSeries rhs_trace;  // bracket of the bare half log-squares
    bool equal = false;
    bool es_vanishes = false;
};

// Bracket of two twist logarithms versus the framing-free half log-squares,
// plus the vanishing of ES_f on the result.
CommutatorReport commutator_image(const GroupWord& C1, const GroupWord& C2,
                                  int h1, int h2, const Framing& f, int trunc,
                                  LoopAlgebra& alg);

}  // namespace gtlab
