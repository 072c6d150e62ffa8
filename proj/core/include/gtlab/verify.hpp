#pragma once

#include "gtlab/derivations.hpp"
#include "gtlab/loop_ops.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gtlab {

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Deterministic corpus of framed classes on the surface: short words with
// kink offsets in [-2, 2].
std::vector<FramedClass> standard_corpus(LoopAlgebra& alg, std::size_t max_len = 6);

// Random reduced word of length <= max_len.
GroupWord random_word(std::mt19937_64& rng, int n_gens, std::size_t max_len);
// Random Lie element of homogeneous degrees <= max_deg (sum of left
// brackets with small rational coefficients).
TruncSeries random_lie(std::mt19937_64& rng, int n_gens, int trunc, int max_deg);
TangentialDerivation random_tangential(std::mt19937_64& rng, int n_gens,
                                       int trunc, int max_deg);

// Goldman bracket antisymmetry over corpus pairs.
SuiteResult antisymmetry_suite(LoopAlgebra& alg,
                               const std::vector<FramedClass>& corpus);
// Jacobi over corpus triples (bounded count, deterministic order).
SuiteResult jacobi_suite(LoopAlgebra& alg, const std::vector<FramedClass>& corpus,
                         std::size_t max_triples);
// Co-Jacobi of the reduced cobracket over the corpus.
SuiteResult cojacobi_suite(LoopAlgebra& alg,
                           const std::vector<FramedClass>& corpus);
// Drinfeld compatibility delta[a,b] = a.delta(b) - b.delta(a) over pairs.
SuiteResult compatibility_suite(LoopAlgebra& alg,
                                const std::vector<FramedClass>& corpus,
                                std::size_t max_pairs);
// Turning-number bookkeeping of smoothings and splits on random loops.
SuiteResult oracle_suite(LoopAlgebra& alg, std::uint64_t seed, std::size_t loops);
// Divergence cocycle identity on random tangential derivations.
SuiteResult cocycle_suite(int n_gens, int trunc, std::uint64_t seed,
                          std::size_t count, int max_deg);
// Bracket/cobracket values across independently perturbed realizations.
SuiteResult representative_independence_suite(
    LoopAlgebra& alg, const std::vector<FramedClass>& corpus, int realizations);

// Helpers for the bialgebra identities.
Tensor3LoopSum delta_left(const TensorLoopSum& t, LoopAlgebra& alg);
Tensor3LoopSum tensor3_rotate(const Tensor3LoopSum& t, LoopAlgebra& alg);
TensorLoopSum bracket_on_tensor(const LoopSum& a, const TensorLoopSum& t,
                                LoopAlgebra& alg);

std::string format_suite(const SuiteResult& r);

}  // namespace gtlab
