#include "gtlab/verify.hpp"

#include <algorithm>
#include <sstream>

namespace gtlab {

std::vector<FramedClass> standard_corpus(LoopAlgebra& alg, std::size_t max_len) {
    const int n = alg.holes();
    std::vector<std::vector<Letter>> raw;
    raw.push_back({});
    raw.push_back({1});
    raw.push_back({2});
    raw.push_back({1, 2});
    raw.push_back({1, -2});
    raw.push_back({1, 1});
    raw.push_back({1, 1, 2});
    raw.push_back({1, 2, 1, 2});
    raw.push_back({1, 2, -1, -2});
    if (n >= 3) {
        raw.push_back({2, 3});
        raw.push_back({1, 2, 3});
        raw.push_back({3, 1});
        raw.push_back({2, 3, 2, -1});
    } else {
        raw.push_back({2, 2});
        raw.push_back({1, 2, 2});
        raw.push_back({1, 1, 2, 2});
    }
    std::vector<FramedClass> corpus;
    std::vector<long> offsets = {0, 1, -2};
    std::size_t oi = 0;
    for (const auto& letters : raw) {
        GroupWord w(letters, n);
        if (w.size() > max_len) continue;
        CyclicWord cw = cyclic_canonical(w);
        long t = alg.taut(cw);
        corpus.push_back(FramedClass{cw, t + offsets[oi % offsets.size()]});
        ++oi;
    }
    return corpus;
}

GroupWord random_word(std::mt19937_64& rng, int n_gens, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_d(0, max_len);
    std::uniform_int_distribution<int> gen_d(1, n_gens);
    std::uniform_int_distribution<int> sign_d(0, 1);
    std::size_t len = len_d(rng);
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < len; ++i) {
        int g = gen_d(rng);
        letters.push_back(sign_d(rng) ? g : -g);
    }
    return GroupWord(std::move(letters), n_gens);
}

TruncSeries random_lie(std::mt19937_64& rng, int n_gens, int trunc, int max_deg) {
    std::uniform_int_distribution<int> deg_d(1, max_deg);
    std::uniform_int_distribution<int> gen_d(1, n_gens);
    std::uniform_int_distribution<int> coeff_d(-3, 3);
    std::uniform_int_distribution<int> count_d(1, 3);
    TruncSeries out(n_gens, trunc);
    int terms = count_d(rng);
    for (int t = 0; t < terms; ++t) {
        int d = deg_d(rng);
        TruncSeries acc = TruncSeries::gen(gen_d(rng), n_gens, trunc);
        for (int k = 1; k < d; ++k) {
            TruncSeries x = TruncSeries::gen(gen_d(rng), n_gens, trunc);
            acc = acc * x - x * acc;
        }
        int c = coeff_d(rng);
        if (c == 0) c = 1;
        out = out + acc.scaled(Rat(c));
    }
    return out;
}

TangentialDerivation random_tangential(std::mt19937_64& rng, int n_gens,
                                       int trunc, int max_deg) {
    std::vector<TruncSeries> comps;
    for (int i = 0; i < n_gens; ++i)
        comps.push_back(random_lie(rng, n_gens, trunc, max_deg));
    return TangentialDerivation(std::move(comps));
}

SuiteResult antisymmetry_suite(LoopAlgebra& alg,
                               const std::vector<FramedClass>& corpus) {
    SuiteResult r{"antisymmetry"};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = i; j < corpus.size(); ++j) {
            LoopSum ab = alg.bracket_classes(corpus[i], corpus[j]);
            LoopSum ba = alg.bracket_classes(corpus[j], corpus[i]);
            ++r.checks;
            if (!(ab + ba).is_zero())
                r.failures.push_back("[a,b]+[b,a] != 0 for " +
                                     format_loop(corpus[i]) + ", " +
                                     format_loop(corpus[j]));
        }
    }
    return r;
}

SuiteResult jacobi_suite(LoopAlgebra& alg, const std::vector<FramedClass>& corpus,
                         std::size_t max_triples) {
    SuiteResult r{"jacobi"};
    for (std::size_t i = 0; i < corpus.size() && r.checks < (long)max_triples; ++i)
        for (std::size_t j = i + 1; j < corpus.size() && r.checks < (long)max_triples;
             ++j)
            for (std::size_t k = j + 1;
                 k < corpus.size() && r.checks < (long)max_triples; ++k) {
                LoopSum a(corpus[i]), b(corpus[j]), c(corpus[k]);
                LoopSum sum = alg.bracket(alg.bracket(a, b), c) +
                              alg.bracket(alg.bracket(b, c), a) +
                              alg.bracket(alg.bracket(c, a), b);
                ++r.checks;
                if (!sum.is_zero())
                    r.failures.push_back(
                        "jacobi fails for " + format_loop(corpus[i]) + ", " +
                        format_loop(corpus[j]) + ", " + format_loop(corpus[k]));
            }
    return r;
}

Tensor3LoopSum delta_left(const TensorLoopSum& t, LoopAlgebra& alg) {
    auto taut_fn = [&alg](const CyclicWord& w) { return alg.taut(w); };
    Tensor3LoopSum out;
    for (const auto& [key, q] : t.terms()) {
        TensorLoopSum dl = alg.cobracket_class(key.first);
        for (const auto& [dkey, dq] : dl.terms())
            out.add_balanced(dkey.first, dkey.second, key.second, q * dq, taut_fn);
    }
    return out;
}

Tensor3LoopSum tensor3_rotate(const Tensor3LoopSum& t, LoopAlgebra& alg) {
    auto taut_fn = [&alg](const CyclicWord& w) { return alg.taut(w); };
    Tensor3LoopSum out;
    for (const auto& [key, q] : t.terms())
        out.add_balanced(std::get<1>(key), std::get<2>(key), std::get<0>(key), q,
                         taut_fn);
    return out;
}

namespace {

// Raw rank-2 and rank-3 tensors over the rationals, keyed by honest split
// classes. The cobracket is not linear over the monogon ring, so its
// iteration lives here.
using RawPair = std::map<std::pair<FramedClass, FramedClass>, Rat>;
using RawTriple = std::map<std::tuple<FramedClass, FramedClass, FramedClass>, Rat>;

template <typename M, typename K>
void raw_add(M& m, K key, const Rat& q) {
    if (q == 0) return;
    auto [it, inserted] = m.emplace(std::move(key), q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) m.erase(it);
    }
}

RawPair raw_cobracket(const FramedClass& c, LoopAlgebra& alg) {
    RawPair out;
    for (const auto& term : alg.cobracket_raw(c)) {
        raw_add(out, std::make_pair(term.first, term.second), Rat(term.sign));
        raw_add(out, std::make_pair(term.second, term.first), Rat(-term.sign));
    }
    return out;
}

}  // namespace

TensorLoopSum bracket_on_tensor(const LoopSum& a, const TensorLoopSum& t,
                                LoopAlgebra& alg) {
    auto taut_fn = [&alg](const CyclicWord& w) { return alg.taut(w); };
    TensorLoopSum out;
    for (const auto& [key, q] : t.terms()) {
        LoopSum left = alg.bracket(a, LoopSum(key.first));
        for (const auto& [c, qc] : left.terms())
            out.add_balanced(c, key.second, q * qc, taut_fn);
        LoopSum right = alg.bracket(a, LoopSum(key.second));
        for (const auto& [c, qc] : right.terms())
            out.add_balanced(key.first, c, q * qc, taut_fn);
    }
    return out;
}

SuiteResult cojacobi_suite(LoopAlgebra& alg,
                           const std::vector<FramedClass>& corpus) {
    // Co-Jacobi for the reduced cobracket: trivial classes are read out of
    // both the input and the tensor factors. On that quotient the cobracket
    // is linear over the monogon ring (its non-linearity defect always
    // carries a trivial factor), so iterating it and comparing balanced
    // triples is well defined.
    auto taut_fn = [&alg](const CyclicWord& w) { return alg.taut(w); };
    SuiteResult r{"co-jacobi"};
    for (const FramedClass& c : corpus) {
        if (c.word.empty()) continue;
        Tensor3LoopSum sum;
        for (const auto& [pair_key, q] : raw_cobracket(c, alg)) {
            if (pair_key.first.word.empty() || pair_key.second.word.empty())
                continue;
            for (const auto& [dkey, dq] : raw_cobracket(pair_key.first, alg)) {
                if (dkey.first.word.empty() || dkey.second.word.empty()) continue;
                const FramedClass &x = dkey.first, &y = dkey.second,
                                  &z = pair_key.second;
                Rat v = q * dq;
                sum.add_balanced(x, y, z, v, taut_fn);
                sum.add_balanced(y, z, x, v, taut_fn);
                sum.add_balanced(z, x, y, v, taut_fn);
            }
        }
        ++r.checks;
        if (!sum.is_zero())
            r.failures.push_back("co-jacobi fails for " + format_loop(c));
    }
    return r;
}

SuiteResult compatibility_suite(LoopAlgebra& alg,
                                const std::vector<FramedClass>& corpus,
                                std::size_t max_pairs) {
    SuiteResult r{"compatibility"};
    for (std::size_t i = 0; i < corpus.size() && r.checks < (long)max_pairs; ++i) {
        for (std::size_t j = 0; j < corpus.size() && r.checks < (long)max_pairs;
             ++j) {
            if (i == j) continue;
            LoopSum a(corpus[i]), b(corpus[j]);
            TensorLoopSum lhs = alg.cobracket(alg.bracket(a, b));
            TensorLoopSum rhs = bracket_on_tensor(a, alg.cobracket(b), alg) -
                                bracket_on_tensor(b, alg.cobracket(a), alg);
            ++r.checks;
            if (!(lhs - rhs).is_zero())
                r.failures.push_back("compatibility fails for " +
                                     format_loop(corpus[i]) + ", " +
                                     format_loop(corpus[j]));
        }
    }
    return r;
}

SuiteResult oracle_suite(LoopAlgebra& alg, std::uint64_t seed, std::size_t loops) {
    SuiteResult r{"turning-oracle"};
    std::mt19937_64 rng(seed);
    const int n = alg.holes();
    std::uniform_int_distribution<long> kink_d(-2, 2);
    std::size_t done = 0;
    int variant_salt = 0;
    while (done < loops) {
        GroupWord wa = random_word(rng, n, 5);
        GroupWord wb = random_word(rng, n, 5);
        CyclicWord ca = cyclic_canonical(wa), cb = cyclic_canonical(wb);
        FramedClass fa{ca, alg.taut(ca) + kink_d(rng)};
        FramedClass fb{cb, alg.taut(cb) + kink_d(rng)};
        ++variant_salt;
        try {
            Polyline a = realize(fa, alg.surface(), 3 * (variant_salt % 4));
            Polyline b = realize(fb, alg.surface(), 3 * (variant_salt % 4) + 1);
            validate_generic({&a, &b}, alg.surface());
            long ta = turning_number(a), tb = turning_number(b);
            for (const Crossing& cr : pair_intersections(a, b)) {
                Polyline sm = smooth_pair(a, b, cr, alg.surface());
                ++r.checks;
                if (turning_number(sm) != ta + tb)
                    r.failures.push_back("smoothing additivity fails for " +
                                         format_loop(fa) + ", " + format_loop(fb));
            }
            for (const Crossing& cr : self_intersections(a)) {
                auto [l1, l2] = split_self(a, cr);
                ++r.checks;
                if (turning_number(l1) + turning_number(l2) != ta)
                    r.failures.push_back("split conservation fails for " +
                                         format_loop(fa));
            }
            ++done;
        } catch (const GenericityError&) {
            continue;  // resample
        }
    }
    return r;
}

SuiteResult cocycle_suite(int n_gens, int trunc, std::uint64_t seed,
                          std::size_t count, int max_deg) {
    SuiteResult r{"divergence-cocycle"};
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        TangentialDerivation d = random_tangential(rng, n_gens, trunc, max_deg);
        TangentialDerivation e = random_tangential(rng, n_gens, trunc, max_deg);
        CyclicSeries lhs = divergence(tder_bracket(d, e));
        CyclicSeries rhs = d.apply(divergence(e)) - e.apply(divergence(d));
        ++r.checks;
        if (!(lhs - rhs).is_zero())
            r.failures.push_back("cocycle identity fails at sample " +
                                 std::to_string(i));
    }
    return r;
}

SuiteResult representative_independence_suite(
    LoopAlgebra& alg, const std::vector<FramedClass>& corpus, int realizations) {
    SuiteResult r{"representative-independence"};
    for (const FramedClass& c : corpus) {
        TensorLoopSum base = alg.cobracket_class(c, 0);
        for (int v = 1; v < realizations; ++v) {
            ++r.checks;
            if (!(alg.cobracket_class(c, 16 * v) - base).is_zero())
                r.failures.push_back("cobracket depends on realization for " +
                                     format_loop(c));
        }
    }
    for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
        LoopSum base = alg.bracket_classes(corpus[i], corpus[i + 1], 0);
        for (int v = 1; v < realizations; ++v) {
            ++r.checks;
            LoopSum other = alg.bracket_classes(corpus[i], corpus[i + 1], 16 * v);
            if (!(other - base).is_zero())
                r.failures.push_back("bracket depends on realization for " +
                                     format_loop(corpus[i]) + ", " +
                                     format_loop(corpus[i + 1]));
        }
    }
    return r;
}

std::string format_suite(const SuiteResult& r) {
    std::ostringstream out;
    out << (r.pass() ? "PASS" : "FAIL") << " " << r.name << " (" << r.checks
        << " checks)";
    for (const auto& f : r.failures) out << "\n  " << f;
    return out.str();
}

}  // namespace gtlab
