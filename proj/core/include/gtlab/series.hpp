#pragma once

#include "gtlab/rational.hpp"
#include "gtlab/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gtlab {

// Monomial in the free associative algebra on X1..Xn adjoined a central
// variable rho of degree 1: a positive-letter word plus a rho exponent.
struct Mono {
    std::vector<std::uint8_t> word;  // generator indices, 1-based
    std::uint32_t rho = 0;

    std::size_t degree() const { return word.size() + rho; }
    auto operator<=>(const Mono&) const = default;
};

// Noncommutative formal series in X1..Xn and central rho with exact rational
// coefficients, truncated at total degree N. Inverse generators never appear:
// group inverses are expanded by truncated geometric series.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(int n_gens, int trunc);

    int gens() const { return n_; }
    int trunc() const { return N_; }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static TruncSeries zero(int n, int N) { return TruncSeries(n, N); }
    static TruncSeries one(int n, int N);
    static TruncSeries gen(int i, int n, int N);   // X_i
    static TruncSeries rho(int n, int N, unsigned k = 1);
    static TruncSeries constant(const Rat& c, int n, int N);

    Rat coeff(const Mono& m) const;
    Rat constant_term() const { return coeff(Mono{}); }

    TruncSeries& add_term(Mono m, const Rat& c);  // checked vs degree bound

    TruncSeries operator+(const TruncSeries& rhs) const;
    TruncSeries operator-(const TruncSeries& rhs) const;
    TruncSeries operator*(const TruncSeries& rhs) const;
    TruncSeries operator-() const;
    TruncSeries scaled(const Rat& c) const;

    // Copy truncated to a lower degree bound.
    TruncSeries truncated(int new_N) const;

    // Homogeneous component of total degree d.
    TruncSeries component(std::size_t d) const;
    // Largest stored total degree (0 when zero).
    std::size_t top_degree() const;
    bool rho_free() const;

    bool operator==(const TruncSeries& rhs) const = default;

private:
    void require_compatible(const TruncSeries& rhs) const;
    int n_ = 0;
    int N_ = 0;
    std::map<Mono, Rat> terms_;
};

// x_i -> 1 + X_i, x_i^-1 -> sum_k (-X_i)^k, multiplicatively.
TruncSeries magnus_expand(const GroupWord& w, int n_gens, int trunc);

// log: requires constant term 1. exp: requires constant term 0.
TruncSeries series_log(const TruncSeries& s);
TruncSeries series_exp(const TruncSeries& s);

// log(exp(a) exp(b)); inputs must have zero constant term.
TruncSeries bch(const TruncSeries& a, const TruncSeries& b);

// The unique decomposition s = eps(s) + sum_k (d_k s) X_k for rho-free s;
// returns d_i (strip a trailing X_i). Throws on rho-bearing input.
TruncSeries right_partial(const TruncSeries& s, int i);

// Left-bracketing (Dynkin) map w = Xi1..Xik -> [[..[Xi1,Xi2],..],Xik],
// extended linearly; degree-1 words map to themselves.
TruncSeries dynkin_left_bracket(const TruncSeries& s);

// A rho-free series lies in the free Lie algebra iff the Dynkin map acts
// on each homogeneous degree-d component as multiplication by d.
bool is_lie_element(const TruncSeries& s);

// Series modulo cyclic rotation of each monomial; keys are stored in the
// minimal-rotation (necklace) form, rho exponents untouched.
class CyclicSeries {
public:
    CyclicSeries() = default;
    CyclicSeries(int n_gens, int trunc);

    int gens() const { return n_; }
    int trunc() const { return N_; }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CyclicSeries operator+(const CyclicSeries& rhs) const;
    CyclicSeries operator-(const CyclicSeries& rhs) const;
    CyclicSeries operator-() const;
    CyclicSeries scaled(const Rat& c) const;
    CyclicSeries component(std::size_t d) const;
    CyclicSeries truncated(int new_N) const;
    // Drops the empty-word monomials (all pure rho^k terms); this is the
    // quotient by the trivial-class line.
    CyclicSeries without_trivial() const;
    CyclicSeries rho_zero() const;  // set rho = 0, keep rho-free part

    CyclicSeries& add_term(Mono m, const Rat& c);  // canonicalizes the key

    bool operator==(const CyclicSeries& rhs) const = default;

private:
    int n_ = 0;
    int N_ = 0;
    std::map<Mono, Rat> terms_;
};

Mono necklace_canonical(Mono m);
CyclicSeries cyclic_project(const TruncSeries& s);

// Rank-2 tensor square of the series algebra (rho-free), truncated by total
// degree; used for coproduct identities.
class TensorSeries {
public:
    TensorSeries() = default;
    TensorSeries(int n_gens, int trunc) : n_(n_gens), N_(trunc) {}

    static TensorSeries tensor_of(const TruncSeries& a, const TruncSeries& b);

    TensorSeries operator+(const TensorSeries& rhs) const;
    TensorSeries operator-(const TensorSeries& rhs) const;
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Mono, Mono>, Rat>& terms() const { return terms_; }

    TensorSeries& add_term(Mono a, Mono b, const Rat& c);

    bool operator==(const TensorSeries& rhs) const = default;

private:
    int n_ = 0;
    int N_ = 0;
    std::map<std::pair<Mono, Mono>, Rat> terms_;
};

// Group-like coproduct: X_i -> X_i(x)1 + 1(x)X_i + X_i(x)X_i, extended as an
// algebra map. Input must be rho-free.
TensorSeries coproduct(const TruncSeries& s);

// Rendering: sorted "coeff * rho^k * X1.X2" terms; "0" for the zero series.
std::string format_series(const TruncSeries& s);
std::string format_series(const CyclicSeries& s);
std::string format_mono(const Mono& m);

// Parses the exact output of format_series back into a series.
TruncSeries parse_series(const std::string& text, int n_gens, int trunc);

}  // namespace gtlab
