#pragma once

#include "gtlab/rational.hpp"
#include "gtlab/series.hpp"
#include "gtlab/words.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gtlab {

// Planar disk with n holes, numbered left to right; hole i sits at (i, 0)
// and its gate is the vertical ray from the center down to the outer
// boundary. Loops are words in x1..xn; xi crosses gate i once positively.
struct SurfaceModel {
    int holes = 0;
    explicit SurfaceModel(int n) : holes(n) {
        if (n < 1) throw InputError("surface needs at least one hole");
    }
};

// A framing is identified with its difference from the blackboard framing of
// the planar embedding: integer shifts paired against exponent sums.
struct Framing {
    std::vector<int> shifts;

    static Framing blackboard(int n) { return Framing{std::vector<int>(n, 0)}; }
    bool is_blackboard() const {
        for (int c : shifts)
            if (c != 0) return false;
        return true;
    }
};

// Regular homotopy class of an immersed free loop: underlying free homotopy
// class plus the rotation number in blackboard coordinates. Every (word,
// rot0) pair names a distinct class.
struct FramedClass {
    CyclicWord word;
    long rot0 = 0;

    auto operator<=>(const FramedClass&) const = default;
};

// Finite rational combination of framed classes.
class LoopSum {
public:
    LoopSum() = default;
    explicit LoopSum(const FramedClass& c, const Rat& q = Rat(1)) {
        add(c, q);
    }

    const std::map<FramedClass, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LoopSum& add(const FramedClass& c, const Rat& q);
    LoopSum operator+(const LoopSum& rhs) const;
    LoopSum operator-(const LoopSum& rhs) const;
    LoopSum scaled(const Rat& q) const;

    // Drops all trivial (empty-word) classes.
    LoopSum without_trivial() const;

    bool operator==(const LoopSum& rhs) const = default;

private:
    std::map<FramedClass, Rat> terms_;
};

// Monogon insertion: shifts the blackboard rotation number by k.
FramedClass r_action(const FramedClass& c, long k);

// Forgets the smooth structure.
inline const CyclicWord& phi(const FramedClass& c) { return c.word; }

// Global rotation number with respect to framing f.
long rot_f(const FramedClass& c, const Framing& f);

// The section with rot_f = 0 over a free homotopy class.
FramedClass s_f(const CyclicWord& w, const Framing& f);

// (phi, rot_f); bijective onto (free classes) x Z.
std::pair<CyclicWord, long> tilde_phi_f(const FramedClass& c, const Framing& f);

// beta -> exp(rot_f(beta) rho) truncated at N, extended linearly.
TruncSeries eps_f(const LoopSum& s, const Framing& f, int n_gens, int trunc);

// Loop literal "{word; rot}" where rot is an integer, "taut", or
// "taut+k"/"taut-k". The taut rotation is resolved by the supplied callback
// (realized geometrically elsewhere).
using TautResolver = std::function<long(const CyclicWord&)>;
FramedClass parse_loop_literal(const std::string& text, int n_gens,
                               const TautResolver& taut);
std::string format_loop(const FramedClass& c);
std::string format_loop_sum(const LoopSum& s);

}  // namespace gtlab
