#pragma once

#include "gtlab/geometry.hpp"
#include "gtlab/surface.hpp"

#include <map>
#include <string>
#include <utility>

namespace gtlab {

// Based immersed loop class at the boundary basepoint: based word plus
// rotation marker.
struct BasedClass {
    GroupWord word;
    long marker = 0;
    auto operator<=>(const BasedClass&) const = default;
};

class BasedSum {
public:
    BasedSum() = default;
    const std::map<BasedClass, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BasedSum& add(const BasedClass& c, const Rat& q);
    BasedSum operator+(const BasedSum& rhs) const;
    BasedSum operator-(const BasedSum& rhs) const;
    BasedSum scaled(const Rat& q) const;
    // Concatenation product; markers add.
    BasedSum operator*(const BasedSum& rhs) const;
    // Forget markers.
    std::map<GroupWord, Rat> classical() const;
    bool operator==(const BasedSum&) const = default;

private:
    std::map<BasedClass, Rat> terms_;
};

// Element of the tensor square over the Laurent ring of the monogon class;
// stored r-balanced: the left factor's rotation is normalized to the taut
// rotation of its word, the surplus transferred to the right factor.
class TensorLoopSum {
public:
    const std::map<std::pair<FramedClass, FramedClass>, Rat>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }
    TensorLoopSum operator+(const TensorLoopSum& rhs) const;
    TensorLoopSum operator-(const TensorLoopSum& rhs) const;
    TensorLoopSum scaled(const Rat& q) const;
    bool operator==(const TensorLoopSum&) const = default;

    template <typename TautFn>
    TensorLoopSum& add_balanced(const FramedClass& l, const FramedClass& r,
                                const Rat& q, TautFn&& taut) {
        if (q == 0) return *this;
        long tl = taut(l.word);
        long diff = l.rot0 - tl;
        auto key = std::make_pair(FramedClass{l.word, tl},
                                  FramedClass{r.word, r.rot0 + diff});
        auto [it, inserted] = terms_.emplace(std::move(key), q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

private:
    std::map<std::pair<FramedClass, FramedClass>, Rat> terms_;
};

// Rank-3 analogue (left and middle factors taut-normalized).
class Tensor3LoopSum {
public:
    using Key = std::tuple<FramedClass, FramedClass, FramedClass>;
    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Tensor3LoopSum operator+(const Tensor3LoopSum& rhs) const;
    Tensor3LoopSum operator-(const Tensor3LoopSum& rhs) const;
    bool operator==(const Tensor3LoopSum&) const = default;

    template <typename TautFn>
    Tensor3LoopSum& add_balanced(const FramedClass& a, const FramedClass& b,
                                 const FramedClass& c, const Rat& q,
                                 TautFn&& taut) {
        if (q == 0) return *this;
        long ta = taut(a.word), tb = taut(b.word);
        long da = a.rot0 - ta, db = b.rot0 - tb;
        Key key{FramedClass{a.word, ta}, FramedClass{b.word, tb},
                FramedClass{c.word, c.rot0 + da + db}};
        auto [it, inserted] = terms_.emplace(std::move(key), q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

private:
    std::map<Key, Rat> terms_;
};

// The loop-operation engine over one surface: Goldman bracket, Turaev
// cobracket, and the action on based loops, all computed on generic
// realizations with memoized per-class results.
class LoopAlgebra {
public:
    explicit LoopAlgebra(SurfaceModel s) : surface_(s) {}

    const SurfaceModel& surface() const { return surface_; }
    int holes() const { return surface_.holes; }

    long taut(const CyclicWord& w);
    long based_taut(const GroupWord& w);

    // Signed sum of oriented smoothings over intersection points.
    LoopSum bracket(const LoopSum& a, const LoopSum& b);

    // Signed sum over self-intersections of split tensor differences.
    TensorLoopSum cobracket(const LoopSum& a);

    // As cobracket, with the input read modulo trivial classes.
    TensorLoopSum cobracket_reduced(const LoopSum& a);

    // The derivation action: reroute the based loop through the free loop
    // at each intersection.
    BasedSum sigma_action(const LoopSum& u, const BasedClass& b);
    BasedSum sigma_action(const LoopSum& u, const GroupWord& b);

    // Validated generic realization (retries perturbation variants).
    Polyline realize_generic(const FramedClass& c, int attempt = 0);

    // Raw split data of one cobracket term, before balancing into the
    // tensor over the monogon ring. The cobracket is not linear over that
    // ring, so iterating it (co-Jacobi) must use these honest classes.
    struct SplitTerm {
        FramedClass first, second;
        int sign;
    };
    std::vector<SplitTerm> cobracket_raw(const FramedClass& a,
                                         int variant_base = 0);

    // Per-class building blocks (memoized at variant base 0).
    LoopSum bracket_classes(const FramedClass& a, const FramedClass& b,
                            int variant_base = 0);
    TensorLoopSum cobracket_class(const FramedClass& a, int variant_base = 0);
    BasedSum sigma_classes(const FramedClass& u, const BasedClass& b);

private:
    SurfaceModel surface_;
    std::map<CyclicWord, long> taut_cache_;
    std::map<GroupWord, long> based_taut_cache_;
    std::map<std::pair<FramedClass, FramedClass>, LoopSum> bracket_cache_;
    std::map<FramedClass, std::vector<SplitTerm>> cobracket_raw_cache_;
    std::map<std::pair<FramedClass, BasedClass>, BasedSum> sigma_cache_;
};

// Apply phi to both factors and drop terms with a trivial factor.
std::map<std::pair<CyclicWord, CyclicWord>, Rat> classical_projection(
    const TensorLoopSum& t);

std::string format_based_sum(const BasedSum& s);
std::string format_tensor(const TensorLoopSum& t);

}  // namespace gtlab
