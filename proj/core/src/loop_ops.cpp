#include "gtlab/loop_ops.hpp"

#include <sstream>

namespace gtlab {

namespace {
constexpr int kMaxAttempts = 12;
}

BasedSum& BasedSum::add(const BasedClass& c, const Rat& q) {
    if (q == 0) return *this;
    auto [it, inserted] = terms_.emplace(c, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

BasedSum BasedSum::operator+(const BasedSum& rhs) const {
    BasedSum out = *this;
    for (const auto& [c, q] : rhs.terms_) out.add(c, q);
    return out;
}

BasedSum BasedSum::operator-(const BasedSum& rhs) const {
    BasedSum out = *this;
    for (const auto& [c, q] : rhs.terms_) out.add(c, -q);
    return out;
}

BasedSum BasedSum::scaled(const Rat& q) const {
    BasedSum out;
    if (q == 0) return out;
    for (const auto& [c, k] : terms_) out.terms_.emplace(c, k * q);
    return out;
}

BasedSum BasedSum::operator*(const BasedSum& rhs) const {
    BasedSum out;
    for (const auto& [a, qa] : terms_)
        for (const auto& [b, qb] : rhs.terms_)
            out.add(BasedClass{a.word * b.word, a.marker + b.marker}, qa * qb);
    return out;
}

std::map<GroupWord, Rat> BasedSum::classical() const {
    std::map<GroupWord, Rat> out;
    for (const auto& [c, q] : terms_) {
        auto [it, inserted] = out.emplace(c.word, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

TensorLoopSum TensorLoopSum::operator+(const TensorLoopSum& rhs) const {
    TensorLoopSum out = *this;
    for (const auto& [k, q] : rhs.terms_) {
        auto [it, inserted] = out.terms_.emplace(k, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

TensorLoopSum TensorLoopSum::operator-(const TensorLoopSum& rhs) const {
    return *this + rhs.scaled(Rat(-1));
}

TensorLoopSum TensorLoopSum::scaled(const Rat& q) const {
    TensorLoopSum out;
    if (q == 0) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * q);
    return out;
}

Tensor3LoopSum Tensor3LoopSum::operator+(const Tensor3LoopSum& rhs) const {
    Tensor3LoopSum out = *this;
    for (const auto& [k, q] : rhs.terms_) {
        auto [it, inserted] = out.terms_.emplace(k, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

Tensor3LoopSum Tensor3LoopSum::operator-(const Tensor3LoopSum& rhs) const {
    Tensor3LoopSum out = *this;
    for (const auto& [k, q] : rhs.terms_) {
        auto [it, inserted] = out.terms_.emplace(k, -q);
        if (!inserted) {
            it->second -= q;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

long LoopAlgebra::taut(const CyclicWord& w) {
    auto it = taut_cache_.find(w);
    if (it != taut_cache_.end()) return it->second;
    long t = taut_rot(w, surface_);
    taut_cache_.emplace(w, t);
    return t;
}

long LoopAlgebra::based_taut(const GroupWord& w) {
    auto it = based_taut_cache_.find(w);
    if (it != based_taut_cache_.end()) return it->second;
    long t = based_taut_marker(w, surface_);
    based_taut_cache_.emplace(w, t);
    return t;
}

Polyline LoopAlgebra::realize_generic(const FramedClass& c, int attempt) {
    for (int t = attempt; t < attempt + kMaxAttempts; ++t) {
        try {
            Polyline p = realize(c, surface_, t);
            validate_generic({&p}, surface_);
            return p;
        } catch (const GenericityError&) {
            continue;
        }
    }
    throw GenericityError("no generic realization found for " + format_loop(c));
}

LoopSum LoopAlgebra::bracket_classes(const FramedClass& ca, const FramedClass& cb,
                                     int variant_base) {
    bool cacheable = variant_base == 0;
    auto key = std::make_pair(ca, cb);
    if (cacheable) {
        auto it = bracket_cache_.find(key);
        if (it != bracket_cache_.end()) return it->second;
    }
    for (int t = variant_base; t < variant_base + kMaxAttempts; ++t) {
        try {
            Polyline a = realize(ca, surface_, 3 * t);
            Polyline b = realize(cb, surface_, 3 * t + 1);
            validate_generic({&a, &b}, surface_);
            LoopSum out;
            for (const Crossing& cr : pair_intersections(a, b)) {
                Polyline sm = smooth_pair(a, b, cr, surface_);
                out.add(class_of(sm, surface_), Rat(cr.sign));
            }
            if (cacheable) bracket_cache_.emplace(std::move(key), out);
            return out;
        } catch (const GenericityError&) {
            continue;
        }
    }
    throw GenericityError("bracket: no generic pair for " + format_loop(ca) +
                          ", " + format_loop(cb));
}

LoopSum LoopAlgebra::bracket(const LoopSum& a, const LoopSum& b) {
    LoopSum out;
    for (const auto& [ca, qa] : a.terms())
        for (const auto& [cb, qb] : b.terms())
            out = out + bracket_classes(ca, cb).scaled(qa * qb);
    return out;
}

std::vector<LoopAlgebra::SplitTerm> LoopAlgebra::cobracket_raw(
    const FramedClass& c, int variant_base) {
    bool cacheable = variant_base == 0;
    if (cacheable) {
        auto it = cobracket_raw_cache_.find(c);
        if (it != cobracket_raw_cache_.end()) return it->second;
    }
    for (int t = variant_base; t < variant_base + kMaxAttempts; ++t) {
        try {
            Polyline a = realize(c, surface_, 3 * t);
            validate_generic({&a}, surface_);
            std::vector<SplitTerm> out;
            for (const Crossing& cr : self_intersections(a)) {
                auto [first, second] = split_self(a, cr);
                out.push_back({class_of(first, surface_),
                               class_of(second, surface_), cr.sign});
            }
            if (cacheable) cobracket_raw_cache_.emplace(c, out);
            return out;
        } catch (const GenericityError&) {
            continue;
        }
    }
    throw GenericityError("cobracket: no generic realization for " +
                          format_loop(c));
}

TensorLoopSum LoopAlgebra::cobracket_class(const FramedClass& c, int variant_base) {
    auto taut_fn = [this](const CyclicWord& w) { return taut(w); };
    TensorLoopSum out;
    for (const SplitTerm& term : cobracket_raw(c, variant_base)) {
        out.add_balanced(term.first, term.second, Rat(term.sign), taut_fn);
        out.add_balanced(term.second, term.first, Rat(-term.sign), taut_fn);
    }
    return out;
}

TensorLoopSum LoopAlgebra::cobracket(const LoopSum& a) {
    TensorLoopSum out;
    for (const auto& [c, q] : a.terms())
        out = out + cobracket_class(c).scaled(q);
    return out;
}

TensorLoopSum LoopAlgebra::cobracket_reduced(const LoopSum& a) {
    return cobracket(a.without_trivial());
}

BasedSum LoopAlgebra::sigma_classes(const FramedClass& u, const BasedClass& b) {
    auto key = std::make_pair(u, b);
    auto it = sigma_cache_.find(key);
    if (it != sigma_cache_.end()) return it->second;

    for (int t = 0; t < kMaxAttempts; ++t) {
        try {
            Polyline loop = realize(u, surface_, 3 * t);
            Polyline based = realize_based(b.word, b.marker, surface_, 3 * t + 2);
            validate_generic({&loop, &based}, surface_);
            BasedSum out;
            for (const Crossing& cr : pair_intersections(loop, based)) {
                Polyline rr = reroute_based(based, loop, cr);
                out.add(BasedClass{trace_based_word(rr, surface_),
                                   based_marker(rr)},
                        Rat(cr.sign));
            }
            sigma_cache_.emplace(std::move(key), out);
            return out;
        } catch (const GenericityError&) {
            continue;
        }
    }
    throw GenericityError("sigma: no generic configuration for " +
                          format_loop(u));
}

BasedSum LoopAlgebra::sigma_action(const LoopSum& u, const BasedClass& b) {
    BasedSum out;
    for (const auto& [c, q] : u.terms())
        out = out + sigma_classes(c, b).scaled(q);
    return out;
}

BasedSum LoopAlgebra::sigma_action(const LoopSum& u, const GroupWord& b) {
    return sigma_action(u, BasedClass{b, based_taut(b)});
}

std::map<std::pair<CyclicWord, CyclicWord>, Rat> classical_projection(
    const TensorLoopSum& t) {
    std::map<std::pair<CyclicWord, CyclicWord>, Rat> out;
    for (const auto& [key, q] : t.terms()) {
        if (key.first.word.empty() || key.second.word.empty()) continue;
        auto k = std::make_pair(key.first.word, key.second.word);
        auto [it, inserted] = out.emplace(std::move(k), q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

std::string format_based_sum(const BasedSum& s) {
    if (s.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [c, q] : s.terms()) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(q) << " * {" << format_word(c.word) << "; " << c.marker
            << "}";
    }
    return out.str();
}

std::string format_tensor(const TensorLoopSum& t) {
    if (t.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, q] : t.terms()) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(q) << " * " << format_loop(k.first) << " (x) "
            << format_loop(k.second);
    }
    return out.str();
}

}  // namespace gtlab
