#pragma once

#include "gtlab/rational.hpp"
#include "gtlab/surface.hpp"
#include "gtlab/words.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace gtlab {

// Raised when a configuration fails the exact general-position checks;
// callers retry with the next perturbation variant.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rat& c, const Point& a) { return {c * a.x, c * a.y}; }

// Sign of the determinant |b-a, c-a|: +1 left turn, -1 right turn, 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

// Closed generic polyline with exact rational vertices; the segment from the
// last vertex back to the first is implicit.
struct Polyline {
    std::vector<Point> v;

    std::size_t size() const { return v.size(); }
    const Point& pt(std::size_t i) const { return v[i % v.size()]; }
    Point seg_dir(std::size_t i) const { return pt(i + 1) - pt(i); }
    Point at_param(std::size_t seg, const Rat& t) const {
        return pt(seg) + t * seg_dir(seg);
    }
};

// Transverse double point between strand segments; for a self-intersection
// the first strand is the one with the smaller (segment, parameter).
struct Crossing {
    std::size_t seg_a = 0;
    Rat ta;
    std::size_t seg_b = 0;
    Rat tb;
    Point at;
    int sign = 0;  // sign of det(dir_a, dir_b)
};

// All transverse self-intersections, ordered by (seg_a, ta); throws
// GenericityError on any degenerate contact.
std::vector<Crossing> self_intersections(const Polyline& p);

// Transverse a-b intersections ((seg in a), (seg in b)).
std::vector<Crossing> pair_intersections(const Polyline& a, const Polyline& b);

// Exact general-position validation of a family of closed curves on the
// surface: transverse double points only, no triple points, no vertex or
// crossing on a gate, no segment through a hole center.
void validate_generic(const std::vector<const Polyline*>& curves,
                      const SurfaceModel& s);

// (1/2pi) * total signed exterior angle of the direction cycle; exact.
long turning_number(const Polyline& p);

// Reads the free homotopy class from the signed gate-crossing sequence.
CyclicWord trace_word(const Polyline& p, const SurfaceModel& s);

// Based variant: crossings ordered from vertex 0, freely reduced only.
GroupWord trace_based_word(const Polyline& p, const SurfaceModel& s);

// Oriented smoothing at an a-b crossing: traverse a from the crossing, then
// b; both corners are chamfered inside an exact clearance radius, so the
// result is again a generic closed polyline.
Polyline smooth_pair(const Polyline& a, const Polyline& b, const Crossing& cr,
                     const SurfaceModel& s);

// The two sub-loops of a at a self-crossing: first passage to second, and
// the rest; each keeps a corner at the crossing point.
std::pair<Polyline, Polyline> split_self(const Polyline& a, const Crossing& cr);

// Canonical taut realization of a free homotopy class: a fixed rectilinear
// template visiting the holes in word order. Its turning number defines the
// taut rotation of the word.
Polyline taut_template(const CyclicWord& w, const SurfaceModel& s, int variant);
long taut_rot(const CyclicWord& w, const SurfaceModel& s);

// Realization of a framed class: taut template plus |rot0 - taut| kinks in a
// clear pocket. Validates itself (trace + turning round-trip).
Polyline realize(const FramedClass& c, const SurfaceModel& s, int variant);

// Based immersed loop through the basepoint above the holes (vertex 0).
// The rotation marker of a based curve is turning_number - 1 (the closure
// cap contributes one full turn); realize_based hits the requested marker by
// inserting kinks on the cap. An empty marker keeps the template's own.
Polyline realize_based(const GroupWord& w, std::optional<long> marker,
                       const SurfaceModel& s, int variant);
long based_marker(const Polyline& p);
long based_taut_marker(const GroupWord& w, const SurfaceModel& s);

// Reroute a based curve through a free loop at one of their crossings:
// base prefix, the whole loop from the crossing, base suffix.
Polyline reroute_based(const Polyline& based, const Polyline& loop,
                       const Crossing& cr);

FramedClass class_of(const Polyline& p, const SurfaceModel& s);

// Plain-text dump, one "x y" line per vertex (exact rationals).
std::string dump_polyline(const Polyline& p);

}  // namespace gtlab
