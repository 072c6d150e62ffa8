#include "gtlab/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gtlab {

namespace {

int sign_of(const Rat& q) { return q == 0 ? 0 : (q > 0 ? 1 : -1); }

Rat det(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Rat dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

bool adjacent_segs(std::size_t i, std::size_t j, std::size_t m) {
    if (i == j) return true;
    std::size_t d = i < j ? j - i : i - j;
    return d == 1 || d == m - 1;
}

// Squared euclidean distance from a point to a segment.
Rat dist2_point_seg(const Point& p, const Point& q1, const Point& q2) {
    Point d = q2 - q1;
    Rat len2 = dot(d, d);
    Rat t = len2 == 0 ? Rat(0) : dot(p - q1, d) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Point c = q1 + t * d;
    Point e = p - c;
    return dot(e, e);
}

Rat dist2_point_point(const Point& a, const Point& b) {
    Point e = a - b;
    return dot(e, e);
}

// Squared distance to the gate ray {x = i, y <= 0}.
Rat dist2_point_gate(const Point& p, int hole) {
    Rat dx = p.x - hole;
    if (p.y <= 0) return dx * dx;
    return dx * dx + p.y * p.y;
}

struct GateHit {
    std::size_t seg;
    Rat t;
    Letter letter;
};

// Gate crossings of one segment, with exactness checks.
void gate_hits_of_segment(const Polyline& p, std::size_t si, const SurfaceModel& s,
                          std::vector<GateHit>& out) {
    const Point& a = p.pt(si);
    const Point& b = p.pt(si + 1);
    for (int i = 1; i <= s.holes; ++i) {
        Rat hx(i);
        if (a.x == hx && a.y <= 0)
            throw GenericityError("vertex on gate " + std::to_string(i));
        if (a.x == hx && b.x == hx && (a.y <= 0 || b.y <= 0))
            throw GenericityError("segment along gate " + std::to_string(i));
        bool fwd = a.x < hx && b.x > hx;
        bool bwd = a.x > hx && b.x < hx;
        if (!fwd && !bwd) continue;
        Rat t = (hx - a.x) / (b.x - a.x);
        Rat y = a.y + t * (b.y - a.y);
        if (y == 0) throw GenericityError("segment through hole center " +
                                          std::to_string(i));
        if (y > 0) continue;  // above the hole: the gate points down only
        out.push_back({si, t, fwd ? Letter(i) : Letter(-i)});
    }
}

std::vector<GateHit> gate_hits(const Polyline& p, const SurfaceModel& s) {
    std::vector<GateHit> hits;
    for (std::size_t i = 0; i < p.size(); ++i) gate_hits_of_segment(p, i, s, hits);
    std::sort(hits.begin(), hits.end(), [](const GateHit& a, const GateHit& b) {
        if (a.seg != b.seg) return a.seg < b.seg;
        return a.t < b.t;
    });
    return hits;
}

// Proper interior crossing of two segments, if any.
std::optional<std::pair<Rat, Rat>> proper_cross(const Point& p1, const Point& p2,
                                                const Point& q1, const Point& q2) {
    int o1 = orient(p1, p2, q1);
    int o2 = orient(p1, p2, q2);
    int o3 = orient(q1, q2, p1);
    int o4 = orient(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        Point dp = p2 - p1;
        Point dq = q2 - q1;
        Rat denom = det(dp, dq);
        Rat t = det(q1 - p1, dq) / denom;
        Rat u = det(q1 - p1, dp) / denom;
        return std::make_pair(t, u);
    }
    return std::nullopt;
}

// Non-transverse contact between two segments (endpoint touch or collinear
// overlap) that genericity forbids.
bool degenerate_contact(const Point& p1, const Point& p2, const Point& q1,
                        const Point& q2) {
    auto on_seg = [](const Point& a, const Point& b, const Point& e) {
        if (orient(a, b, e) != 0) return false;
        Rat lox = std::min(a.x, b.x), hix = std::max(a.x, b.x);
        Rat loy = std::min(a.y, b.y), hiy = std::max(a.y, b.y);
        return lox <= e.x && e.x <= hix && loy <= e.y && e.y <= hiy;
    };
    return on_seg(p1, p2, q1) || on_seg(p1, p2, q2) || on_seg(q1, q2, p1) ||
           on_seg(q1, q2, p2);
}

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) {
    return sign_of(det(b - a, c - a));
}

std::vector<Crossing> self_intersections(const Polyline& p) {
    std::vector<Crossing> out;
    const std::size_t m = p.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (adjacent_segs(i, j, m)) continue;
            auto hit = proper_cross(p.pt(i), p.pt(i + 1), p.pt(j), p.pt(j + 1));
            if (!hit) {
                if (degenerate_contact(p.pt(i), p.pt(i + 1), p.pt(j), p.pt(j + 1)))
                    throw GenericityError("degenerate self-contact");
                continue;
            }
            Crossing c;
            c.seg_a = i;
            c.ta = hit->first;
            c.seg_b = j;
            c.tb = hit->second;
            c.at = p.at_param(i, c.ta);
            c.sign = sign_of(det(p.seg_dir(i), p.seg_dir(j)));
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
        if (a.seg_a != b.seg_a) return a.seg_a < b.seg_a;
        return a.ta < b.ta;
    });
    return out;
}

std::vector<Crossing> pair_intersections(const Polyline& a, const Polyline& b) {
    std::vector<Crossing> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto hit = proper_cross(a.pt(i), a.pt(i + 1), b.pt(j), b.pt(j + 1));
            if (!hit) {
                if (degenerate_contact(a.pt(i), a.pt(i + 1), b.pt(j), b.pt(j + 1)))
                    throw GenericityError("degenerate pair contact");
                continue;
            }
            Crossing c;
            c.seg_a = i;
            c.ta = hit->first;
            c.seg_b = j;
            c.tb = hit->second;
            c.at = a.at_param(i, c.ta);
            c.sign = sign_of(det(a.seg_dir(i), b.seg_dir(j)));
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        if (x.seg_a != y.seg_a) return x.seg_a < y.seg_a;
        return x.ta < y.ta;
    });
    return out;
}

void validate_generic(const std::vector<const Polyline*>& curves,
                      const SurfaceModel& s) {
    // Per-curve: vertices distinct along segments, no reversal corners,
    // vertices off gates.
    for (const Polyline* cp : curves) {
        const Polyline& p = *cp;
        if (p.size() < 3) throw GenericityError("degenerate polyline");
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.pt(i) == p.pt(i + 1))
                throw GenericityError("repeated consecutive vertex");
            Point d0 = p.seg_dir(i);
            Point d1 = p.seg_dir(i + 1);
            if (det(d0, d1) == 0 && dot(d0, d1) < 0)
                throw GenericityError("reversal corner");
            for (int h = 1; h <= s.holes; ++h)
                if (p.pt(i).x == h && p.pt(i).y <= 0)
                    throw GenericityError("vertex on gate");
        }
    }
    // All crossings across the family must be distinct points, off gates.
    std::set<Point> seen;
    auto note = [&](const Point& q) {
        if (!seen.insert(q).second)
            throw GenericityError("coincident crossing points");
        for (int h = 1; h <= s.holes; ++h)
            if (q.x == h && q.y <= 0) throw GenericityError("crossing on gate");
    };
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        for (const Crossing& c : self_intersections(*curves[ci])) note(c.at);
        for (std::size_t cj = ci + 1; cj < curves.size(); ++cj) {
            // Shared vertices between different curves are degenerate too.
            for (const Point& va : curves[ci]->v)
                for (const Point& vb : curves[cj]->v)
                    if (va == vb) throw GenericityError("shared vertex");
            for (const Crossing& c : pair_intersections(*curves[ci], *curves[cj]))
                note(c.at);
        }
    }
    // Gate hit validity (throws on center hits / collinear gate segments).
    for (const Polyline* cp : curves) gate_hits(*cp, s);
}

long turning_number(const Polyline& p) {
    // Winding of the direction cycle around the origin, counted by exact
    // crossings of a reference ray chosen non-parallel to every direction.
    std::vector<Point> dirs;
    dirs.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) dirs.push_back(p.seg_dir(i));

    Point ray;
    for (long k = 3;; k += 2) {
        ray = Point{Rat(1), Rat(1, k)};
        bool ok = true;
        for (const Point& d : dirs)
            if (det(ray, d) == 0) {
                ok = false;
                break;
            }
        if (ok) break;
    }

    long winding = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const Point& u = dirs[i];
        const Point& v = dirs[(i + 1) % dirs.size()];
        Rat d = det(u, v);
        if (d == 0) {
            if (dot(u, v) < 0) throw GenericityError("reversal corner");
            continue;  // straight continuation
        }
        if (d > 0) {
            if (det(u, ray) > 0 && det(ray, v) > 0) ++winding;
        } else {
            if (det(v, ray) > 0 && det(ray, u) > 0) --winding;
        }
    }
    return winding;
}

CyclicWord trace_word(const Polyline& p, const SurfaceModel& s) {
    std::vector<Letter> letters;
    for (const GateHit& h : gate_hits(p, s)) letters.push_back(h.letter);
    return cyclic_canonical(GroupWord(std::move(letters), s.holes));
}

GroupWord trace_based_word(const Polyline& p, const SurfaceModel& s) {
    std::vector<Letter> letters;
    for (const GateHit& h : gate_hits(p, s)) letters.push_back(h.letter);
    return GroupWord(std::move(letters), s.holes);
}

namespace {

// Exact clearance radius around a crossing: squared distance to every other
// feature of the scene (vertices, other crossings, non-incident segments,
// gates).
Rat clearance2(const Point& at, const std::vector<const Polyline*>& curves,
               const std::vector<Point>& other_crossings,
               const std::vector<std::pair<const Polyline*, std::size_t>>& incident,
               const SurfaceModel& s) {
    std::optional<Rat> best;
    auto consider = [&](const Rat& d2) {
        if (d2 == 0) return;  // features at the point itself are the strands
        if (!best || d2 < *best) best = d2;
    };
    for (const Point& q : other_crossings) consider(dist2_point_point(at, q));
    for (const Polyline* cp : curves) {
        for (std::size_t i = 0; i < cp->size(); ++i) {
            consider(dist2_point_point(at, cp->pt(i)));
            bool is_incident = false;
            for (auto [ip, iseg] : incident)
                if (ip == cp && iseg == i) is_incident = true;
            if (!is_incident)
                consider(dist2_point_seg(at, cp->pt(i), cp->pt(i + 1)));
        }
    }
    for (int h = 1; h <= s.holes; ++h) consider(dist2_point_gate(at, h));
    if (!best) throw GenericityError("empty scene");
    return *best;
}

// Halve a parameter offset until the cut point sits inside half the
// clearance radius.
Rat cut_offset(const Rat& r2, const Rat& len2, const Rat& window) {
    Rat off = window / 2;
    while (off * off * len2 * 4 > r2) off /= 2;
    return off;
}

}  // namespace

Polyline smooth_pair(const Polyline& a, const Polyline& b, const Crossing& cr,
                     const SurfaceModel& s) {
    // Collect every crossing of the {a, b} scene to size the chamfer.
    std::vector<Crossing> aa = self_intersections(a);
    std::vector<Crossing> bb = self_intersections(b);
    std::vector<Crossing> ab = pair_intersections(a, b);

    std::vector<Point> others;
    for (const Crossing& c : aa) others.push_back(c.at);
    for (const Crossing& c : bb) others.push_back(c.at);
    for (const Crossing& c : ab)
        if (!(c.at == cr.at)) others.push_back(c.at);

    std::vector<std::pair<const Polyline*, std::size_t>> incident = {
        {&a, cr.seg_a}, {&b, cr.seg_b}};
    Rat r2 = clearance2(cr.at, {&a, &b}, others, incident, s);

    // Parameter windows on both incident segments: other features on the
    // same segment bound how far the cut may reach.
    auto window = [&](const Polyline& curve, bool on_a, std::size_t seg,
                      const Rat& t) {
        Rat lo(0), hi(1);
        auto tighten = [&](const Rat& u) {
            if (u < t && u > lo) lo = u;
            if (u > t && u < hi) hi = u;
        };
        for (const Crossing& c : on_a ? aa : bb) {
            if (c.seg_a == seg && !(c.ta == t)) tighten(c.ta);
            if (c.seg_b == seg && !(c.tb == t)) tighten(c.tb);
        }
        for (const Crossing& c : ab) {
            if (on_a && c.seg_a == seg && !(c.ta == t)) tighten(c.ta);
            if (!on_a && c.seg_b == seg && !(c.tb == t)) tighten(c.tb);
        }
        std::vector<GateHit> hits;
        gate_hits_of_segment(curve, seg, s, hits);
        for (const GateHit& h : hits) tighten(h.t);
        return std::make_pair(t - lo, hi - t);
    };

    auto [wa_lo, wa_hi] = window(a, true, cr.seg_a, cr.ta);
    auto [wb_lo, wb_hi] = window(b, false, cr.seg_b, cr.tb);

    Point da = a.seg_dir(cr.seg_a);
    Point db = b.seg_dir(cr.seg_b);
    Rat la2 = dot(da, da), lb2 = dot(db, db);

    Rat a_in = cr.ta - cut_offset(r2, la2, wa_lo);
    Rat a_out = cr.ta + cut_offset(r2, la2, wa_hi);
    Rat b_in = cr.tb - cut_offset(r2, lb2, wb_lo);
    Rat b_out = cr.tb + cut_offset(r2, lb2, wb_hi);

    Polyline out;
    out.v.push_back(a.at_param(cr.seg_a, a_out));
    for (std::size_t k = 1; k <= a.size(); ++k) {
        std::size_t idx = (cr.seg_a + k) % a.size();
        out.v.push_back(a.pt(idx));
        if (idx == cr.seg_a) break;  // reached the start vertex of seg_a
    }
    out.v.push_back(a.at_param(cr.seg_a, a_in));
    out.v.push_back(b.at_param(cr.seg_b, b_out));
    for (std::size_t k = 1; k <= b.size(); ++k) {
        std::size_t idx = (cr.seg_b + k) % b.size();
        out.v.push_back(b.pt(idx));
        if (idx == cr.seg_b) break;
    }
    out.v.push_back(b.at_param(cr.seg_b, b_in));
    return out;
}

std::pair<Polyline, Polyline> split_self(const Polyline& a, const Crossing& cr) {
    if (!(cr.seg_a < cr.seg_b))
        throw InputError("split_self expects strands ordered along the curve");
    Polyline first, second;
    first.v.push_back(cr.at);
    for (std::size_t i = cr.seg_a + 1; i <= cr.seg_b; ++i) first.v.push_back(a.pt(i));
    second.v.push_back(cr.at);
    for (std::size_t i = cr.seg_b + 1; i <= cr.seg_a + a.size(); ++i)
        second.v.push_back(a.pt(i));
    return {std::move(first), std::move(second)};
}

namespace {

struct Schedule {
    // All entries exact rationals; variant shifts keep orderings intact.
    std::vector<Rat> lane, depth, height;
};

Schedule make_schedule(std::size_t M, int variant) {
    Schedule sc;
    const long m2 = static_cast<long>(M) + 2;
    const Rat ea(variant + 1, 4096L * m2 * 7);
    const Rat ed(variant + 1, 4096L * m2 * 11);
    const Rat ec(variant + 1, 4096L * m2 * 13);
    for (std::size_t j = 0; j < M; ++j) {
        long jj = static_cast<long>(j);
        sc.lane.push_back(Rat(1, 4) * Rat(m2 - 1 - jj, m2) + ea);
        sc.depth.push_back(Rat(1, 2) + Rat(m2 - 1 - jj, 2 * m2) + ed);
        sc.height.push_back(Rat(1, 2) + Rat(jj + 1, m2) + ec);
    }
    return sc;
}

// Detour replacing a straight pass through q on a run with direction u
// (unit-ish); v = +90 rotation of u gives a positive kink (+1 turning),
// v = -90 rotation a negative one. The detour crosses the original run once.
std::vector<Point> kink_points(const Point& q, const Point& u, const Point& v,
                               const Rat& eps) {
    Point eu = eps * u, ev = eps * v;
    return {q, q + ev, q - eu + ev, q - eu - ev, q + eu - ev, q + eu};
}

void append_kinks_on_run(std::vector<Point>& out, const Point& from,
                         const Point& to, long delta, const Rat& clear_eps) {
    // Vertices strictly between from and to; caller pushes the endpoints.
    if (delta == 0) return;
    long k = delta > 0 ? delta : -delta;
    Point d = to - from;
    Rat ax = abs(d.x), ay = abs(d.y);
    Rat len_proxy = ax > ay ? ax : ay;
    Point u{d.x / len_proxy, d.y / len_proxy};
    Point v = delta > 0 ? Point{-u.y, u.x} : Point{u.y, -u.x};
    Rat spread = Rat(1, 4 * (2 * k + 1)) * len_proxy;
    Rat eps = clear_eps < spread ? clear_eps : spread;
    // Odd-denominator stations never hit the run's midpoint, which can sit
    // exactly on a gate line.
    for (long i = 1; i <= k; ++i) {
        Point q = from + Rat(2 * i - 1, 2 * k + 1) * d;
        for (const Point& kp : kink_points(q, u, v, eps)) out.push_back(kp);
    }
}

Polyline bowtie(int variant) {
    Rat sx = Rat(variant, 64 * 7), sy = Rat(variant, 128 * 5);
    auto P = [&](long x_num, long x_den, long y_num, long y_den) {
        return Point{Rat(x_num, x_den) + sx, Rat(y_num, y_den) + sy};
    };
    Polyline p;
    p.v = {P(-2, 1, 1, 4), P(-1, 2, -1, 4), P(-1, 2, 1, 4), P(-2, 1, -1, 4)};
    return p;
}

Polyline bowtie_with_kinks(long rot, int variant) {
    Polyline base = bowtie(variant);
    if (rot == 0) return base;
    // Kinks on the vertical run from vertex 1 to vertex 2, upper half.
    Polyline out;
    out.v.push_back(base.v[0]);
    out.v.push_back(base.v[1]);
    Point mid = base.v[1] + Rat(5, 8) * (base.v[2] - base.v[1]);
    long k = rot > 0 ? rot : -rot;
    Rat eps = Rat(1, 16 * 11 * (k + 1) * (2 * variant + 3));
    append_kinks_on_run(out.v, mid, base.v[2], rot, eps);
    out.v.push_back(base.v[2]);
    out.v.push_back(base.v[3]);
    return out;
}

}  // namespace

Polyline taut_template(const CyclicWord& w, const SurfaceModel& s, int variant) {
    if (w.empty()) return bowtie(variant);
    const auto& letters = w.letters();
    const std::size_t M = letters.size();
    Schedule sc = make_schedule(M, variant);
    Polyline p;
    for (std::size_t j = 0; j < M; ++j) {
        Letter l = letters[j];
        int hole = gen_of(l);
        if (hole > s.holes) throw InputError("word uses a hole beyond the surface");
        Rat in_x = l > 0 ? Rat(hole) - sc.lane[j] : Rat(hole) + sc.lane[j];
        Rat out_x = l > 0 ? Rat(hole) + sc.lane[j] : Rat(hole) - sc.lane[j];
        const Rat& prev_c = sc.height[(j + M - 1) % M];
        p.v.push_back({in_x, prev_c});
        p.v.push_back({in_x, -sc.depth[j]});
        p.v.push_back({out_x, -sc.depth[j]});
        p.v.push_back({out_x, sc.height[j]});
    }
    return p;
}

long taut_rot(const CyclicWord& w, const SurfaceModel& s) {
    return turning_number(taut_template(w, s, 0));
}

Polyline realize(const FramedClass& c, const SurfaceModel& s, int variant) {
    Polyline base = taut_template(c.word, s, variant);
    long taut = turning_number(base);
    long delta = c.rot0 - taut;

    Polyline out;
    if (c.word.empty()) {
        out = bowtie_with_kinks(c.rot0, variant);
    } else if (delta == 0) {
        out = base;
    } else {
        // Kinks on the closing connector (the highest run, from the last
        // vertex back to the first); it is clear of every other segment.
        const std::size_t M = c.word.size();
        const Rat clear_eps =
            Rat(1, 8 * 13 * static_cast<long>(M + 2) * (2 * variant + 3));
        out.v = base.v;
        append_kinks_on_run(out.v, base.v.back(), base.v.front(), delta, clear_eps);
        // Kink points come after the closing run start; rotate so the list
        // stays in traversal order: base ends at v.back(), the wrap segment
        // carries the kinks, so appended points belong after v.back().
    }

    if (!(trace_word(out, s) == c.word))
        throw GenericityError("realized word mismatch");
    if (turning_number(out) != c.rot0)
        throw GenericityError("realized rotation mismatch");
    return out;
}

long based_marker(const Polyline& p) { return turning_number(p) - 1; }

long based_taut_marker(const GroupWord& w, const SurfaceModel& s) {
    return based_marker(realize_based(w, std::nullopt, s, 0));
}

Polyline realize_based(const GroupWord& w, std::optional<long> marker,
                       const SurfaceModel& s, int variant) {
    const auto& letters = w.letters();
    const std::size_t M = letters.size();
    Schedule sc = make_schedule(M == 0 ? 1 : M, variant);
    const long m2 = static_cast<long>(M) + 2;
    const Rat eb(variant + 1, 4096L * m2 * 17);
    auto bheight = [&](std::size_t j) { return Rat(2) + Rat(long(j) + 1, m2) + eb; };
    const Rat h_start = Rat(2) + Rat(1, 2 * m2) + eb;
    const Rat h_cap = Rat(7, 2) + eb;
    const Rat x_left(0);
    const Rat x_right(s.holes + 1);

    // Based phase offset keeps lanes/depths away from free-template values.
    const Rat phase(1, 4096L * m2 * 19);

    Polyline p;
    p.v.push_back({x_left, h_start});  // vertex 0 is the basepoint
    Rat cur_h = h_start;
    for (std::size_t j = 0; j < M; ++j) {
        Letter l = letters[j];
        int hole = gen_of(l);
        if (hole > s.holes) throw InputError("word uses a hole beyond the surface");
        Rat lane = sc.lane[j] + phase;
        Rat dep = sc.depth[j] + phase;
        Rat in_x = l > 0 ? Rat(hole) - lane : Rat(hole) + lane;
        Rat out_x = l > 0 ? Rat(hole) + lane : Rat(hole) - lane;
        p.v.push_back({in_x, cur_h});
        p.v.push_back({in_x, -dep});
        p.v.push_back({out_x, -dep});
        cur_h = bheight(j);
        p.v.push_back({out_x, cur_h});
    }
    p.v.push_back({x_right, cur_h});
    p.v.push_back({x_right, h_cap});
    // Kinks on the cap top run (right to left), if a marker is requested.
    if (marker) {
        long natural;
        {
            Polyline probe = p;
            probe.v.push_back({x_left, h_cap});
            natural = based_marker(probe);
        }
        append_kinks_on_run(p.v, Point{x_right, h_cap}, Point{x_left, h_cap},
                            *marker - natural,
                            Rat(1, 4 * 17 * m2 * (2 * variant + 3)));
    }
    p.v.push_back({x_left, h_cap});

    if (!(trace_based_word(p, s) == w))
        throw GenericityError("based word mismatch");
    if (marker && based_marker(p) != *marker)
        throw GenericityError("based marker mismatch");
    return p;
}

Polyline reroute_based(const Polyline& based, const Polyline& loop,
                       const Crossing& cr) {
    // cr comes from pair_intersections(loop, based): seg_a in loop, seg_b in
    // based. The basepoint stays vertex 0.
    Polyline out;
    for (std::size_t i = 0; i <= cr.seg_b; ++i) out.v.push_back(based.v[i]);
    out.v.push_back(cr.at);
    for (std::size_t k = 1; k <= loop.size(); ++k) {
        std::size_t idx = (cr.seg_a + k) % loop.size();
        out.v.push_back(loop.pt(idx));
        if (idx == cr.seg_a) break;
    }
    out.v.push_back(cr.at);
    for (std::size_t i = cr.seg_b + 1; i < based.size(); ++i)
        out.v.push_back(based.v[i]);
    return out;
}

FramedClass class_of(const Polyline& p, const SurfaceModel& s) {
    return FramedClass{trace_word(p, s), turning_number(p)};
}

std::string dump_polyline(const Polyline& p) {
    std::ostringstream out;
    for (const Point& q : p.v) out << rat_str(q.x) << " " << rat_str(q.y) << "\n";
    return out.str();
}

}  // namespace gtlab
