#include "maxexp/cell_dp.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

#include "maxexp/errors.hpp"

namespace maxexp {

CellFrame unit_frame() { return CellFrame{AxisRect{Rat(0), Rat(0), Rat(1), Rat(1)}}; }

Rat point_anchor_distance(const CellFrame& frame, const Point& p, Anchor a) {
    return a == Anchor::Bottom ? Rat(p.y - frame.cell.y0) : Rat(frame.cell.y1 - p.y);
}

std::vector<ClassifiedRange> classify(const CellFrame& frame,
                                      const std::vector<std::pair<int, AxisRect>>& ranges) {
    const AxisRect& c = frame.cell;
    if (c.width() != c.height()) throw InputError("cell frame must be square");
    std::vector<ClassifiedRange> out;
    out.reserve(ranges.size());
    for (const auto& [id, r] : ranges) {
        if (!is_square(r)) throw InputError("range is not a square");
        if (r.width() < c.width()) throw InputError("range smaller than the cell");
        if (r.x1 < c.x0 || r.x0 > c.x1 || r.y1 < c.y0 || r.y0 > c.y1)
            throw InputError("range does not intersect the cell");
        ClassifiedRange cr;
        cr.range_id = id;
        // A square at least as wide as the cell that meets it must reach the
        // left or the right cell edge; left wins ties (Type-0).
        cr.type1 = r.x0 > c.x0;
        cr.anchor = (r.y0 <= c.y0) ? Anchor::Bottom : Anchor::Top;
        cr.x_begin = std::max(r.x0, c.x0);
        cr.x_end = std::min(r.x1, c.x1);
        cr.anchor_distance = cr.anchor == Anchor::Bottom ? Rat(std::min(r.y1, c.y1) - c.y0)
                                                         : Rat(c.y1 - std::max(r.y0, c.y0));
        out.push_back(std::move(cr));
    }
    return out;
}

int closer(const CellFrame& frame, const std::vector<Point>& points, int q, int p, Anchor a) {
    if (q == kSentinel) return p;
    if (point_anchor_distance(frame, points[p], a) < point_anchor_distance(frame, points[q], a))
        return p;
    return q;
}

int farther(const CellFrame&, const std::vector<ClassifiedRange>& classified, int Q, int r,
            Anchor a) {
    const ClassifiedRange& cand = classified[r];
    if (!cand.type1 || cand.anchor != a) return Q;
    if (Q == kSentinel) return r;
    return cand.anchor_distance > classified[Q].anchor_distance ? r : Q;
}

namespace {

bool rect_contains(const AxisRect& r, const Point& p) {
    return r.x0 <= p.x && p.x <= r.x1 && r.y0 <= p.y && p.y <= r.y1;
}

struct Entry {
    long value;
    std::uint8_t choice;  // 0: skip/keep, 1: expose/delete
};

// The whole DP runs in the canonical unit frame; callers' cells are mapped
// onto it by an exact affine rescale.
struct CellSolver {
    CellFrame frame = unit_frame();
    std::vector<Point> pts;               // rescaled positions, local ids
    std::vector<int> pt_caller_id;
    std::vector<ClassifiedRange> t0, t1;  // split by type, local ids
    std::vector<AxisRect> t0_rect, t1_rect;  // rescaled rects for containment
    std::vector<int> t0_caller_id, t1_caller_id;
    std::vector<std::vector<char>> c0, c1;   // c0[r][p]: t0[r] contains point p
    std::vector<Event> events;
    int kmax = 0;
    std::unordered_map<std::uint64_t, Entry> memo;

    std::uint64_t key(int i, int k, int q0, int q1, int Q0, int Q1) const {
        auto f = [](int v) { return static_cast<std::uint64_t>(v + 1); };
        std::uint64_t kk = f(Q1);
        kk = kk << 10 | f(Q0);
        kk = kk << 10 | f(q1);
        kk = kk << 10 | f(q0);
        kk = kk << 6 | static_cast<std::uint64_t>(k);
        kk = kk << 12 | static_cast<std::uint64_t>(i);
        return kk;
    }

    bool forbidden(int p, int Q0, int Q1) const {
        return (Q0 != kSentinel && c1[Q0][p]) || (Q1 != kSentinel && c1[Q1][p]);
    }

    // Active undeleted Type-0 ranges containing p, reconstructed from the two
    // closest exposed points: anything containing q0 or q1 was already paid.
    std::vector<int> charge_set(int p, const Rat& x, int q0, int q1) const {
        std::vector<int> out;
        for (int r = 0; r < static_cast<int>(t0.size()); ++r) {
            if (t0[r].x_end < x || !c0[r][p]) continue;
            if (q0 != kSentinel && c0[r][q0]) continue;
            if (q1 != kSentinel && c0[r][q1]) continue;
            out.push_back(r);
        }
        return out;
    }

    std::pair<int, int> expose_update(int p, int q0, int q1) const {
        return {closer(frame, pts, q0, p, Anchor::Bottom), closer(frame, pts, q1, p, Anchor::Top)};
    }

    std::pair<int, int> keep_update(int r, int Q0, int Q1) const {
        return {farther(frame, t1, Q0, r, Anchor::Bottom), farther(frame, t1, Q1, r, Anchor::Top)};
    }

    long rec(int i, int k, int q0, int q1, int Q0, int Q1) {
        if (i == static_cast<int>(events.size())) return 0;
        std::uint64_t kk = key(i, k, q0, q1, Q0, Q1);
        if (auto it = memo.find(kk); it != memo.end()) return it->second.value;

        const Event& e = events[i];
        long best;
        std::uint8_t choice = 0;
        if (!e.is_begin) {
            const int p = e.id;
            best = rec(i + 1, k, q0, q1, Q0, Q1);
            if (!forbidden(p, Q0, Q1)) {
                const int ki = static_cast<int>(charge_set(p, e.x, q0, q1).size());
                if (ki <= k) {
                    auto [nq0, nq1] = expose_update(p, q0, q1);
                    long v = rec(i + 1, k - ki, nq0, nq1, Q0, Q1) + 1;
                    if (v > best) {
                        best = v;
                        choice = 1;
                    }
                }
            }
        } else {
            const int r = e.id;
            auto [nQ0, nQ1] = keep_update(r, Q0, Q1);
            best = rec(i + 1, k, q0, q1, nQ0, nQ1);
            if (k >= 1) {
                long v = rec(i + 1, k - 1, q0, q1, Q0, Q1);
                if (v > best) {
                    best = v;
                    choice = 1;
                }
            }
        }
        memo.emplace(kk, Entry{best, choice});
        return best;
    }
};

CellSolver build_solver(const CellFrame& frame, const std::vector<CellPoint>& points,
                        const std::vector<CellRange>& ranges, int kmax) {
    const AxisRect& c = frame.cell;
    if (c.width() != c.height()) throw InputError("cell frame must be square");
    const Rat side = c.width();
    if (kmax < 0 || kmax > 60) throw InputError("cell budget out of supported range");

    CellSolver s;
    s.kmax = kmax;

    auto tx = [&](const Rat& x) { return Rat((x - c.x0) / side); };
    auto ty = [&](const Rat& y) { return Rat((y - c.y0) / side); };

    for (const auto& cp : points) {
        if (!(c.x0 <= cp.pos.x && cp.pos.x <= c.x1 && c.y0 <= cp.pos.y && cp.pos.y <= c.y1))
            throw InputError("point outside the cell");
        s.pts.push_back(Point{tx(cp.pos.x), ty(cp.pos.y)});
        s.pt_caller_id.push_back(cp.id);
    }

    // Ranges containing no cell point never need deleting; drop them up front.
    std::vector<std::pair<int, AxisRect>> kept;  // local tag -> rescaled rect
    std::vector<AxisRect> kept_rect;
    std::vector<int> kept_caller;
    for (const auto& rr : ranges) {
        AxisRect scaled{tx(rr.rect.x0), ty(rr.rect.y0), tx(rr.rect.x1), ty(rr.rect.y1)};
        bool hit = false;
        for (const auto& p : s.pts)
            if (rect_contains(scaled, p)) {
                hit = true;
                break;
            }
        if (!is_square(rr.rect)) throw InputError("range is not a square");
        if (rr.rect.width() < side) throw InputError("range smaller than the cell");
        if (rr.rect.x1 < c.x0 || rr.rect.x0 > c.x1 || rr.rect.y1 < c.y0 || rr.rect.y0 > c.y1)
            throw InputError("range does not intersect the cell");
        if (!hit) continue;
        kept.push_back({static_cast<int>(kept_rect.size()), scaled});
        kept_rect.push_back(scaled);
        kept_caller.push_back(rr.id);
    }

    auto classified = classify(unit_frame(), kept);
    for (std::size_t i = 0; i < classified.size(); ++i) {
        ClassifiedRange cr = classified[i];
        const int caller = kept_caller[cr.range_id];
        const AxisRect& rect = kept_rect[cr.range_id];
        std::vector<char> row(s.pts.size(), 0);
        for (std::size_t p = 0; p < s.pts.size(); ++p) row[p] = rect_contains(rect, s.pts[p]);
        if (cr.type1) {
            cr.range_id = static_cast<int>(s.t1.size());
            s.t1.push_back(cr);
            s.t1_rect.push_back(rect);
            s.t1_caller_id.push_back(caller);
            s.c1.push_back(std::move(row));
        } else {
            cr.range_id = static_cast<int>(s.t0.size());
            s.t0.push_back(cr);
            s.t0_rect.push_back(rect);
            s.t0_caller_id.push_back(caller);
            s.c0.push_back(std::move(row));
        }
    }

    if (s.pts.size() >= 1000 || s.t1.size() >= 1000)
        throw InputError("cell instance too large for the packed DP state");

    for (int p = 0; p < static_cast<int>(s.pts.size()); ++p)
        s.events.push_back(Event{s.pts[p].x, false, p});
    for (int r = 0; r < static_cast<int>(s.t1.size()); ++r)
        s.events.push_back(Event{s.t1[r].x_begin, true, r});
    std::sort(s.events.begin(), s.events.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.is_begin != b.is_begin) return a.is_begin;  // begins first
        return a.id < b.id;
    });
    return s;
}

}  // namespace

CellSolveResult solve_cell(const CellFrame& frame, const std::vector<CellPoint>& points,
                           const std::vector<CellRange>& ranges, int kmax) {
    CellSolver s = build_solver(frame, points, ranges, kmax);

    CellSolveResult result;
    result.best.resize(kmax + 1);
    result.deleted.resize(kmax + 1);
    result.exposed.resize(kmax + 1);

    for (int b = 0; b <= kmax; ++b) {
        result.best[b] = s.rec(0, b, kSentinel, kSentinel, kSentinel, kSentinel);
        if (b > 0 && result.best[b] < result.best[b - 1])
            throw InternalError("cell optimum decreased with a larger budget");

        // Replay the recorded choices to extract the deleted set.
        std::set<int> deleted_t0, deleted_t1;
        int i = 0, k = b, q0 = kSentinel, q1 = kSentinel, Q0 = kSentinel, Q1 = kSentinel;
        while (i < static_cast<int>(s.events.size())) {
            const Event& e = s.events[i];
            const Entry& entry = s.memo.at(s.key(i, k, q0, q1, Q0, Q1));
            if (!e.is_begin) {
                if (entry.choice == 1) {
                    const auto charges = s.charge_set(e.id, e.x, q0, q1);
                    for (int r : charges)
                        if (!deleted_t0.insert(r).second)
                            throw InternalError("type-0 range charged twice");
                    k -= static_cast<int>(charges.size());
                    std::tie(q0, q1) = s.expose_update(e.id, q0, q1);
                }
            } else {
                if (entry.choice == 1) {
                    if (!deleted_t1.insert(e.id).second)
                        throw InternalError("type-1 range deleted twice");
                    k -= 1;
                } else {
                    std::tie(Q0, Q1) = s.keep_update(e.id, Q0, Q1);
                }
            }
            ++i;
        }
        if (k < 0) throw InternalError("certificate replay overspent the budget");

        std::vector<char> gone0(s.t0.size(), 0), gone1(s.t1.size(), 0);
        std::vector<int> deleted_ids;
        for (int r : deleted_t0) {
            gone0[r] = 1;
            deleted_ids.push_back(s.t0_caller_id[r]);
        }
        for (int r : deleted_t1) {
            gone1[r] = 1;
            deleted_ids.push_back(s.t1_caller_id[r]);
        }
        if (static_cast<int>(deleted_ids.size()) > b)
            throw InternalError("certificate exceeds its budget");

        // Re-validate: recomputed exposure must reproduce the DP optimum.
        std::vector<int> exposed_ids;
        for (int p = 0; p < static_cast<int>(s.pts.size()); ++p) {
            bool covered = false;
            for (int r = 0; r < static_cast<int>(s.t0.size()) && !covered; ++r)
                if (!gone0[r] && s.c0[r][p]) covered = true;
            for (int r = 0; r < static_cast<int>(s.t1.size()) && !covered; ++r)
                if (!gone1[r] && s.c1[r][p]) covered = true;
            if (!covered) exposed_ids.push_back(s.pt_caller_id[p]);
        }
        if (static_cast<long>(exposed_ids.size()) != result.best[b])
            throw InternalError("certificate exposure does not match the DP value");

        std::sort(deleted_ids.begin(), deleted_ids.end());
        std::sort(exposed_ids.begin(), exposed_ids.end());
        result.deleted[b] = std::move(deleted_ids);
        result.exposed[b] = std::move(exposed_ids);
    }
    return result;
}

long audit_cell_state_compression(const CellFrame& frame, const std::vector<CellPoint>& points,
                                  const std::vector<CellRange>& ranges, unsigned seed,
                                  int paths) {
    CellSolver s = build_solver(frame, points, ranges, 60);
    std::mt19937 rng(seed);
    long checked = 0;

    for (int walk = 0; walk < paths; ++walk) {
        int q0 = kSentinel, q1 = kSentinel, Q0 = kSentinel, Q1 = kSentinel;
        std::set<int> paid_t0, kept_t1;
        std::vector<int> exposed_pts;

        for (int i = 0; i < static_cast<int>(s.events.size()); ++i) {
            const Event& e = s.events[i];

            // Reconstructed paid set vs. the truth carried along the path.
            for (int r = 0; r < static_cast<int>(s.t0.size()); ++r) {
                if (s.t0[r].x_end < e.x) continue;
                bool reconstructed = (q0 != kSentinel && s.c0[r][q0]) ||
                                     (q1 != kSentinel && s.c0[r][q1]);
                bool truth = paid_t0.count(r) > 0;
                if (reconstructed != truth)
                    throw InternalError("paid-range reconstruction mismatch");
            }
            // Reconstructed forbidden set vs. membership in any kept range.
            for (int p = 0; p < static_cast<int>(s.pts.size()); ++p) {
                if (s.pts[p].x < e.x) continue;
                bool truth = false;
                for (int r : kept_t1)
                    if (s.c1[r][p]) {
                        truth = true;
                        break;
                    }
                if (s.forbidden(p, Q0, Q1) != truth)
                    throw InternalError("forbidden-point reconstruction mismatch");
            }
            ++checked;

            if (!e.is_begin) {
                bool can_expose = !s.forbidden(e.id, Q0, Q1);
                if (can_expose && rng() % 2 == 0) {
                    for (int r : s.charge_set(e.id, e.x, q0, q1)) paid_t0.insert(r);
                    std::tie(q0, q1) = s.expose_update(e.id, q0, q1);
                    exposed_pts.push_back(e.id);
                }
            } else {
                if (rng() % 2 == 0) {
                    std::tie(Q0, Q1) = s.keep_update(e.id, Q0, Q1);
                    kept_t1.insert(e.id);
                }
                // else: deleted; nothing to record in the compressed state
            }
        }
    }
    return checked;
}

}  // namespace maxexp
