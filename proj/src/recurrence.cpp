#include "recur/recurrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace recur {

namespace {

void require_bound(const Transformation& t, const PointSet& e) {
    if (e.space_size() != t.size()) {
        throw SpaceMismatch("set bound to space of size " + std::to_string(e.space_size()) +
                            ", transformation acts on " + std::to_string(t.size()) + " points");
    }
}

void require_bound(const FiniteMeasureSpace& space, const Transformation& t, const PointSet& e) {
    if (space.size() != t.size()) {
        throw SpaceMismatch("transformation acts on " + std::to_string(t.size()) +
                            " points, space has " + std::to_string(space.size()));
    }
    require_bound(t, e);
}

struct FirstReturn {
    ReturnTime time;
    int landing = -1;  // T^{n_E(x)}(x); meaningful only when time is finite
};

/// First returns for every member of e, walking each cycle once: the return
/// time of a member is the gap to the next member of e along its cycle.
std::map<int, FirstReturn> first_return_map(const Transformation& t, const PointSet& e) {
    std::map<int, FirstReturn> out;
    std::vector<char> done(static_cast<size_t>(t.size()), 0);
    for (int m : e.members()) {
        if (done[static_cast<size_t>(m)]) continue;
        // Positions of e-members along the cycle starting at m (position 0).
        std::vector<std::pair<long long, int>> hits;
        long long pos = 0;
        int cur = m;
        do {
            if (e.contains(cur)) {
                hits.emplace_back(pos, cur);
                done[static_cast<size_t>(cur)] = 1;
            }
            cur = t.apply(cur);
            ++pos;
        } while (cur != m);
        const long long period = pos;
        for (size_t k = 0; k < hits.size(); ++k) {
            const auto& [p, x] = hits[k];
            const auto& [pn, xn] = hits[(k + 1) % hits.size()];
            const long long gap = k + 1 < hits.size() ? pn - p : period - p + pn;
            out.insert_or_assign(x, FirstReturn{ReturnTime::finite(gap), xn});
        }
    }
    return out;
}

}  // namespace

ReturnTime ReturnTime::finite(long long steps) {
    if (steps < 1) {
        throw BadParam("a finite return time must be at least 1");
    }
    ReturnTime r;
    r.steps_ = steps;
    return r;
}

long long ReturnTime::steps() const {
    if (!is_finite()) {
        throw std::logic_error("steps() on an infinite return time");
    }
    return steps_;
}

ReturnTime return_time(const Transformation& t, const PointSet& e, int x) {
    require_bound(t, e);
    if (!e.contains(x)) {
        throw NotInSet("point " + std::to_string(x) + " is not a member of the set");
    }
    long long n = 1;
    int cur = t.apply(x);
    while (!e.contains(cur)) {
        if (n >= t.size()) return ReturnTime::infinite();  // unreachable for permutations
        cur = t.apply(cur);
        ++n;
    }
    return ReturnTime::finite(n);
}

ReturnTimeFunction return_times(const Transformation& t, const PointSet& e) {
    require_bound(t, e);
    ReturnTimeFunction out;
    for (const auto& [x, fr] : first_return_map(t, e)) out.emplace(x, fr.time);
    return out;
}

Rational return_integral(const FiniteMeasureSpace& space, const Transformation& t,
                         const PointSet& e) {
    require_bound(space, t, e);
    Rational sum;
    for (const auto& [x, fr] : first_return_map(t, e)) {
        if (!fr.time.is_finite()) {
            if (space.weight(x).is_positive()) {
                throw std::logic_error("infinite return time with positive weight in integral");
            }
            continue;  // infinite times on null points contribute nothing
        }
        sum += Rational(fr.time.steps()) * space.weight(x);
    }
    return sum;
}

VerificationReport kac_check(const FiniteMeasureSpace& space, const Transformation& t,
                             const PointSet& e) {
    require_bound(space, t, e);
    VerificationReport report;
    report.lhs = return_integral(space, t, e);
    report.rhs_set = invariant_closure(t, e);
    report.rhs = measure(space, report.rhs_set);
    report.equal = report.lhs == report.rhs;
    if (space.total_measure().is_positive()) {
        report.normalized_lhs = report.lhs / space.total_measure();
    }
    return report;
}

SeriesReport series_terms(const FiniteMeasureSpace& space, const Transformation& t,
                          const PointSet& e, std::optional<long long> horizon) {
    require_bound(space, t, e);
    const long long h = horizon.value_or(t.size());
    if (h < 0) {
        throw BadParam("series horizon must be nonnegative, got " + std::to_string(h));
    }

    SeriesReport report;
    report.mu_E = measure(space, e);
    report.terms_a.reserve(static_cast<size_t>(h));
    report.terms_b.reserve(static_cast<size_t>(h));
    report.partial_sums.reserve(static_cast<size_t>(h));

    // a_n: members of E not yet covered by the backward union of preimages.
    // The uncovered sets shrink as n grows, so once one is empty every later
    // term is zero.
    PointSet backward = e;         // T^{-n}E
    PointSet uncovered = e;        // E minus the running backward union
    Rational running = report.mu_E;
    for (long long n = 1; n <= h; ++n) {
        if (!uncovered.is_empty()) {
            backward = iterate_set(t, backward, -1);
            uncovered = set_difference(uncovered, backward);
        }
        Rational a_n = measure(space, uncovered);
        running += a_n;
        report.terms_a.push_back(std::move(a_n));
        report.partial_sums.push_back(running);
    }

    // b_n: the new part T^n E adds to the forward union. Once nothing new
    // appears the union is invariant and every later term is zero.
    PointSet forward = e;  // T^n E
    PointSet covered = e;  // union of T^v E, v = 0..n-1
    bool stable = false;
    for (long long n = 1; n <= h; ++n) {
        if (stable) {
            report.terms_b.emplace_back();
            continue;
        }
        forward = iterate_set(t, forward, 1);
        PointSet fresh = set_difference(forward, covered);
        stable = fresh.is_empty();
        covered = set_union(covered, fresh);
        report.terms_b.push_back(measure(space, fresh));
    }

    return report;
}

std::vector<PointSet> disjoint_decomposition(const Transformation& t, const PointSet& e) {
    require_bound(t, e);
    if (e.is_empty()) return {};  // every piece of an empty union is empty
    std::vector<PointSet> pieces{e};
    PointSet forward = e;  // T^n E
    PointSet covered = e;  // union of the pieces so far
    for (;;) {
        forward = iterate_set(t, forward, 1);
        PointSet fresh = set_difference(forward, covered);
        if (fresh.is_empty()) break;
        covered = set_union(covered, fresh);
        pieces.push_back(std::move(fresh));
    }
    return pieces;
}

InducedSystem induced_map(const FiniteMeasureSpace& space, const Transformation& t,
                          const PointSet& e) {
    require_bound(space, t, e);
    if (e.is_empty()) {
        throw EmptySet("cannot induce on the empty set");
    }
    const std::vector<int>& points = e.members();
    const auto rank_of = [&points](int x) {
        return static_cast<int>(std::lower_bound(points.begin(), points.end(), x) -
                                points.begin());
    };

    std::vector<Rational> weights;
    weights.reserve(points.size());
    for (int x : points) weights.push_back(space.weight(x));

    std::vector<int> forward(points.size());
    for (const auto& [x, fr] : first_return_map(t, e)) {
        if (!fr.time.is_finite()) {
            throw std::logic_error("induced map undefined: a point never returns");
        }
        forward[static_cast<size_t>(rank_of(x))] = rank_of(fr.landing);
    }

    FiniteMeasureSpace induced_space(std::move(weights));
    Transformation induced = make_transformation(induced_space, std::move(forward));
    return InducedSystem{std::move(induced_space), std::move(induced), points};
}

Tower kakutani_tower(const FiniteMeasureSpace& space, const Transformation& t,
                     const PointSet& e) {
    require_bound(space, t, e);
    if (e.is_empty()) {
        throw EmptySet("cannot build a tower over the empty set");
    }
    std::map<long long, std::vector<int>> bases;  // return time -> base members
    for (const auto& [x, fr] : first_return_map(t, e)) {
        if (!fr.time.is_finite()) {
            throw std::logic_error("tower undefined: a point never returns");
        }
        bases[fr.time.steps()].push_back(x);
    }
    Tower tower;
    for (auto& [r, members] : bases) {
        TowerColumn column;
        column.return_time = r;
        column.base = PointSet(std::move(members), e.space_size());
        column.levels.reserve(static_cast<size_t>(r));
        column.levels.push_back(column.base);
        for (long long k = 1; k < r; ++k) {
            column.levels.push_back(iterate_set(t, column.levels.back(), 1));
        }
        tower.columns.push_back(std::move(column));
    }
    return tower;
}

std::vector<std::pair<long long, Rational>> return_time_distribution(
    const FiniteMeasureSpace& space, const Transformation& t, const PointSet& e) {
    require_bound(space, t, e);
    std::map<long long, Rational> mass;
    for (const auto& [x, fr] : first_return_map(t, e)) {
        if (fr.time.is_finite()) mass[fr.time.steps()] += space.weight(x);
    }
    return {mass.begin(), mass.end()};
}

RecurrenceReport poincare_check(const FiniteMeasureSpace& space, const Transformation& t,
                                const PointSet& e) {
    require_bound(space, t, e);
    std::vector<int> exceptional;
    for (const auto& [x, fr] : first_return_map(t, e)) {
        if (!fr.time.is_finite() && space.weight(x).is_positive()) exceptional.push_back(x);
    }
    RecurrenceReport report;
    report.exceptional = PointSet(std::move(exceptional), e.space_size());
    report.all_return = report.exceptional.is_empty();
    return report;
}

}  // namespace recur
