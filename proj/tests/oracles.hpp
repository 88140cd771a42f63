/** @file oracles.hpp
 *  @brief Naive reference implementations the tests check the library against.
 *
 *  Every oracle recomputes its answer by the most direct route available —
 *  stepping the map one application at a time, building each union from
 *  scratch — deliberately sharing no algorithm with the library code under
 *  test.
 */
#pragma once

#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "recur/dynamics.hpp"
#include "recur/iet.hpp"

namespace oracle {

using recur::BigInt;
using recur::FiniteMeasureSpace;
using recur::PointSet;
using recur::Rational;
using recur::Transformation;

/// Least n >= 1 with T^n x in e, stepping one application at a time.
inline long long return_time(const Transformation& t, const PointSet& e, int x) {
    int cur = x;
    for (long long n = 1; n <= static_cast<long long>(t.size()) + 1; ++n) {
        cur = t.apply(cur);
        if (e.contains(cur)) return n;
    }
    return -1;  // unreachable: permutations are pointwise periodic
}

inline Rational return_integral(const FiniteMeasureSpace& space, const Transformation& t,
                                const PointSet& e) {
    Rational sum;
    for (int x : e.members()) {
        sum += Rational(return_time(t, e, x)) * space.weight(x);
    }
    return sum;
}

inline Rational measure_of(const FiniteMeasureSpace& space, const std::set<int>& a) {
    Rational sum;
    for (int x : a) sum += space.weight(x);
    return sum;
}

/// Image of a under T^n, one application per step.
inline std::set<int> step_image(const Transformation& t, const std::set<int>& a, long long n) {
    std::set<int> cur = a;
    for (long long k = 0; k < std::llabs(n); ++k) {
        std::set<int> next;
        for (int x : cur) next.insert(n > 0 ? t.apply(x) : t.apply_inverse(x));
        cur.swap(next);
    }
    return cur;
}

/// Forward images of e alone, iterated until the union stops growing.
inline PointSet forward_closure(const Transformation& t, const PointSet& e) {
    std::set<int> acc(e.members().begin(), e.members().end());
    for (;;) {
        std::set<int> grown = acc;
        for (int x : acc) grown.insert(t.apply(x));
        if (grown == acc) break;
        acc.swap(grown);
    }
    return PointSet(std::vector<int>(acc.begin(), acc.end()), e.space_size());
}

/// U_{v=1..n} T^{-v}e, each image built from scratch.
inline std::set<int> backward_union(const Transformation& t, const PointSet& e, long long n) {
    std::set<int> members(e.members().begin(), e.members().end());
    std::set<int> uni;
    for (long long v = 1; v <= n; ++v) {
        for (int x : step_image(t, members, -v)) uni.insert(x);
    }
    return uni;
}

/// U_{v=0..n-1} T^v e.
inline std::set<int> forward_union(const Transformation& t, const PointSet& e, long long n) {
    std::set<int> members(e.members().begin(), e.members().end());
    std::set<int> uni;
    for (long long v = 0; v < n; ++v) {
        for (int x : step_image(t, members, v)) uni.insert(x);
    }
    return uni;
}

/// a_n = mu((U_{v=1..n} T^{-v}e)^c n e).
inline Rational term_a(const FiniteMeasureSpace& space, const Transformation& t, const PointSet& e,
                       long long n) {
    const std::set<int> covered = backward_union(t, e, n);
    std::set<int> piece;
    for (int x : e.members()) {
        if (!covered.count(x)) piece.insert(x);
    }
    return measure_of(space, piece);
}

/// b_n = mu((U_{v=0..n-1} T^v e)^c n T^n e).
inline Rational term_b(const FiniteMeasureSpace& space, const Transformation& t, const PointSet& e,
                       long long n) {
    const std::set<int> covered = forward_union(t, e, n);
    std::set<int> members(e.members().begin(), e.members().end());
    std::set<int> piece;
    for (int x : step_image(t, members, n)) {
        if (!covered.count(x)) piece.insert(x);
    }
    return measure_of(space, piece);
}

/// |{n in 1..horizon : x not in U_{v=1..n} T^{-v}e}| by literal union building.
inline long long uncovered_count(const Transformation& t, const PointSet& e, int x,
                                 long long horizon) {
    const std::set<int> members(e.members().begin(), e.members().end());
    std::set<int> uni;
    long long count = 0;
    for (long long n = 1; n <= horizon; ++n) {
        for (int y : step_image(t, members, -n)) uni.insert(y);
        if (!uni.count(x)) ++count;
    }
    return count;
}

/// Torus cell map (i,j) -> (2i+j mod q, i+j mod q), evaluated per cell.
inline std::vector<int> cat_forward(int q) {
    std::vector<int> forward(static_cast<size_t>(q) * static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            forward[static_cast<size_t>(i * q + j)] = ((2 * i + j) % q) * q + (i + j) % q;
        }
    }
    return forward;
}

/// Exchange image of x by the prefix-sum translation formula.
inline Rational iet_apply_prefix(const std::vector<Rational>& lengths,
                                 const std::vector<int>& arrangement, const Rational& x) {
    const int m = static_cast<int>(lengths.size());
    std::vector<Rational> image_start(static_cast<size_t>(m));
    Rational acc;
    for (int slot = 0; slot < m; ++slot) {
        image_start[static_cast<size_t>(arrangement[static_cast<size_t>(slot)])] = acc;
        acc += lengths[static_cast<size_t>(arrangement[static_cast<size_t>(slot)])];
    }
    Rational start;
    for (int i = 0; i < m; ++i) {
        const Rational end = start + lengths[static_cast<size_t>(i)];
        if (x >= start && x < end) {
            return image_start[static_cast<size_t>(i)] + (x - start);
        }
        start = end;
    }
    return Rational(-1);  // outside [0, total)
}

/// lcm of the denominators of the given fractions of the total.
inline BigInt lcm_of_denominators(const std::vector<Rational>& points, const Rational& total) {
    BigInt acc = 1;
    for (const Rational& p : points) {
        const BigInt den = (p / total).denominator();
        acc = boost::multiprecision::lcm(acc, den);
    }
    return acc;
}

/// Uniformly random subset: each point independently with probability 1/2.
inline PointSet random_subset(std::mt19937_64& rng, int space_size) {
    std::vector<int> members;
    for (int i = 0; i < space_size; ++i) {
        if (rng() & 1) members.push_back(i);
    }
    return PointSet(std::move(members), space_size);
}

inline PointSet random_nonempty_subset(std::mt19937_64& rng, int space_size) {
    for (;;) {
        PointSet s = random_subset(rng, space_size);
        if (!s.is_empty()) return s;
    }
}

}  // namespace oracle
