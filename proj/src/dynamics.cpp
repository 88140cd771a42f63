#include "recur/dynamics.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace recur {

namespace {

void require_bound(const Transformation& t, const PointSet& a) {
    if (a.space_size() != t.size()) {
        throw SpaceMismatch("set bound to space of size " + std::to_string(a.space_size()) +
                            ", transformation acts on " + std::to_string(t.size()) + " points");
    }
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    // (f o g)[i] = f[g[i]]
    std::vector<int> out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[static_cast<size_t>(g[i])];
    return out;
}

}  // namespace

Transformation make_transformation(const FiniteMeasureSpace& space, std::vector<int> forward) {
    const int n = space.size();
    if (static_cast<int>(forward.size()) != n) {
        throw SpaceMismatch("map length " + std::to_string(forward.size()) +
                            " does not match space size " + std::to_string(n));
    }
    std::vector<int> inverse(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int img = forward[static_cast<size_t>(i)];
        if (img < 0 || img >= n) {
            throw NotBijective("map is not a bijection: entry " + std::to_string(i) +
                               " maps to " + std::to_string(img));
        }
        if (inverse[static_cast<size_t>(img)] != -1) {
            throw NotBijective("map is not a bijection: " + std::to_string(img) +
                               " has two preimages");
        }
        inverse[static_cast<size_t>(img)] = i;
    }
    for (int i = 0; i < n; ++i) {
        const int img = forward[static_cast<size_t>(i)];
        if (space.weight(i) != space.weight(img)) {
            throw NotMeasurePreserving("weight mismatch at index " + std::to_string(i) + ": " +
                                       space.weight(i).str() + " maps onto " +
                                       space.weight(img).str());
        }
    }
    return Transformation(std::move(forward), std::move(inverse));
}

std::vector<int> power_map(const Transformation& t, long long n) {
    const size_t size = static_cast<size_t>(t.size());
    std::vector<int> result(size);
    for (size_t i = 0; i < size; ++i) result[i] = static_cast<int>(i);
    std::vector<int> base = n >= 0 ? t.forward() : t.inverse();
    unsigned long long e =
        n >= 0 ? static_cast<unsigned long long>(n) : 0ULL - static_cast<unsigned long long>(n);
    while (e > 0) {
        if (e & 1ULL) result = compose(base, result);
        e >>= 1ULL;
        if (e > 0) base = compose(base, base);
    }
    return result;
}

PointSet iterate_set(const Transformation& t, const PointSet& a, long long n) {
    require_bound(t, a);
    const std::vector<int> pow = power_map(t, n);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(a.size()));
    for (int m : a.members()) out.push_back(pow[static_cast<size_t>(m)]);
    std::sort(out.begin(), out.end());
    return PointSet::from_sorted(std::move(out), a.space_size());
}

OrbitInfo orbit(const Transformation& t, int x) {
    if (x < 0 || x >= t.size()) {
        throw IndexOutOfRange("point " + std::to_string(x) + " outside space of size " +
                              std::to_string(t.size()));
    }
    std::vector<int> points;
    int cur = x;
    do {
        points.push_back(cur);
        cur = t.apply(cur);
    } while (cur != x);
    const int period = static_cast<int>(points.size());
    std::sort(points.begin(), points.end());
    return OrbitInfo{PointSet::from_sorted(std::move(points), t.size()), period};
}

PointSet invariant_closure(const Transformation& t, const PointSet& e) {
    require_bound(t, e);
    std::vector<char> seen(static_cast<size_t>(t.size()), 0);
    std::vector<int> out;
    for (int m : e.members()) {
        if (seen[static_cast<size_t>(m)]) continue;
        int cur = m;
        do {
            seen[static_cast<size_t>(cur)] = 1;
            out.push_back(cur);
            cur = t.apply(cur);
        } while (cur != m);
    }
    std::sort(out.begin(), out.end());
    return PointSet::from_sorted(std::move(out), e.space_size());
}

bool is_ergodic(const FiniteMeasureSpace& space, const Transformation& t) {
    if (space.size() != t.size()) {
        throw SpaceMismatch("transformation acts on " + std::to_string(t.size()) +
                            " points, space has " + std::to_string(space.size()));
    }
    std::vector<char> seen(static_cast<size_t>(t.size()), 0);
    int positive_orbits = 0;
    for (int i = 0; i < t.size(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        bool positive = false;
        int cur = i;
        do {
            seen[static_cast<size_t>(cur)] = 1;
            if (space.weight(cur).is_positive()) positive = true;
            cur = t.apply(cur);
        } while (cur != i);
        if (positive && ++positive_orbits > 1) return false;
    }
    return positive_orbits == 1;
}

System make_cycle(int n, const Rational& total) {
    if (n <= 0) {
        throw BadParam("cycle size must be at least 1, got " + std::to_string(n));
    }
    if (!total.is_positive()) {
        throw BadParam("cycle total measure must be positive, got " + total.str());
    }
    std::vector<Rational> weights(static_cast<size_t>(n), total / Rational(n));
    std::vector<int> forward(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) forward[static_cast<size_t>(i)] = (i + 1) % n;
    FiniteMeasureSpace space(std::move(weights));
    Transformation map = make_transformation(space, std::move(forward));
    return System{std::move(space), std::move(map)};
}

System make_random_permutation(int n, std::uint64_t seed, long long max_denominator) {
    if (n <= 0) {
        throw BadParam("permutation size must be at least 1, got " + std::to_string(n));
    }
    if (max_denominator <= 0) {
        throw BadParam("max denominator must be at least 1");
    }
    std::mt19937_64 rng(seed);

    // Fisher-Yates; modulo bounding keeps the stream implementation-independent.
    std::vector<int> forward(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) forward[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(forward[static_cast<size_t>(i)], forward[static_cast<size_t>(j)]);
    }

    // One weight per cycle, constant along it; zero weights model null sets.
    std::vector<Rational> weights(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        Rational w;
        if (rng() % 8 != 0) {
            const long long num = 1 + static_cast<long long>(rng() % 999);
            const long long den =
                1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(max_denominator));
            w = Rational(BigInt(num), BigInt(den));
        }
        int cur = i;
        do {
            seen[static_cast<size_t>(cur)] = 1;
            weights[static_cast<size_t>(cur)] = w;
            cur = forward[static_cast<size_t>(cur)];
        } while (cur != i);
    }

    FiniteMeasureSpace space(std::move(weights));
    Transformation map = make_transformation(space, std::move(forward));
    return System{std::move(space), std::move(map)};
}

System make_cat_map(int q) {
    if (q <= 0) {
        throw BadParam("cat map grid order must be at least 1, got " + std::to_string(q));
    }
    const long long cells = static_cast<long long>(q) * q;
    std::vector<int> forward(static_cast<size_t>(cells));
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            const int ii = (2 * i + j) % q;
            const int jj = (i + j) % q;
            forward[static_cast<size_t>(i) * static_cast<size_t>(q) + static_cast<size_t>(j)] =
                ii * q + jj;
        }
    }
    std::vector<Rational> weights(static_cast<size_t>(cells), Rational(BigInt(1), BigInt(cells)));
    FiniteMeasureSpace space(std::move(weights));
    Transformation map = make_transformation(space, std::move(forward));
    return System{std::move(space), std::move(map)};
}

}  // namespace recur
