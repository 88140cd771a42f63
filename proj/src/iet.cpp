#include "recur/iet.hpp"

#include <algorithm>
#include <string>

#include "recur/recurrence.hpp"

namespace recur {

namespace {

// Generous guard against accidental grid explosions; q cells materialize as a
// q-point measure space.
constexpr long long kMaxGridOrder = 1'000'000;

void check_arrangement(const std::vector<int>& arrangement, size_t m) {
    std::vector<char> seen(m, 0);
    for (int v : arrangement) {
        if (v < 0 || static_cast<size_t>(v) >= m || seen[static_cast<size_t>(v)]) {
            throw BadPermutation("arrangement is not a permutation of 0.." +
                                 std::to_string(m - 1));
        }
        seen[static_cast<size_t>(v)] = 1;
    }
}

BigInt lcm_with(const BigInt& a, const BigInt& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace

Iet::Iet(std::vector<Rational> lengths, std::vector<int> arrangement)
    : lengths_(std::move(lengths)), arrangement_(std::move(arrangement)) {
    if (lengths_.empty() || lengths_.size() != arrangement_.size()) {
        throw BadPermutation("an exchange needs matching, nonempty lengths and arrangement");
    }
    check_arrangement(arrangement_, lengths_.size());
    for (size_t i = 0; i < lengths_.size(); ++i) {
        if (!lengths_[i].is_positive()) {
            throw NonpositiveLength("interval " + std::to_string(i) +
                                    " has nonpositive length " + lengths_[i].str());
        }
    }

    const size_t m = lengths_.size();
    domain_starts_.resize(m);
    Rational acc;
    for (size_t i = 0; i < m; ++i) {
        domain_starts_[i] = acc;
        acc += lengths_[i];
    }
    total_ = acc;

    // Image start of the interval in slot k is the sum of the lengths of the
    // intervals in earlier slots.
    displacements_.resize(m);
    Rational image_acc;
    for (size_t k = 0; k < m; ++k) {
        const int interval = arrangement_[k];
        displacements_[static_cast<size_t>(interval)] =
            image_acc - domain_starts_[static_cast<size_t>(interval)];
        image_acc += lengths_[static_cast<size_t>(interval)];
    }
}

Rational Iet::apply(const Rational& x) const {
    if (x.is_negative() || !(x < total_)) {
        throw OutOfDomain("point " + x.str() + " outside [0, " + total_.str() + ")");
    }
    // Last interval whose start is <= x.
    int lo = 0;
    int hi = interval_count() - 1;
    while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        if (domain_starts_[static_cast<size_t>(mid)] <= x) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return x + displacements_[static_cast<size_t>(lo)];
}

Iet rotation(const Rational& alpha, const Rational& total) {
    if (!alpha.is_positive() || !(alpha < total)) {
        throw BadParam("rotation angle must satisfy 0 < alpha < total, got alpha = " +
                       alpha.str() + ", total = " + total.str());
    }
    return Iet({total - alpha, alpha}, {1, 0});
}

IntervalSet::IntervalSet(std::vector<std::pair<Rational, Rational>> intervals,
                         const Rational& total)
    : intervals_(std::move(intervals)), total_(total) {
    if (!total_.is_positive()) {
        throw BadParam("interval set total must be positive, got " + total_.str());
    }
    std::sort(intervals_.begin(), intervals_.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    for (size_t i = 0; i < intervals_.size(); ++i) {
        const auto& [a, b] = intervals_[i];
        if (!(a < b)) {
            throw BadParam("interval " + std::to_string(i) + " is degenerate: [" + a.str() +
                           ", " + b.str() + ")");
        }
        if (a.is_negative() || total_ < b) {
            throw BadParam("interval [" + a.str() + ", " + b.str() + ") outside [0, " +
                           total_.str() + ")");
        }
        if (i > 0 && intervals_[i - 1].second > a) {
            throw BadParam("intervals " + std::to_string(i - 1) + " and " + std::to_string(i) +
                           " overlap");
        }
    }
}

IntervalSet IntervalSet::full(const Rational& total) {
    return IntervalSet({{Rational(0), total}}, total);
}

Rational IntervalSet::total_length() const {
    Rational sum;
    for (const auto& [a, b] : intervals_) sum += b - a;
    return sum;
}

long long Compilation::cell_of(const Rational& x) const {
    // floor(x / cell_width); exact for on-grid points, and a containing-cell
    // lookup for interior points such as midpoints.
    const Rational ratio = x / cell_width;
    return static_cast<long long>(ratio.numerator() / ratio.denominator());
}

std::pair<Compilation, std::vector<PointSet>> compile_iet(const Iet& iet,
                                                          const std::vector<IntervalSet>& sets) {
    const Rational& total = iet.total();

    // q = lcm of the denominators of every breakpoint and set endpoint,
    // scaled to fractions of the total. Minimal by construction; no padding.
    BigInt q(1);
    const auto fold_in = [&q, &total](const Rational& point) {
        q = lcm_with(q, (point / total).denominator());
    };
    for (int i = 1; i < iet.interval_count(); ++i) fold_in(iet.domain_start(i));
    for (const IntervalSet& s : sets) {
        if (s.total() != total) {
            throw SpaceMismatch("interval set lives on [0, " + s.total().str() +
                                "), exchange on [0, " + total.str() + ")");
        }
        for (const auto& [a, b] : s.intervals()) {
            fold_in(a);
            fold_in(b);
        }
    }
    if (q > kMaxGridOrder) {
        throw BadParam("grid order " + q.str() + " exceeds the supported maximum " +
                       std::to_string(kMaxGridOrder));
    }
    const long long grid = static_cast<long long>(q);
    const Rational cell_width = total / Rational(grid);

    const auto cell_index = [&cell_width](const Rational& x) {
        const Rational ratio = x / cell_width;
        if (ratio.denominator() != 1) {
            throw std::logic_error("point " + x.str() + " is not on the compilation grid");
        }
        return static_cast<long long>(ratio.numerator());
    };

    // Every cell sits inside one interval, and the interval's translation is a
    // whole number of cells, so the compiled map is a permutation of cells.
    std::vector<int> forward(static_cast<size_t>(grid));
    for (int i = 0; i < iet.interval_count(); ++i) {
        const long long first = cell_index(iet.domain_start(i));
        const long long past = i + 1 < iet.interval_count()
                                   ? cell_index(iet.domain_start(i + 1))
                                   : grid;
        const Rational shift_cells = iet.displacement(i) / cell_width;
        if (shift_cells.denominator() != 1) {
            throw std::logic_error("interval displacement is not a whole number of cells");
        }
        const long long shift = static_cast<long long>(shift_cells.numerator());
        for (long long k = first; k < past; ++k) {
            forward[static_cast<size_t>(k)] = static_cast<int>(k + shift);
        }
    }

    FiniteMeasureSpace space(std::vector<Rational>(static_cast<size_t>(grid), cell_width));
    Transformation map = make_transformation(space, std::move(forward));

    std::vector<PointSet> compiled_sets;
    compiled_sets.reserve(sets.size());
    for (const IntervalSet& s : sets) {
        std::vector<int> cells;
        for (const auto& [a, b] : s.intervals()) {
            const long long first = cell_index(a);
            const long long past = cell_index(b);
            for (long long k = first; k < past; ++k) cells.push_back(static_cast<int>(k));
        }
        compiled_sets.push_back(PointSet::from_sorted(std::move(cells), static_cast<int>(grid)));
    }

    Compilation compilation{grid, cell_width, std::move(space), std::move(map)};
    return {std::move(compilation), std::move(compiled_sets)};
}

Iet induced_iet(const Iet& iet, const IntervalSet& e) {
    if (e.is_empty()) {
        throw EmptySet("cannot induce an exchange on an empty interval set");
    }
    auto [compilation, cells] = compile_iet(iet, {e});
    const PointSet& e_cells = cells.front();
    const InducedSystem induced = induced_map(compilation.space, compilation.map, e_cells);

    // Rank r of e's cells maps to rank s(r). Maximal runs with s(r+1) =
    // s(r) + 1 move rigidly, so each run is one interval of the induced
    // exchange on [0, length of e).
    const std::vector<int>& fwd = induced.map.forward();
    const int count = static_cast<int>(fwd.size());
    std::vector<int> run_start{0};
    for (int r = 1; r < count; ++r) {
        if (fwd[static_cast<size_t>(r)] != fwd[static_cast<size_t>(r - 1)] + 1) {
            run_start.push_back(r);
        }
    }

    const int runs = static_cast<int>(run_start.size());
    std::vector<Rational> lengths(static_cast<size_t>(runs));
    std::vector<int> order(static_cast<size_t>(runs));
    for (int i = 0; i < runs; ++i) {
        const int past = i + 1 < runs ? run_start[static_cast<size_t>(i + 1)] : count;
        lengths[static_cast<size_t>(i)] =
            Rational(past - run_start[static_cast<size_t>(i)]) * compilation.cell_width;
        order[static_cast<size_t>(i)] = i;
    }
    // Arrangement: runs sorted by where their images start.
    std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return fwd[static_cast<size_t>(run_start[static_cast<size_t>(lhs)])] <
               fwd[static_cast<size_t>(run_start[static_cast<size_t>(rhs)])];
    });
    return Iet(std::move(lengths), std::move(order));
}

}  // namespace recur
