#include "sobnull/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace sobnull::sets {

IntervalSet IntervalSet::from_intervals(std::vector<Interval> raw) {
    for (const auto& [a, b] : raw)
        if (a > b) throw std::invalid_argument("IntervalSet: interval with a > b");
    std::sort(raw.begin(), raw.end());
    IntervalSet out;
    for (auto& p : raw) {
        if (!out.iv_.empty() && p.first <= out.iv_.back().second) {
            if (p.second > out.iv_.back().second) out.iv_.back().second = std::move(p.second);
        } else {
            out.iv_.push_back(std::move(p));
        }
    }
    return out;
}

Rational IntervalSet::total_length() const {
    Rational s = 0;
    for (const auto& [a, b] : iv_) s += b - a;
    return s;
}

Rational IntervalSet::span() const {
    if (iv_.empty()) return 0;
    return iv_.back().second - iv_.front().first;
}

IntervalSet IntervalSet::shifted(const Rational& t) const {
    IntervalSet out;
    out.iv_.reserve(iv_.size());
    for (const auto& [a, b] : iv_) out.iv_.emplace_back(a + t, b + t);
    return out;
}

IntervalSet shift(const IntervalSet& a, const Rational& t) { return a.shifted(t); }
Rational total_length(const IntervalSet& a) { return a.total_length(); }

namespace {

// Sweep over endpoint events; keep runs where the indicator parity/overlap
// predicate holds. Runs touching at a point are merged (null sets ignored).
template <typename Keep>
IntervalSet sweep(const IntervalSet& a, const IntervalSet& b, Keep keep) {
    struct Event {
        Rational x;
        int da, db;
    };
    std::vector<Event> ev;
    ev.reserve(2 * (a.size() + b.size()));
    for (const auto& [lo, hi] : a.intervals()) {
        ev.push_back({lo, +1, 0});
        ev.push_back({hi, -1, 0});
    }
    for (const auto& [lo, hi] : b.intervals()) {
        ev.push_back({lo, 0, +1});
        ev.push_back({hi, 0, -1});
    }
    std::sort(ev.begin(), ev.end(), [](const Event& l, const Event& r) { return l.x < r.x; });

    std::vector<IntervalSet::Interval> runs;
    int ca = 0, cb = 0;
    std::size_t i = 0;
    while (i < ev.size()) {
        Rational x = ev[i].x;
        while (i < ev.size() && ev[i].x == x) {
            ca += ev[i].da;
            cb += ev[i].db;
            ++i;
        }
        if (i == ev.size()) break;
        if (keep(ca > 0, cb > 0)) {
            const Rational& next = ev[i].x;
            if (!runs.empty() && runs.back().second == x)
                runs.back().second = next;
            else
                runs.emplace_back(x, next);
        }
    }
    return IntervalSet::from_intervals(std::move(runs));
}

} // namespace

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    return sweep(a, b, [](bool ia, bool ib) { return ia || ib; });
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
    return sweep(a, b, [](bool ia, bool ib) { return ia && ib; });
}

IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b) {
    return sweep(a, b, [](bool ia, bool ib) { return ia != ib; });
}

} // namespace sobnull::sets
