#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

namespace upcolor {

namespace detail {

template <class Prune, class Visit>
class NormalizedColoringWalk {
public:
    NormalizedColoringWalk(const Graph& g, Prune& prune, Visit& visit)
        : g_(g), prune_(prune), visit_(visit), colors_(g.order(), -1), used_(g.order() + 1, 0) {}

    void run() {
        if (g_.order() == 0) return;
        step(0, -1, 0);
    }

private:
    // Returns false once the visitor asked to stop.
    bool step(Vertex v, Color max, std::size_t missing) {
        const std::size_t n = g_.order();
        if (v == n) {
            if (missing != 0) return true;
            return visit_(static_cast<const std::vector<Color>&>(colors_), max);
        }
        const std::size_t remaining_after = n - v - 1;
        for (Color c = 0; c < static_cast<Color>(n); ++c) {
            bool clash = false;
            for (Vertex u : g_.neighbors(v)) {
                if (u < v && colors_[u] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            Color next_max = max;
            std::size_t next_missing = missing;
            if (c > max) {
                next_max = c;
                next_missing += static_cast<std::size_t>(c - max - 1);
            } else if (used_[c] == 0) {
                --next_missing;
            }
            // Every later colour choice can close at most one gap.
            if (next_missing > remaining_after) {
                if (c > max) break;
                continue;
            }
            if (c > max && prune_(next_max)) break;
            colors_[v] = c;
            ++used_[c];
            const bool keep_going = step(v + 1, next_max, next_missing);
            --used_[c];
            colors_[v] = -1;
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    Prune& prune_;
    Visit& visit_;
    std::vector<Color> colors_;
    std::vector<std::size_t> used_;
};

}  // namespace detail

template <class Prune, class Visit>
void for_each_normalized_coloring(const Graph& g, Prune&& prune, Visit&& visit) {
    detail::NormalizedColoringWalk<std::remove_reference_t<Prune>, std::remove_reference_t<Visit>> walk(g, prune, visit);
    walk.run();
}

}  // namespace upcolor
