#include "edgeslide/regularize.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "edgeslide/slide_calculus.hpp"

namespace edgeslide {

std::vector<int> DegreeTarget::degrees() const {
    std::vector<int> out(static_cast<std::size_t>(r), k + 1);
    out.insert(out.end(), static_cast<std::size_t>(n - r), k);
    return out;
}

std::int64_t DegreeTarget::energy() const {
    return std::int64_t{r} * (k + 1) * (k + 1) + std::int64_t{n - r} * k * k;
}

DegreeTarget almost_regular_target(int n, int e) {
    if (n < 1) throw PreconditionError("almost_regular_target: need at least one vertex");
    const std::int64_t max_edges = std::int64_t{n} * (n - 1) / 2;
    if (e < n - 1 || e > max_edges)
        throw PreconditionError("almost_regular_target: e=" + std::to_string(e) +
                                " outside the connected simple range for n=" + std::to_string(n));
    return DegreeTarget{n, 2 * e / n, 2 * e % n};
}

RegularizeResult regularize_traced(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("regularize: graph is disconnected");
    const int n = g.order();
    ScriptRecorder rec(g);
    RegularizeResult out;

    while (n >= 2) {
        const Graph& cur = rec.graph();
        Vertex high = 0, low = 0;
        for (Vertex v = 1; v < n; ++v) {
            if (cur.degree(v) > cur.degree(high)) high = v;
            if (cur.degree(v) < cur.degree(low)) low = v;
        }
        if (cur.degree(high) - cur.degree(low) < 2) break;

        RegularizeStep step{high, low, cur.degree(high), cur.degree(low), energy(cur), 0, rec.script().size(), 0};
        if (cur.adjacent(high, low)) {
            const auto nbrs = cur.neighbors(high);
            auto donor = std::find_if(nbrs.begin(), nbrs.end(),
                                      [&](Vertex a) { return a != low && !cur.adjacent(a, low); });
            if (donor == nbrs.end()) throw InvariantViolation("regularize: no donor next to " + std::to_string(high));
            rec.push(Slide{*donor, high, low});
        } else {
            const Path sigma = *shortest_path(cur, high, low);
            const auto nbrs = cur.neighbors(high);
            auto donor = std::find_if(nbrs.begin(), nbrs.end(),
                                      [&](Vertex a) { return !sigma.contains(a) && !cur.adjacent(a, low); });
            if (donor == nbrs.end()) throw InvariantViolation("regularize: no donor off the path at " + std::to_string(high));
            rec.extend(shuffle(cur, *donor, sigma, 0, sigma.size() - 1));
        }
        step.energy_after = energy(rec.graph());
        step.move_count = rec.script().size() - step.first_move;

        const std::int64_t drop = 2 * std::int64_t{step.high_degree - step.low_degree - 1};
        if (step.energy_before - step.energy_after != drop)
            throw InvariantViolation("regularize: energy dropped by " +
                                     std::to_string(step.energy_before - step.energy_after) + ", expected " +
                                     std::to_string(drop));
        if (step.move_count > static_cast<std::size_t>(n))
            throw InvariantViolation("regularize: step used more than n slides");
        out.steps.push_back(step);
    }

    out.final_graph = rec.graph();
    std::vector<int> degrees = stats(out.final_graph).degrees;
    std::sort(degrees.rbegin(), degrees.rend());
    if (n > 0 && degrees != almost_regular_target(n, g.size()).degrees())
        throw InvariantViolation("regularize: final degrees are not the almost regular multiset");
    out.script = std::move(rec).take_script();
    return out;
}

MoveScript regularize(const Graph& g) { return regularize_traced(g).script; }

std::set<std::vector<int>> minimal_energy_oracle(int n, int e) {
    if (n < 1 || n > 10) throw PreconditionError("minimal_energy_oracle: n must be in 1..10");
    if (e < 1) throw PreconditionError("minimal_energy_oracle: e must be positive");
    const int total = 2 * e;
    std::set<std::vector<int>> best;
    std::int64_t best_energy = std::numeric_limits<std::int64_t>::max();
    std::vector<int> seq;

    // non-increasing positive parts, `left` still to distribute over `slots`
    std::function<void(int, int, int, std::int64_t)> rec = [&](int left, int slots, int cap, std::int64_t sq) {
        if (slots == 0) {
            if (left != 0) return;
            if (sq < best_energy) {
                best_energy = sq;
                best.clear();
            }
            if (sq == best_energy) best.insert(seq);
            return;
        }
        for (int d = std::min(cap, left - (slots - 1)); d >= 1; --d) {
            if (std::int64_t{d} * slots < left) break;
            seq.push_back(d);
            rec(left - d, slots - 1, d, sq + std::int64_t{d} * d);
            seq.pop_back();
        }
    };
    rec(total, n, total, 0);
    return best;
}

}  // namespace edgeslide
