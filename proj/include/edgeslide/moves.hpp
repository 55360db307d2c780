#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "edgeslide/graph.hpp"

namespace edgeslide {

/// Replace edge {pivot, from} by {pivot, to}; needs pivot~from~to, pivot!~to.
struct Slide {
    Vertex pivot;
    Vertex from;
    Vertex to;
    bool operator==(const Slide&) const = default;
};

/// Attach a new vertex (id == n) to `anchor`.
struct AddPendant {
    Vertex anchor;
    Vertex added;
    bool operator==(const AddPendant&) const = default;
};

/// Put a new vertex (id == n) in the interior of edge {end_a, end_b}.
struct Subdivide {
    Vertex end_a;
    Vertex end_b;
    Vertex added;
    bool operator==(const Subdivide&) const = default;
};

/// Delete a degree-1 vertex.
struct RemoveLeaf {
    Vertex leaf;
    Vertex anchor;
    bool operator==(const RemoveLeaf&) const = default;
};

/// Delete a degree-2 vertex and join its two non-adjacent neighbors.
struct Smooth {
    Vertex mid;
    Vertex end_a;
    Vertex end_b;
    bool operator==(const Smooth&) const = default;
};

using Move = std::variant<Slide, AddPendant, Subdivide, RemoveLeaf, Smooth>;

struct MoveScript {
    std::vector<Move> moves;

    std::size_t size() const noexcept { return moves.size(); }
    bool empty() const noexcept { return moves.empty(); }
    void push(const Move& m) { moves.push_back(m); }
    void append(const MoveScript& other) { moves.insert(moves.end(), other.moves.begin(), other.moves.end()); }

    bool operator==(const MoveScript&) const = default;
};

/// Text form of a move as used in `.moves` files, e.g. "S 0 1 2".
std::string to_string(const Move& m);

bool is_slide(const Move& m) noexcept;

/// Empty string if `m` is applicable to `g`, else the failed predicate.
std::string check_move(const Graph& g, const Move& m);

/// Applies `m` in place. Throws RejectedMove(index, predicate) if inapplicable.
void apply_move_in_place(Graph& g, const Move& m, std::size_t index = 0);

Graph apply_move(const Graph& g, const Move& m);

/// Left fold of apply_move; failures carry the index of the offending move.
Graph apply_script(const Graph& g, const MoveScript& s);

enum class CheckLevel { fast, full };

/// Observer invoked with (index, state after move) during replay.
using ReplayObserver = std::function<void(std::size_t, const Graph&)>;

/// Like apply_script; `full` additionally checks after every move that the
/// state is simple and connected, that the Euler characteristic is unchanged
/// and that the curvature sum equals twice the Euler characteristic.
Graph replay(const Graph& g, const MoveScript& s, CheckLevel level,
             const ReplayObserver& observer = {});

/// Inverse of a slide-only script: each Slide(x, y, z) becomes Slide(x, z, y)
/// and the order is reversed.
MoveScript invert_slides(const MoveScript& s);

/// Renames every vertex id through `map` (map[old] = new).
MoveScript relabel(const MoveScript& s, const std::vector<Vertex>& map);

/// A `.moves` document: the script plus the source line of each move.
struct ScriptDocument {
    MoveScript script;
    std::vector<int> lines;
};

ScriptDocument parse_script(std::string_view text);
std::string serialize_script(const MoveScript& s);

/// Builds a script while keeping the graph it produces, applying (and thereby
/// checking) every move as it is appended.
class ScriptRecorder {
public:
    explicit ScriptRecorder(Graph start) : graph_(std::move(start)) {}

    void push(const Move& m);
    void extend(const MoveScript& s);

    const Graph& graph() const noexcept { return graph_; }
    const MoveScript& script() const noexcept { return script_; }
    MoveScript take_script() && { return std::move(script_); }

private:
    Graph graph_;
    MoveScript script_;
};

}  // namespace edgeslide
