#include "edgeslide/moves.hpp"

#include <sstream>

#include "text.hpp"

namespace edgeslide {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string id(Vertex v) { return std::to_string(v); }

}  // namespace

std::string to_string(const Move& m) {
    return std::visit(
        overloaded{
            [](const Slide& s) { return "S " + id(s.pivot) + " " + id(s.from) + " " + id(s.to); },
            [](const AddPendant& a) { return "AP " + id(a.anchor) + " " + id(a.added); },
            [](const Subdivide& d) { return "SD " + id(d.end_a) + " " + id(d.end_b) + " " + id(d.added); },
            [](const RemoveLeaf& r) { return "RL " + id(r.leaf) + " " + id(r.anchor); },
            [](const Smooth& s) { return "SM " + id(s.mid) + " " + id(s.end_a) + " " + id(s.end_b); },
        },
        m);
}

bool is_slide(const Move& m) noexcept { return std::holds_alternative<Slide>(m); }

std::string check_move(const Graph& g, const Move& m) {
    auto in_range = [&](std::initializer_list<Vertex> vs) {
        for (Vertex v : vs)
            if (!g.valid(v)) return false;
        return true;
    };
    return std::visit(
        overloaded{
            [&](const Slide& s) -> std::string {
                if (!in_range({s.pivot, s.from, s.to})) return "vertex out of range";
                if (s.pivot == s.from || s.from == s.to || s.pivot == s.to) return "vertices not distinct";
                if (!g.adjacent(s.pivot, s.from)) return id(s.pivot) + " !~ " + id(s.from);
                if (!g.adjacent(s.from, s.to)) return id(s.from) + " !~ " + id(s.to);
                if (g.adjacent(s.pivot, s.to)) return id(s.pivot) + " ~ " + id(s.to) + " already";
                return {};
            },
            [&](const AddPendant& a) -> std::string {
                if (!in_range({a.anchor})) return "vertex out of range";
                if (a.added != g.order()) return "new vertex id must be " + id(g.order());
                return {};
            },
            [&](const Subdivide& d) -> std::string {
                if (!in_range({d.end_a, d.end_b})) return "vertex out of range";
                if (d.added != g.order()) return "new vertex id must be " + id(g.order());
                if (d.end_a == d.end_b || !g.adjacent(d.end_a, d.end_b))
                    return id(d.end_a) + " !~ " + id(d.end_b);
                return {};
            },
            [&](const RemoveLeaf& r) -> std::string {
                if (!in_range({r.leaf, r.anchor})) return "vertex out of range";
                if (g.degree(r.leaf) != 1) return "d(" + id(r.leaf) + ") != 1";
                if (!g.adjacent(r.leaf, r.anchor)) return id(r.leaf) + " !~ " + id(r.anchor);
                return {};
            },
            [&](const Smooth& s) -> std::string {
                if (!in_range({s.mid, s.end_a, s.end_b})) return "vertex out of range";
                if (g.degree(s.mid) != 2) return "d(" + id(s.mid) + ") != 2";
                if (s.end_a == s.end_b || !g.adjacent(s.mid, s.end_a) || !g.adjacent(s.mid, s.end_b))
                    return "neighbors of " + id(s.mid) + " are not {" + id(s.end_a) + "," + id(s.end_b) + "}";
                if (g.adjacent(s.end_a, s.end_b))
                    return id(s.end_a) + " ~ " + id(s.end_b) + " already (would double an edge)";
                return {};
            },
        },
        m);
}

void apply_move_in_place(Graph& g, const Move& m, std::size_t index) {
    if (std::string why = check_move(g, m); !why.empty()) throw RejectedMove(index, to_string(m) + ": " + why);
    std::visit(overloaded{
                   [&](const Slide& s) {
                       g.remove_edge(s.pivot, s.from);
                       g.add_edge(s.pivot, s.to);
                   },
                   [&](const AddPendant& a) { g.add_edge(a.anchor, g.add_vertex()); },
                   [&](const Subdivide& d) {
                       Vertex y = g.add_vertex();
                       g.remove_edge(d.end_a, d.end_b);
                       g.add_edge(d.end_a, y);
                       g.add_edge(d.end_b, y);
                   },
                   [&](const RemoveLeaf& r) { g.remove_vertex(r.leaf); },
                   [&](const Smooth& s) {
                       g.add_edge(s.end_a, s.end_b);
                       g.remove_vertex(s.mid);
                   },
               },
               m);
}

Graph apply_move(const Graph& g, const Move& m) {
    Graph out = g;
    apply_move_in_place(out, m);
    return out;
}

Graph apply_script(const Graph& g, const MoveScript& s) { return replay(g, s, CheckLevel::fast); }

Graph replay(const Graph& g, const MoveScript& s, CheckLevel level, const ReplayObserver& observer) {
    Graph cur = g;
    const int chi = euler_characteristic(g);
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        apply_move_in_place(cur, s.moves[i], i);
        if (level == CheckLevel::full) {
            try {
                cur.check_invariants();
            } catch (const InvariantViolation& ex) {
                throw RejectedMove(i, std::string("state not simple: ") + ex.what());
            }
            if (!is_connected(cur)) throw RejectedMove(i, to_string(s.moves[i]) + ": disconnects the graph");
            if (euler_characteristic(cur) != chi)
                throw RejectedMove(i, to_string(s.moves[i]) + ": Euler characteristic changed");
            if (stats(cur).curvature_sum != 2 * chi)
                throw RejectedMove(i, to_string(s.moves[i]) + ": curvature sum != 2*chi");
        }
        if (observer) observer(i, cur);
    }
    return cur;
}

MoveScript invert_slides(const MoveScript& s) {
    MoveScript out;
    out.moves.reserve(s.size());
    for (auto it = s.moves.rbegin(); it != s.moves.rend(); ++it) {
        const auto* slide = std::get_if<Slide>(&*it);
        if (!slide) throw PreconditionError("invert_slides: script contains a non-slide move");
        out.push(Slide{slide->pivot, slide->to, slide->from});
    }
    return out;
}

MoveScript relabel(const MoveScript& s, const std::vector<Vertex>& map) {
    auto f = [&](Vertex v) { return map.at(static_cast<std::size_t>(v)); };
    MoveScript out;
    out.moves.reserve(s.size());
    for (const Move& m : s.moves)
        out.push(std::visit(overloaded{
                                [&](const Slide& x) -> Move { return Slide{f(x.pivot), f(x.from), f(x.to)}; },
                                [&](const AddPendant& x) -> Move { return AddPendant{f(x.anchor), f(x.added)}; },
                                [&](const Subdivide& x) -> Move {
                                    return Subdivide{f(x.end_a), f(x.end_b), f(x.added)};
                                },
                                [&](const RemoveLeaf& x) -> Move { return RemoveLeaf{f(x.leaf), f(x.anchor)}; },
                                [&](const Smooth& x) -> Move { return Smooth{f(x.mid), f(x.end_a), f(x.end_b)}; },
                            },
                            m));
    return out;
}

ScriptDocument parse_script(std::string_view text) {
    ScriptDocument doc;
    for (const auto& line : detail::content_lines(text)) {
        const auto& t = line.tokens;
        auto arg = [&](std::size_t i) { return detail::parse_int(t[i], line.number); };
        auto arity = [&](std::size_t k) {
            if (t.size() != k + 1)
                throw ParseError(line.number, "'" + std::string(t[0]) + "' takes " + std::to_string(k) + " arguments");
        };
        Move m;
        if (t[0] == "S") {
            arity(3);
            m = Slide{arg(1), arg(2), arg(3)};
        } else if (t[0] == "AP") {
            arity(2);
            m = AddPendant{arg(1), arg(2)};
        } else if (t[0] == "SD") {
            arity(3);
            m = Subdivide{arg(1), arg(2), arg(3)};
        } else if (t[0] == "RL") {
            arity(2);
            m = RemoveLeaf{arg(1), arg(2)};
        } else if (t[0] == "SM") {
            arity(3);
            m = Smooth{arg(1), arg(2), arg(3)};
        } else {
            throw ParseError(line.number, "unknown move '" + std::string(t[0]) + "'");
        }
        doc.script.push(m);
        doc.lines.push_back(line.number);
    }
    return doc;
}

std::string serialize_script(const MoveScript& s) {
    std::string out;
    for (const Move& m : s.moves) {
        out += to_string(m);
        out += '\n';
    }
    return out;
}

void ScriptRecorder::push(const Move& m) {
    apply_move_in_place(graph_, m, script_.size());
    script_.push(m);
}

void ScriptRecorder::extend(const MoveScript& s) {
    for (const Move& m : s.moves) push(m);
}

}  // namespace edgeslide
