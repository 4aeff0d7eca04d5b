#include "twobridge/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "twobridge/error.hpp"
#include "twobridge/relator.hpp"

namespace twobridge {

namespace {

bool valid_dart(const PlanarMap& map, int d) {
    return d >= 0 && d < static_cast<int>(map.darts.size());
}

std::vector<std::vector<int>> boundary_cycles(const PlanarMap& map) {
    std::vector<std::vector<int>> cycles;
    if (!map.outer.empty())
        cycles.push_back(map.outer);
    if (!map.inner.empty())
        cycles.push_back(map.inner);
    return cycles;
}

// Face containing each dart, or -1.
std::vector<int> dart_faces(const PlanarMap& map) {
    std::vector<int> owner(map.darts.size(), -1);
    for (std::size_t f = 0; f < map.faces.size(); ++f)
        for (int d : map.faces[f])
            if (valid_dart(map, d))
                owner[d] = static_cast<int>(f);
    return owner;
}

bool all_positive(const Word& w) {
    return std::all_of(w.str().begin(), w.str().end(), [](char c) { return c == 'a' || c == 'b'; });
}

bool all_negative(const Word& w) {
    return std::all_of(w.str().begin(), w.str().end(), [](char c) { return c == 'A' || c == 'B'; });
}

Generator other(Generator g) {
    return g == Generator::a ? Generator::b : Generator::a;
}

// Alternating word of one sign.
Word alternating(std::size_t length, bool inverse, Generator first) {
    std::vector<Letter> letters;
    Generator g = first;
    for (std::size_t i = 0; i < length; ++i) {
        letters.push_back({g, inverse});
        g = other(g);
    }
    return Word::from_letters(letters);
}

// Faces on `outer` (cyclic, clockwise), two consecutive darts per face,
// starting at the first dart whose origin has degree 2. Returns the new
// inner cycle (counterclockwise).
std::vector<int> attach_layer(PlanarMap& map, const std::vector<int>& outer, std::int64_t p) {
    const std::size_t n = outer.size();
    if (n == 0 || n % 2 != 0)
        throw InternalError("a layer needs an even, non-empty boundary");
    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (vertex_degree(map, map.darts[outer[i]].origin) == 2) {
            start = i;
            break;
        }
    }
    if (start == n)
        throw InternalError("no degree-2 vertex to pinch the layer at");

    const SymmetrizedSet R(riley_word(Slope(1, p)).u);
    std::vector<int> inward;  // e'_1, e'_2, ... in clockwise order
    for (std::size_t j = 0; j < n / 2; ++j) {
        const int dA = outer[(start + 2 * j) % n];
        const int dB = outer[(start + 2 * j + 1) % n];
        const Word xa = map.darts[dA].label;
        const Word xb = map.darts[dB].label;
        if (xa.empty() || xb.empty() || xa.size() >= static_cast<std::size_t>(p) ||
            xb.size() >= static_cast<std::size_t>(p))
            throw InternalError("boundary block lengths must lie in [1, p)");
        const bool a_negative = all_negative(xa);
        if (!(a_negative ? all_negative(xa) && all_positive(xb) : all_positive(xa) && all_negative(xb)))
            throw InternalError("paired boundary blocks must have opposite constant signs");

        const Word yb_inv = alternating(static_cast<std::size_t>(p) - xb.size(), !a_negative, other(xb.back().gen));
        const Word ya_inv = alternating(static_cast<std::size_t>(p) - xa.size(), a_negative, other(yb_inv.back().gen));

        const int x = map.darts[dA].origin;
        const int z = map.target(dB);
        const int w = map.add_vertex();
        const int eA = map.add_edge(x, w, ya_inv.inverse());
        const int eB = map.add_edge(w, z, yb_inv.inverse());
        map.faces.push_back({dA, dB, map.darts[eB].twin, map.darts[eA].twin});
        const Word label = map.face_label(static_cast<int>(map.faces.size()) - 1);
        if (!R.contains(label))
            throw InternalError("face label " + label.str() + " is not in R(u_1/" + std::to_string(p) + ")");
        inward.push_back(eA);
        inward.push_back(eB);
    }

    std::vector<int> inner;
    for (auto it = inward.rbegin(); it != inward.rend(); ++it)
        inner.push_back(map.darts[*it].twin);
    auto starts_with = [&](char c) {
        return std::find_if(inner.begin(), inner.end(), [&](int d) { return map.darts[d].label.str().front() == c; });
    };
    auto first = starts_with('A');
    if (first == inner.end())
        first = starts_with('B');
    if (first != inner.end())
        std::rotate(inner.begin(), first, inner.end());
    return inner;
}

} // namespace

Word PlanarMap::cycle_label(const std::vector<int>& cycle) const {
    Word out;
    for (int d : cycle)
        out += darts.at(d).label;
    return out;
}

int PlanarMap::add_edge(int from, int to, const Word& label) {
    const int d = static_cast<int>(darts.size());
    darts.push_back({d + 1, from, label});
    darts.push_back({d, to, label.inverse()});
    return d;
}

std::vector<std::string> map_problems(const PlanarMap& map) {
    std::vector<std::string> out;
    const int n = static_cast<int>(map.darts.size());
    for (int d = 0; d < n; ++d) {
        const auto& dart = map.darts[d];
        const std::string id = "dart " + std::to_string(d);
        if (!valid_dart(map, dart.twin) || dart.twin == d || map.darts[dart.twin].twin != d) {
            out.push_back(id + ": twin is not a fixed-point-free involution");
            continue;
        }
        if (dart.origin < 0 || dart.origin >= map.vertex_count)
            out.push_back(id + ": unknown origin vertex");
        if (map.darts[dart.twin].label != dart.label.inverse())
            out.push_back(id + ": twin label is not the inverse label");
        if (dart.label.empty())
            out.push_back(id + ": empty label");
    }
    if (!out.empty())
        return out;

    std::vector<int> owner(map.darts.size(), -1);
    for (std::size_t f = 0; f < map.faces.size(); ++f) {
        const auto& cycle = map.faces[f];
        const std::string id = "face " + std::to_string(f);
        if (cycle.empty()) {
            out.push_back(id + ": empty boundary cycle");
            continue;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int d = cycle[i];
            if (!valid_dart(map, d)) {
                out.push_back(id + ": unknown dart");
                break;
            }
            if (owner[d] >= 0)
                out.push_back("dart " + std::to_string(d) + " lies on two faces");
            owner[d] = static_cast<int>(f);
            const int next = cycle[(i + 1) % cycle.size()];
            if (valid_dart(map, next) && map.target(d) != map.darts[next].origin)
                out.push_back(id + ": boundary cycle is not a closed path");
        }
    }
    std::set<int> on_boundary;
    for (const auto& cycle : boundary_cycles(map)) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int d = cycle[i];
            if (!valid_dart(map, d)) {
                out.push_back("boundary cycle: unknown dart");
                break;
            }
            if (owner[d] < 0 || owner[map.darts[d].twin] >= 0)
                out.push_back("boundary dart " + std::to_string(d) + " must be a face dart with a free twin");
            if (!on_boundary.insert(d).second)
                out.push_back("dart " + std::to_string(d) + " repeats on the boundary");
            const int next = cycle[(i + 1) % cycle.size()];
            if (valid_dart(map, next) && map.target(d) != map.darts[next].origin)
                out.push_back("boundary cycle is not a closed path");
        }
    }
    if (map.holes < 0 || map.holes > 1)
        out.push_back("only disks (h = 0) and annuli (h = 1) are supported");
    if (map.holes == 1 && (map.outer.empty() || map.inner.empty()))
        out.push_back("an annular map needs outer and inner boundary cycles");
    if (map.holes == 0 && !map.inner.empty())
        out.push_back("a disk map has no inner boundary");
    const long euler = static_cast<long>(map.vertex_count) - map.edge_count() + static_cast<long>(map.faces.size());
    if (euler != 1 - map.holes)
        out.push_back("Euler relation fails: V - E + F = " + std::to_string(euler) + ", 1 - h = " +
                      std::to_string(1 - map.holes));
    return out;
}

void check_map(const PlanarMap& map) {
    auto problems = map_problems(map);
    if (!problems.empty())
        throw DomainError("invalid map: " + problems.front());
}

bool is_connected(const PlanarMap& map) {
    if (map.vertex_count == 0)
        return false;
    std::vector<int> parent(map.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    int components = map.vertex_count;
    for (std::size_t d = 0; d < map.darts.size(); ++d) {
        int x = find(map.darts[d].origin), y = find(map.target(static_cast<int>(d)));
        if (x != y) {
            parent[x] = y;
            --components;
        }
    }
    return components == 1;
}

int vertex_degree(const PlanarMap& map, int vertex) {
    if (vertex < 0 || vertex >= map.vertex_count)
        throw DomainError("unknown vertex " + std::to_string(vertex));
    return static_cast<int>(std::count_if(map.darts.begin(), map.darts.end(),
                                          [&](const Dart& d) { return d.origin == vertex; }));
}

int face_degree(const PlanarMap& map, int face) {
    if (face < 0 || face >= static_cast<int>(map.faces.size()))
        throw DomainError("unknown face " + std::to_string(face));
    return static_cast<int>(map.faces[face].size());
}

std::vector<bool> boundary_vertices(const PlanarMap& map) {
    std::vector<bool> on(map.vertex_count, false);
    for (const auto& cycle : boundary_cycles(map))
        for (int d : cycle)
            on[map.darts.at(d).origin] = true;
    return on;
}

bool is_pq_map(const PlanarMap& map, int p, int q) {
    const auto boundary = boundary_vertices(map);
    for (int v = 0; v < map.vertex_count; ++v)
        if (!boundary[v] && vertex_degree(map, v) < p)
            return false;
    for (int f = 0; f < static_cast<int>(map.faces.size()); ++f)
        if (face_degree(map, f) < q)
            return false;
    return true;
}

bool is_reduced_diagram(const PlanarMap& map, const SymmetrizedSet& R) {
    for (std::size_t f = 0; f < map.faces.size(); ++f) {
        const Word label = map.face_label(static_cast<int>(f));
        if (!R.contains(label))
            throw DomainError("face " + std::to_string(f) + " label " + label.str() + " is not in R");
    }
    const auto owner = dart_faces(map);
    // Label of the face cycle read from the dart after position i.
    auto rest = [&](int face, int dart) {
        const auto& cycle = map.faces[face];
        const auto pos = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), dart) - cycle.begin());
        Word w;
        for (std::size_t k = 1; k < cycle.size(); ++k)
            w += map.darts[cycle[(pos + k) % cycle.size()]].label;
        return free_reduce(w);
    };
    for (std::size_t d = 0; d < map.darts.size(); ++d) {
        const int twin = map.darts[d].twin;
        const int f1 = owner[d], f2 = owner[twin];
        if (f1 < 0 || f2 < 0 || f1 == f2 || static_cast<int>(d) > twin)
            continue;
        if (rest(f2, twin) == rest(f1, static_cast<int>(d)).inverse())
            return false;
    }
    return true;
}

GaussBonnetReport gauss_bonnet_check(const PlanarMap& map) {
    if (map.empty())
        throw DomainError("Gauss-Bonnet check of an empty map");
    if (!is_connected(map))
        throw DomainError("Gauss-Bonnet check needs a connected map");
    GaussBonnetReport report;
    const auto boundary = boundary_vertices(map);
    for (int v = 0; v < map.vertex_count; ++v) {
        const int d = vertex_degree(map, v);
        if (boundary[v]) {
            report.boundary_term += 3 - d;
            ++report.boundary_vertices;
        } else {
            report.interior_term += 4 - d;
        }
    }
    for (int f = 0; f < static_cast<int>(map.faces.size()); ++f)
        report.face_term += 4 - face_degree(map, f);
    for (const auto& cycle : boundary_cycles(map))
        report.boundary_edges += static_cast<long>(cycle.size());
    report.lhs = 4 - 4L * map.holes;
    report.rhs = report.boundary_term + report.interior_term + report.face_term;
    report.holds = report.lhs <= report.rhs;
    report.equality = report.lhs == report.rhs;
    report.identity = report.lhs == report.rhs + report.boundary_vertices - report.boundary_edges;
    return report;
}

AnnularDiagram build_fan(std::int64_t p, const Slope& s) {
    if (p < 2)
        throw DomainError("fans need p >= 2");
    if (s.is_zero())
        throw DomainError("no fan for s = 0");
    const auto dom = fundamental_intervals(Slope(1, p));
    if (!dom.in_i1(s) && !dom.in_i2(s))
        throw DomainError(s.str() + " is not in I1(1/p) ∪ I2(1/p) for p = " + std::to_string(p));
    check_connection(p, s);

    const Word u = riley_word(s).u;
    std::vector<Word> blocks;
    for (std::size_t i = 0; i < u.size();) {
        std::size_t j = i + 1;
        while (j < u.size() && u[j].positive() == u[i].positive())
            ++j;
        blocks.push_back(u.substr(i, j - i));
        i = j;
    }
    if (blocks.size() % 2 != 0 || u.front().positive() == u.back().positive())
        throw InternalError("u_s does not split into an even number of sign blocks");

    AnnularDiagram fan;
    fan.holes = 1;
    const int n = static_cast<int>(blocks.size());
    fan.vertex_count = n;
    for (int k = 0; k < n; ++k)
        fan.outer.push_back(fan.add_edge(k, (k + 1) % n, blocks[k]));
    fan.inner = attach_layer(fan, fan.outer, p);
    check_map(fan);
    return fan;
}

void add_inner_layer(AnnularDiagram& diagram, std::int64_t p) {
    if (diagram.holes != 1 || diagram.inner.empty())
        throw DomainError("layers can only be added to an annular diagram");
    std::vector<int> boundary;
    for (auto it = diagram.inner.rbegin(); it != diagram.inner.rend(); ++it)
        boundary.push_back(diagram.darts[*it].twin);
    diagram.inner = attach_layer(diagram, boundary, p);
    check_map(diagram);
}

StructureReport validate_structure(const AnnularDiagram& d) {
    StructureReport report;
    auto fail = [&](const std::string& why) { report.failures.push_back(why); };
    report.annular = d.holes == 1 && !d.outer.empty() && !d.inner.empty() && map_problems(d).empty();
    if (!report.annular) {
        fail("not an annular diagram");
        return report;
    }

    auto simple = [&](const std::vector<int>& cycle) {
        std::set<int> seen;
        for (int dart : cycle)
            if (!seen.insert(d.darts[dart].origin).second)
                return false;
        return true;
    };
    std::set<int> outer_edges, outer_vertices, inner_vertices;
    for (int dart : d.outer) {
        outer_edges.insert(std::min(dart, d.darts[dart].twin));
        outer_vertices.insert(d.darts[dart].origin);
    }
    bool shared_edge = false;
    for (int dart : d.inner) {
        shared_edge = shared_edge || outer_edges.count(std::min(dart, d.darts[dart].twin));
        inner_vertices.insert(d.darts[dart].origin);
    }
    for (int v : inner_vertices)
        report.shared_vertices += static_cast<int>(outer_vertices.count(v));
    report.boundaries_simple = simple(d.outer) && simple(d.inner) && !shared_edge;
    if (!report.boundaries_simple)
        fail("boundary cycles are not simple or share an edge");

    auto alternating_degrees = [&](const std::vector<int>& cycle) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int here = vertex_degree(d, d.darts[cycle[i]].origin);
            const int next = vertex_degree(d, d.darts[cycle[(i + 1) % cycle.size()]].origin);
            if ((here != 2 && here != 4) || here == next)
                return false;
        }
        return true;
    };
    report.boundary_degrees = alternating_degrees(d.outer) && alternating_degrees(d.inner);
    if (!report.boundary_degrees)
        fail("boundary degrees do not alternate between 2 and 4");

    const auto boundary = boundary_vertices(d);
    report.interior_degrees = true;
    for (int v = 0; v < d.vertex_count; ++v)
        if (!boundary[v] && vertex_degree(d, v) != 4)
            report.interior_degrees = false;
    if (!report.interior_degrees)
        fail("some interior vertex has degree other than 4");

    report.face_degrees = std::all_of(d.faces.begin(), d.faces.end(),
                                      [](const std::vector<int>& f) { return f.size() == 4; });
    if (!report.face_degrees)
        fail("some face has degree other than 4");
    return report;
}

std::vector<std::vector<int>> layer_decomposition(const AnnularDiagram& d) {
    if (!validate_structure(d).passed())
        throw DomainError("layer decomposition needs a diagram passing the structure check");
    const auto owner = dart_faces(d);
    std::vector<bool> peeled(d.faces.size(), false);
    std::size_t remaining = d.faces.size();
    std::vector<int> boundary = d.outer;
    std::vector<std::vector<int>> layers;

    while (remaining > 0) {
        const std::size_t n = boundary.size();
        std::map<int, std::size_t> position;
        for (std::size_t i = 0; i < n; ++i)
            position[boundary[i]] = i;

        // face -> (position of its first boundary dart, index in face cycle)
        std::map<std::size_t, std::pair<int, std::size_t>> by_position;
        std::set<int> layer_faces;
        for (int dart : boundary) {
            const int f = owner[dart];
            if (f < 0 || peeled[f])
                throw DomainError("boundary dart " + std::to_string(dart) + " has no unpeeled face");
            layer_faces.insert(f);
        }
        for (int f : layer_faces) {
            const auto& cycle = d.faces[f];
            std::vector<std::size_t> hits;
            for (std::size_t k = 0; k < cycle.size(); ++k)
                if (position.count(cycle[k]))
                    hits.push_back(k);
            if (hits.size() != 2)
                throw DomainError("face " + std::to_string(f) + " meets the current outer boundary in " +
                                  std::to_string(hits.size()) + " edges, expected 2");
            std::size_t k0 = hits[0];
            if ((hits[0] + 1) % cycle.size() != hits[1]) {
                if ((hits[1] + 1) % cycle.size() != hits[0])
                    throw DomainError("face " + std::to_string(f) + " boundary edges are not consecutive");
                k0 = hits[1];
            }
            const std::size_t p0 = position[cycle[k0]];
            if (position[cycle[(k0 + 1) % cycle.size()]] != (p0 + 1) % n)
                throw DomainError("face " + std::to_string(f) + " does not follow the outer boundary");
            by_position[p0] = {f, k0};
        }
        if (2 * by_position.size() != n)
            throw DomainError("layer faces do not partition the outer boundary");

        std::vector<int> next;
        std::vector<int> layer;
        for (const auto& [pos, entry] : by_position) {
            const auto [f, k0] = entry;
            const auto& cycle = d.faces[f];
            std::vector<int> side;
            for (std::size_t k = 2; k < cycle.size(); ++k)
                side.push_back(cycle[(k0 + k) % cycle.size()]);
            for (auto it = side.rbegin(); it != side.rend(); ++it)
                next.push_back(d.darts[*it].twin);
            layer.push_back(f);
            peeled[f] = true;
            --remaining;
        }
        layers.push_back(std::move(layer));
        boundary = std::move(next);
    }

    std::vector<int> expected;
    for (auto it = d.inner.rbegin(); it != d.inner.rend(); ++it)
        expected.push_back(d.darts[*it].twin);
    auto start = std::find(boundary.begin(), boundary.end(), expected.empty() ? -1 : expected.front());
    if (boundary.size() != expected.size() || start == boundary.end())
        throw DomainError("peeled layers do not end at the inner boundary");
    std::rotate(boundary.begin(), start, boundary.end());
    if (boundary != expected)
        throw DomainError("peeled layers do not end at the inner boundary");
    return layers;
}

} // namespace twobridge
