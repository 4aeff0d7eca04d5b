#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "twobridge/diagram.hpp"
#include "twobridge/error.hpp"

namespace twobridge {

namespace {

using json = nlohmann::ordered_json;

json to_json(const PlanarMap& map) {
    json vertices = json::array();
    for (int v = 0; v < map.vertex_count; ++v)
        vertices.push_back(v);
    json darts = json::array();
    for (std::size_t d = 0; d < map.darts.size(); ++d) {
        const auto& dart = map.darts[d];
        darts.push_back({{"id", d}, {"twin", dart.twin}, {"origin", dart.origin}, {"label", dart.label.str()}});
    }
    json j;
    j["vertices"] = vertices;
    j["darts"] = darts;
    j["faces"] = map.faces;
    j["outer"] = map.outer;
    j["inner"] = map.inner;
    j["holes"] = map.holes;
    return j;
}

// Ring index of every vertex: 0 on the outer boundary, k after peeling k
// layers. Falls back to a single ring per boundary cycle.
std::vector<std::vector<int>> vertex_rings(const PlanarMap& map) {
    std::vector<std::vector<int>> rings;
    auto ring_of = [&](const std::vector<int>& darts) {
        std::vector<int> ring;
        for (int d : darts)
            ring.push_back(map.darts[d].origin);
        return ring;
    };
    rings.push_back(ring_of(map.outer));
    if (map.holes == 1) {
        try {
            for (const auto& layer : layer_decomposition(map)) {
                std::vector<int> ring;
                for (int f : layer) {
                    const auto& face = map.faces[f];
                    // vertices strictly inside the layer's inner side
                    for (std::size_t k = 2; k < face.size(); ++k)
                        ring.push_back(map.darts[face[k]].origin);
                }
                rings.push_back(ring);
            }
        } catch (const DomainError&) {
            rings.push_back(ring_of(map.inner));
        }
    }
    return rings;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string emit_dot(const PlanarMap& map) {
    std::ostringstream out;
    out << "digraph diagram {\n  layout=circo;\n  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < map.vertex_count; ++v)
        out << "  v" << v << " [label=\"" << v << "\"];\n";
    for (std::size_t f = 0; f < map.faces.size(); ++f)
        out << "  f" << f << " [shape=box, style=dashed, label=\"D" << f << ": "
            << map.face_label(static_cast<int>(f)).str() << "\"];\n";
    std::vector<bool> in_face(map.darts.size(), false);
    for (const auto& face : map.faces)
        for (int d : face)
            in_face[d] = true;
    for (std::size_t d = 0; d < map.darts.size(); ++d) {
        const int twin = map.darts[d].twin;
        // one arrow per edge, drawn along a face dart when there is one
        const bool draw = in_face[d] ? (!in_face[twin] || static_cast<int>(d) < twin) : !in_face[twin] && static_cast<int>(d) < twin;
        if (!draw)
            continue;
        out << "  v" << map.darts[d].origin << " -> v" << map.target(static_cast<int>(d)) << " [label=\""
            << map.darts[d].label.str() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string emit_svg(const PlanarMap& map) {
    const auto rings = vertex_rings(map);
    const double size = 480, centre = size / 2, outer_radius = 200;
    const double step = outer_radius / static_cast<double>(rings.size() + 1);
    std::vector<double> x(map.vertex_count, centre), y(map.vertex_count, centre);
    std::vector<bool> placed(map.vertex_count, false);
    for (std::size_t k = 0; k < rings.size(); ++k) {
        const auto& ring = rings[k];
        const double radius = outer_radius - step * static_cast<double>(k);
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const int v = ring[i];
            if (placed[v])
                continue;
            // inner rings are offset by half a slot so pinched faces open up
            const double angle = 2 * std::numbers::pi * (static_cast<double>(i) + 0.5 * static_cast<double>(k)) /
                                 static_cast<double>(ring.size());
            x[v] = centre + radius * std::sin(angle);
            y[v] = centre - radius * std::cos(angle);
            placed[v] = true;
        }
    }

    std::ostringstream out;
    char buf[160];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t f = 0; f < map.faces.size(); ++f) {
        double cx = 0, cy = 0;
        std::string points;
        for (int d : map.faces[f]) {
            const int v = map.darts[d].origin;
            cx += x[v];
            cy += y[v];
            std::snprintf(buf, sizeof buf, "%.1f,%.1f ", x[v], y[v]);
            points += buf;
        }
        cx /= static_cast<double>(map.faces[f].size());
        cy /= static_cast<double>(map.faces[f].size());
        out << "<polygon points=\"" << points << "\" fill=\"#e8eef8\" stroke=\"none\"/>\n";
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"10\" fill=\"#666\">D%zu</text>\n", cx,
                      cy, f);
        out << buf;
    }
    for (std::size_t d = 0; d < map.darts.size(); ++d) {
        const int twin = map.darts[d].twin;
        if (static_cast<int>(d) > twin)
            continue;
        const int a = map.darts[d].origin, b = map.target(static_cast<int>(d));
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
                      x[a], y[a], x[b], y[b]);
        out << buf;
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" fill=\"#b00\">",
                      (x[a] + x[b]) / 2, (y[a] + y[b]) / 2);
        out << buf << xml_escape(map.darts[d].label.str()) << "</text>\n";
    }
    for (int v = 0; v < map.vertex_count; ++v) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"3\" fill=\"black\"/>\n", x[v], y[v]);
        out << buf;
    }
    out << "</svg>\n";
    return out.str();
}

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array())
        throw ParseError(std::string("diagram JSON: '") + what + "' must be an array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw ParseError(std::string("diagram JSON: '") + what + "' must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

DiagramFormat parse_diagram_format(std::string_view name) {
    if (name == "json")
        return DiagramFormat::Json;
    if (name == "dot")
        return DiagramFormat::Dot;
    if (name == "svg")
        return DiagramFormat::Svg;
    throw ParseError("unknown diagram format '" + std::string(name) + "' (json, dot, svg)");
}

std::string emit_diagram(const PlanarMap& map, DiagramFormat format) {
    if (map.empty())
        throw DomainError("cannot emit an empty diagram");
    switch (format) {
    case DiagramFormat::Json: return to_json(map).dump();
    case DiagramFormat::Dot: return emit_dot(map);
    case DiagramFormat::Svg: return emit_svg(map);
    }
    throw DomainError("unknown diagram format");
}

PlanarMap parse_diagram_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("diagram JSON must be an object");
    for (const char* key : {"vertices", "darts", "faces", "outer", "inner", "holes"})
        if (!j.contains(key))
            throw ParseError(std::string("diagram JSON: missing '") + key + "'");

    PlanarMap map;
    const auto vertices = int_list(j["vertices"], "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] != static_cast<int>(i))
            throw ParseError("diagram JSON: vertices must be 0, 1, ..., V-1 in order");
    map.vertex_count = static_cast<int>(vertices.size());

    if (!j["darts"].is_array())
        throw ParseError("diagram JSON: 'darts' must be an array");
    for (std::size_t i = 0; i < j["darts"].size(); ++i) {
        const auto& d = j["darts"][i];
        if (!d.is_object() || !d.contains("id") || !d.contains("twin") || !d.contains("origin") ||
            !d.contains("label") || !d["id"].is_number_integer() || !d["twin"].is_number_integer() ||
            !d["origin"].is_number_integer() || !d["label"].is_string())
            throw ParseError("diagram JSON: malformed dart " + std::to_string(i));
        if (d["id"].get<int>() != static_cast<int>(i))
            throw ParseError("diagram JSON: dart ids must be 0, 1, ..., in order");
        map.darts.push_back({d["twin"].get<int>(), d["origin"].get<int>(), Word(d["label"].get<std::string>())});
    }
    if (!j["faces"].is_array())
        throw ParseError("diagram JSON: 'faces' must be an array");
    for (const auto& f : j["faces"])
        map.faces.push_back(int_list(f, "faces"));
    map.outer = int_list(j["outer"], "outer");
    map.inner = int_list(j["inner"], "inner");
    if (!j["holes"].is_number_integer())
        throw ParseError("diagram JSON: 'holes' must be an integer");
    map.holes = j["holes"].get<int>();
    check_map(map);
    return map;
}

} // namespace twobridge
