#include "tammes/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tammes {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(line);
    }
    return out;
}

}  // namespace

std::string to_text(const PlanarCandidate& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << ' ' << g.face_count() << '\n';
    for (const auto& around : g.rotation()) {
        for (size_t i = 0; i < around.size(); ++i) out << (i ? " " : "") << around[i];
        out << '\n';
    }
    for (const auto& iso : g.isolated()) out << "iso " << iso.face << '\n';
    return out.str();
}

PlanarCandidate from_text(const std::string& text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("candidate text: missing header");
    int n = 0, m = 0, f = 0;
    {
        std::istringstream h(lines[0]);
        if (!(h >> n >> m >> f) || n < 1) throw ParseError("candidate text: bad header '" + lines[0] + "'");
    }
    std::vector<std::vector<int>> rotation;
    std::vector<int> iso_faces;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i]);
        std::string first;
        in >> first;
        if (first == "iso") {
            int face;
            if (!(in >> face)) throw ParseError("candidate text: bad iso line '" + lines[i] + "'");
            iso_faces.push_back(face);
            continue;
        }
        if (!iso_faces.empty()) throw ParseError("candidate text: vertex line after iso annotations");
        std::vector<int> around;
        std::istringstream all(lines[i]);
        int v;
        while (all >> v) around.push_back(v);
        if (!all.eof()) throw ParseError("candidate text: bad vertex line '" + lines[i] + "'");
        rotation.push_back(std::move(around));
    }
    if (static_cast<int>(rotation.size() + iso_faces.size()) != n)
        throw ParseError("candidate text: vertex count does not match header");
    PlanarCandidate g = PlanarCandidate::from_rotation(std::move(rotation), std::move(iso_faces));
    if (g.edge_count() != m || g.face_count() != f) throw ParseError("candidate text: edge or face count mismatch");
    return g;
}

std::string to_planar_code(const std::vector<PlanarCandidate>& graphs, bool with_header) {
    std::string out = with_header ? ">>planar_code<<" : "";
    for (const auto& g : graphs) {
        if (!g.isolated().empty()) throw std::invalid_argument("planar code cannot store isolated vertices");
        if (g.n() > 255) throw std::invalid_argument("planar code: too many vertices");
        out.push_back(static_cast<char>(g.n()));
        for (const auto& around : g.rotation()) {
            for (auto it = around.rbegin(); it != around.rend(); ++it) out.push_back(static_cast<char>(*it + 1));
            out.push_back('\0');
        }
    }
    return out;
}

std::vector<PlanarCandidate> from_planar_code(const std::string& bytes) {
    static const std::string header = ">>planar_code<<";
    size_t pos = bytes.compare(0, header.size(), header) == 0 ? header.size() : 0;
    std::vector<PlanarCandidate> out;
    while (pos < bytes.size()) {
        const int n = static_cast<unsigned char>(bytes[pos++]);
        if (n == 0) throw ParseError("planar code: zero vertex count");
        std::vector<std::vector<int>> rotation(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                if (pos >= bytes.size()) throw ParseError("planar code: truncated");
                const int w = static_cast<unsigned char>(bytes[pos++]);
                if (w == 0) break;
                if (w > n) throw ParseError("planar code: neighbour out of range");
                rotation[v].push_back(w - 1);
            }
            std::reverse(rotation[v].begin(), rotation[v].end());
        }
        out.push_back(PlanarCandidate::from_rotation(std::move(rotation)));
    }
    return out;
}

nlohmann::json candidate_to_json(const PlanarCandidate& g) {
    nlohmann::json iso = nlohmann::json::array();
    for (const auto& i : g.isolated()) iso.push_back(i.face);
    return {{"n", g.n()},
            {"canonical_key", canonical_key(g).hex()},
            {"adjacency", g.rotation()},
            {"faces", g.faces()},
            {"isolated_faces", iso},
            {"edge_count", g.edge_count()}};
}

PlanarCandidate candidate_from_json(const nlohmann::json& j) {
    try {
        auto rotation = j.at("adjacency").get<std::vector<std::vector<int>>>();
        std::vector<int> iso;
        if (j.contains("isolated_faces")) iso = j.at("isolated_faces").get<std::vector<int>>();
        return PlanarCandidate::from_rotation(std::move(rotation), std::move(iso));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("candidate json: ") + e.what());
    }
}

nlohmann::json points_to_json(const std::vector<UnitVector>& points) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : points) arr.push_back({p.x(), p.y(), p.z()});
    return arr;
}

std::vector<UnitVector> points_from_json(const nlohmann::json& j) {
    std::vector<UnitVector> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 3) throw ParseError("points json: expected [x, y, z]");
        out.push_back(UnitVector::from_unit(Vec3(p[0].get<double>(), p[1].get<double>(), p[2].get<double>())));
    }
    return out;
}

std::vector<UnitVector> parse_config(const std::string& text) {
    std::vector<UnitVector> out;
    bool spherical = false;
    int lineno = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (first == "format") {
            std::string kind;
            fields >> kind;
            if (kind == "spherical") spherical = true;
            else if (kind == "cartesian") spherical = false;
            else throw ParseError("config line " + std::to_string(lineno) + ": unknown format '" + kind + "'");
            continue;
        }
        std::istringstream nums(line);
        std::vector<double> v;
        double x;
        while (nums >> x) v.push_back(x);
        if (!nums.eof()) throw ParseError("config line " + std::to_string(lineno) + ": not a number");
        if (spherical) {
            if (v.size() != 2) throw ParseError("config line " + std::to_string(lineno) + ": expected theta phi");
            const double t = v[0], p = v[1];
            out.emplace_back(std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t));
        } else {
            if (v.size() != 3) throw ParseError("config line " + std::to_string(lineno) + ": expected x y z");
            const Vec3 p(v[0], v[1], v[2]);
            if (std::abs(p.norm() - 1.0) > 1e-6)
                throw ParseError("config line " + std::to_string(lineno) + ": point is not on the unit sphere");
            out.emplace_back(p);
        }
    }
    if (out.size() < 2) throw ParseError("config: need at least two points");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace tammes
