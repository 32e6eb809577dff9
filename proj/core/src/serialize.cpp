#include "hjlab/serialize.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hjlab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string kind_name(Hypergraph::Kind k) {
    switch (k) {
        case Hypergraph::Kind::H: return "H";
        case Hypergraph::Kind::P: return "P";
        default: return "C";
    }
}

Hypergraph::Kind kind_from_name(const std::string& s) {
    if (s == "H") return Hypergraph::Kind::H;
    if (s == "P") return Hypergraph::Kind::P;
    if (s == "C") return Hypergraph::Kind::C;
    throw std::invalid_argument("unknown hypergraph kind: " + s);
}

}  // namespace

std::string to_json(const Hypergraph& g) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind_name(g.kind);
    if (g.kind != Hypergraph::Kind::C) {
        j["m"] = g.m;
        j["n"] = g.n;
    }
    j["q"] = g.q;
    if (g.kind == Hypergraph::Kind::C) {
        ordered_json verts = ordered_json::array();
        for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
            const auto x = c_vertex_label(i, g.q);
            verts.push_back({x[0], x[1], x[2]});
        }
        j["vertices"] = std::move(verts);
    } else {
        j["vertices"] = g.labels;
    }
    j["edges"] = g.edges;
    return j.dump();
}

Hypergraph hypergraph_from_json(std::string_view text) {
    ordered_json j = ordered_json::parse(text);
    Hypergraph g;
    g.kind = kind_from_name(j.at("kind").get<std::string>());
    g.q = j.at("q").get<int>();
    if (g.kind == Hypergraph::Kind::C) {
        g.m = 3;
        g.n = 0;
        for (const auto& v : j.at("vertices")) {
            if (!v.is_array() || v.size() != 3)
                throw std::invalid_argument("cube vertices must be triples");
            std::ostringstream os;
            os << v[0].get<int>() << ',' << v[1].get<int>() << ',' << v[2].get<int>();
            g.labels.push_back(os.str());
        }
    } else {
        g.m = j.at("m").get<int>();
        g.n = j.at("n").get<std::size_t>();
        g.labels = j.at("vertices").get<std::vector<std::string>>();
    }
    g.edges = j.at("edges").get<std::vector<std::vector<std::uint32_t>>>();
    for (const auto& e : g.edges) {
        if (e.size() < 2) throw std::invalid_argument("edges have cardinality >= 2");
        for (std::uint32_t v : e)
            if (v >= g.vertex_count())
                throw std::invalid_argument("edge vertex index out of range");
        if (!std::is_sorted(e.begin(), e.end()))
            throw std::invalid_argument("edges must be sorted");
    }
    return g;
}

std::string to_dimacs_edges(const Hypergraph& g) {
    std::ostringstream os;
    os << "c hjlab hypergraph kind=" << kind_name(g.kind) << " m=" << g.m
       << " n=" << g.n << " q=" << g.q << "\n";
    os << "c digest=" << hypergraph_digest(g) << "\n";
    os << "p edge " << g.vertex_count() << ' ' << g.edges.size() << "\n";
    for (const auto& e : g.edges) {
        os << 'e';
        for (std::uint32_t v : e) os << ' ' << v + 1;
        os << "\n";
    }
    return os.str();
}

std::string hypergraph_digest(const Hypergraph& g) {
    const std::string text = to_json(g);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    for (int i = 15; i >= 0; --i) os << ((h >> (4 * i)) & 0xF);
    return os.str();
}

std::string certificate_to_json(const ColourCertificate& cert) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    switch (cert.verdict) {
        case Verdict::Colourable: j["verdict"] = "colourable"; break;
        case Verdict::NotColourable: j["verdict"] = "not-colourable"; break;
        case Verdict::Inconclusive: j["verdict"] = "inconclusive"; break;
    }
    j["r"] = cert.r;
    j["digest"] = cert.digest;
    j["nodes"] = cert.stats.nodes;
    if (cert.witness) j["witness"] = cert.witness->assignment;
    if (!cert.note.empty()) j["note"] = cert.note;
    return j.dump();
}

}  // namespace hjlab
