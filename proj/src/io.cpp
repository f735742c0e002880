#include "peanocube/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace peanocube {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail("ParseError", what); }

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) parse_fail("invalid JSON");
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Graph graph_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        parse_fail("graph JSON needs \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer()) parse_fail("\"vertices\" must be an integer");
    int n = j["vertices"].get<int>();
    if (n < 0) parse_fail("negative vertex count");
    std::string name = j.value("name", "");
    std::vector<Edge> edges;
    if (!j["edges"].is_array()) parse_fail("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            parse_fail("edges must be [u,v] integer pairs");
        int u = e[0].get<int>(), v = e[1].get<int>();
        if (u >= v) parse_fail("edge endpoints must satisfy u < v");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges), name);
    } catch (const Error& err) {
        parse_fail(err.what());
    }
}

Graph graph_from_json_file(const std::string& path) { return graph_from_json(slurp(path)); }

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    if (!g.name().empty()) j["name"] = g.name();
    j["vertices"] = g.n();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

void graph_to_json_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("ParseError", "cannot write " + path);
    out << graph_to_json(g) << "\n";
}

std::string graph_to_dot(const Graph& g, const ThetaClassification* tc) {
    static const char* palette[] = {"red",    "blue",   "green3", "orange", "purple",
                                    "brown",  "cyan3",  "magenta", "gold3", "gray40",
                                    "pink3",  "olive"};
    std::ostringstream out;
    out << "graph \"" << (g.name().empty() ? "G" : g.name()) << "\" {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        out << "  " << u << " -- " << v;
        if (tc) {
            int c = tc->edge_class[e];
            out << " [color=" << palette[c % 12] << ", label=" << c << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

SelfMap selfmap_from_json_file(const std::string& path, int expected_n) {
    json j = parse_json(slurp(path));
    if (!j.is_object() || !j.contains("map") || !j["map"].is_array())
        parse_fail("self-map JSON needs \"map\": [...]");
    SelfMap f;
    for (const auto& x : j["map"]) {
        if (!x.is_number_integer()) parse_fail("self-map entries must be integers");
        f.image.push_back(x.get<int>());
    }
    if (static_cast<int>(f.image.size()) != expected_n)
        parse_fail("self-map length does not match the graph");
    return f;
}

ProperCover cover_from_json_file(const std::string& path) {
    json j = parse_json(slurp(path));
    if (!j.is_object() || !j.contains("v0") || !j.contains("v1"))
        parse_fail("cover JSON needs \"v0\" and \"v1\"");
    ProperCover cover;
    for (const auto& x : j["v0"]) cover.v0.push_back(x.get<int>());
    for (const auto& x : j["v1"]) cover.v1.push_back(x.get<int>());
    return cover;
}

}  // namespace peanocube
