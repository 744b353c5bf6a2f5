#pragma once

// Text formats: edge lists, JSON split certificates, torus drawings, signed
// graphs, and DIMACS-style SAT instances with a clause-cycle line.

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "planesplit/certificate.hpp"
#include "planesplit/graph.hpp"
#include "planesplit/hardness.hpp"
#include "planesplit/splitters.hpp"

namespace planesplit::io {

namespace detail {

inline bool comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

struct LineReader {
    std::istream& in;
    int lineno = 0;

    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!comment_or_blank(line)) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    }
};

inline std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline long long to_int(LineReader& r, const std::string& tok) {
    long long value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        r.fail("expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace detail

// --- edge list: header "n <count>", one "u v" line per edge ---

inline Graph read_edge_list(std::istream& in) {
    detail::LineReader r{in};
    std::string line;
    if (!r.next(line)) throw parse_error("edge list: empty input");
    auto head = detail::tokens(line);
    if (head.size() != 2 || head[0] != "n") r.fail("expected header 'n <vertex-count>'");
    int n = static_cast<int>(detail::to_int(r, head[1]));
    std::vector<Edge> edges;
    while (r.next(line)) {
        auto t = detail::tokens(line);
        if (t.size() != 2) r.fail("expected an edge 'u v'");
        int u = static_cast<int>(detail::to_int(r, t[0]));
        int v = static_cast<int>(detail::to_int(r, t[1]));
        if (u < 0 || v < 0 || u >= n || v >= n) r.fail("edge endpoint out of range");
        if (u == v) r.fail("self-loop");
        edges.push_back(make_edge(u, v));
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const input_error& e) {
        throw parse_error(std::string("edge list: ") + e.what());
    }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

// --- certificate: JSON with keys base, copies, edges ---

inline SplitCertificate read_certificate(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("certificate: ") + e.what());
    }
    auto need = [&](const nlohmann::json& obj, const char* field) -> const nlohmann::json& {
        if (!obj.contains(field))
            throw parse_error(std::string("certificate: missing field '") + field + "'");
        return obj.at(field);
    };
    try {
        const auto& base = need(j, "base");
        int n = need(base, "n").get<int>();
        std::vector<Edge> bedges;
        for (const auto& e : need(base, "edges")) {
            if (!e.is_array() || e.size() != 2)
                throw parse_error("certificate: base edge must be [u, v]");
            bedges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
        }
        Graph g(n, std::move(bedges));

        std::vector<int> counts(n, 0);
        for (const auto& [key, val] : need(j, "copies").items()) {
            int v = std::stoi(key);
            if (v < 0 || v >= n) throw parse_error("certificate: copies key out of range");
            counts[v] = val.get<int>();
        }
        std::vector<SplitEdge> sedges;
        for (const auto& e : need(j, "edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2 ||
                !e[1].is_array() || e[1].size() != 2)
                throw parse_error("certificate: edge must be [[u,i],[v,j]]");
            sedges.push_back(
                {e[0][0].get<int>(), e[0][1].get<int>(), e[1][0].get<int>(), e[1][1].get<int>()});
        }
        return SplitCertificate(std::move(g), std::move(counts), std::move(sedges));
    } catch (const parse_error&) {
        throw;
    } catch (const std::exception& e) {
        throw parse_error(std::string("certificate: ") + e.what());
    }
}

inline void write_certificate(std::ostream& out, const SplitCertificate& cert) {
    nlohmann::ordered_json j;
    j["base"]["n"] = cert.base.vertex_count();
    auto& be = j["base"]["edges"] = nlohmann::json::array();
    for (auto [u, v] : cert.base.edges()) be.push_back({u, v});
    auto& copies = j["copies"] = nlohmann::ordered_json::object();
    for (int v = 0; v < cert.base.vertex_count(); ++v)
        copies[std::to_string(v)] = cert.copy_counts[v];
    auto& se = j["edges"] = nlohmann::json::array();
    for (const auto& e : cert.split_edges)
        se.push_back({{e.u, e.ui}, {e.v, e.vi}});
    out << j.dump(1) << "\n";
}

// --- torus drawing: "u v wx wy" edges plus optional "pos u x y" lines ---

inline TorusDrawing read_torus(std::istream& in) {
    detail::LineReader r{in};
    std::string line;
    if (!r.next(line)) throw parse_error("torus: empty input");
    auto head = detail::tokens(line);
    if (head.size() != 2 || head[0] != "n") r.fail("expected header 'n <vertex-count>'");
    int n = static_cast<int>(detail::to_int(r, head[1]));
    std::vector<Edge> edges;
    std::map<Edge, std::pair<int, int>> wrap;
    std::map<int, std::pair<double, double>> pos;
    while (r.next(line)) {
        auto t = detail::tokens(line);
        if (!t.empty() && t[0] == "pos") {
            if (t.size() != 4) r.fail("expected 'pos u x y'");
            int v = static_cast<int>(detail::to_int(r, t[1]));
            if (v < 0 || v >= n) r.fail("pos vertex out of range");
            pos[v] = {std::stod(t[2]), std::stod(t[3])};
            continue;
        }
        if (t.size() != 4) r.fail("expected 'u v wx wy'");
        int u = static_cast<int>(detail::to_int(r, t[0]));
        int v = static_cast<int>(detail::to_int(r, t[1]));
        int wx = static_cast<int>(detail::to_int(r, t[2]));
        int wy = static_cast<int>(detail::to_int(r, t[3]));
        if (u == v) r.fail("self-loop");
        if (wx < -1 || wx > 1 || wy < -1 || wy > 1) r.fail("wrap out of range");
        if (u > v) {
            std::swap(u, v);
            wx = -wx;
            wy = -wy;
        }
        edges.push_back({u, v});
        wrap[{u, v}] = {wx, wy};
    }
    try {
        return TorusDrawing(Graph(n, std::move(edges)), std::move(wrap), std::move(pos));
    } catch (const input_error& e) {
        throw parse_error(std::string("torus: ") + e.what());
    }
}

inline void write_torus(std::ostream& out, const TorusDrawing& d) {
    out << "n " << d.graph.vertex_count() << "\n";
    for (auto [u, v] : d.graph.edges()) {
        auto [wx, wy] = d.wrap.at({u, v});
        out << u << " " << v << " " << wx << " " << wy << "\n";
    }
    for (const auto& [v, xy] : d.coords)
        out << "pos " << v << " " << xy.first << " " << xy.second << "\n";
}

// --- signed graph: "u v s" with s in {+,-} ---

inline SignedGraph read_signed(std::istream& in) {
    detail::LineReader r{in};
    std::string line;
    if (!r.next(line)) throw parse_error("signed: empty input");
    auto head = detail::tokens(line);
    if (head.size() != 2 || head[0] != "n") r.fail("expected header 'n <vertex-count>'");
    int n = static_cast<int>(detail::to_int(r, head[1]));
    std::vector<Edge> edges;
    std::map<Edge, int> sign;
    while (r.next(line)) {
        auto t = detail::tokens(line);
        if (t.size() != 3) r.fail("expected 'u v s'");
        int u = static_cast<int>(detail::to_int(r, t[0]));
        int v = static_cast<int>(detail::to_int(r, t[1]));
        int s;
        if (t[2] == "+" || t[2] == "+1")
            s = 1;
        else if (t[2] == "-" || t[2] == "-1")
            s = -1;
        else {
            r.fail("sign must be + or -");
        }
        edges.push_back(make_edge(u, v));
        sign[make_edge(u, v)] = s;
    }
    try {
        return SignedGraph(Graph(n, std::move(edges)), std::move(sign));
    } catch (const input_error& e) {
        throw parse_error(std::string("signed: ") + e.what());
    }
}

inline void write_signed(std::ostream& out, const SignedGraph& sg) {
    out << "n " << sg.graph.vertex_count() << "\n";
    for (auto [u, v] : sg.graph.edges())
        out << u << " " << v << " " << (sg.sign.at({u, v}) > 0 ? "+" : "-") << "\n";
}

// --- SAT: DIMACS "p cnf V C", 3-literal clauses, one "cy" clause-order line ---

inline SatInstance read_sat(std::istream& in) {
    detail::LineReader r{in};
    std::string line;
    SatInstance inst;
    bool have_p = false, have_cy = false;
    int expect_clauses = 0;
    while (std::getline(in, line)) {
        ++r.lineno;
        auto t = detail::tokens(line);
        if (t.empty() || t[0] == "c" || t[0][0] == '#') continue;
        if (t[0] == "p") {
            if (t.size() != 4 || t[1] != "cnf") r.fail("expected 'p cnf <vars> <clauses>'");
            inst.var_count = static_cast<int>(detail::to_int(r, t[2]));
            expect_clauses = static_cast<int>(detail::to_int(r, t[3]));
            have_p = true;
            continue;
        }
        if (t[0] == "cy") {
            for (size_t i = 1; i < t.size(); ++i)
                inst.clause_cycle.push_back(static_cast<int>(detail::to_int(r, t[i])) - 1);
            have_cy = true;
            continue;
        }
        if (!have_p) r.fail("clause before the 'p cnf' header");
        if (t.size() != 4 || t[3] != "0") r.fail("expected exactly 3 literals terminated by 0");
        std::array<Literal, 3> cl;
        for (int k = 0; k < 3; ++k) {
            long long lit = detail::to_int(r, t[k]);
            if (lit == 0) r.fail("literal must be nonzero");
            cl[k] = {static_cast<int>(std::abs(lit)) - 1, lit > 0};
        }
        inst.clauses.push_back(cl);
    }
    if (!have_p) throw parse_error("sat: missing 'p cnf' header");
    if (static_cast<int>(inst.clauses.size()) != expect_clauses)
        throw parse_error("sat: clause count differs from the header");
    if (!have_cy) {
        inst.clause_cycle.resize(inst.clauses.size());
        for (size_t i = 0; i < inst.clauses.size(); ++i) inst.clause_cycle[i] = static_cast<int>(i);
    }
    return inst;
}

inline void write_sat(std::ostream& out, const SatInstance& inst) {
    out << "p cnf " << inst.var_count << " " << inst.clause_count() << "\n";
    for (const auto& cl : inst.clauses) {
        for (const auto& lit : cl) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << " ";
        out << "0\n";
    }
    out << "cy";
    for (int j : inst.clause_cycle) out << " " << j + 1;
    out << "\n";
}

}  // namespace planesplit::io
