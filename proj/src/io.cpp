#include "arbornet/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace arbornet {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                  : message),
      line(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

void require_token(const std::string& tok, int line_no) {
    if (!is_valid_token(tok))
        throw ParseError(line_no, "invalid token '" + tok + "'");
}

}  // namespace

Network parse_net(const std::string& text) {
    std::vector<Network::Arc> arcs;
    std::vector<Network::LabelRecord> labels;
    std::set<Network::Arc> seen_arcs;
    std::map<std::string, int> label_line;   // vertex -> line of its L record
    std::set<std::string> arc_vertices;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "A") {
            if (toks.size() != 3)
                throw ParseError(line_no, "expected 'A <tail> <head>'");
            require_token(toks[1], line_no);
            require_token(toks[2], line_no);
            if (toks[1] == toks[2])
                throw ParseError(line_no, "self-arc on '" + toks[1] + "'");
            if (!seen_arcs.insert({toks[1], toks[2]}).second)
                throw ParseError(line_no, "duplicate arc");
            arcs.emplace_back(toks[1], toks[2]);
            arc_vertices.insert(toks[1]);
            arc_vertices.insert(toks[2]);
        } else if (toks[0] == "L") {
            if (toks.size() != 3)
                throw ParseError(line_no, "expected 'L <vertex> <label>'");
            require_token(toks[1], line_no);
            require_token(toks[2], line_no);
            if (!label_line.emplace(toks[1], line_no).second)
                throw ParseError(line_no, "vertex '" + toks[1] + "' labeled twice");
            labels.emplace_back(toks[1], toks[2]);
        } else {
            throw ParseError(line_no, "unknown record '" + toks[0] + "'");
        }
    }
    for (const auto& [vertex, at] : label_line)
        if (!arc_vertices.count(vertex))
            throw ParseError(at, "labeled vertex '" + vertex + "' appears in no arc");
    if (arcs.empty()) throw ParseError(0, "document contains no arcs");

    try {
        return Network::from_arcs(arcs, labels);
    } catch (const std::invalid_argument& err) {
        throw ParseError(0, err.what());
    }
}

std::string serialize_net(const Network& net) {
    std::string out;
    for (const Network::Arc& a : net.arcs())
        out += "A " + a.first + " " + a.second + "\n";
    for (const Network::LabelRecord& rec : net.label_records())
        out += "L " + rec.first + " " + rec.second + "\n";
    return out;
}

std::pair<TripletSystem, DuetSystem> parse_constraints(const std::string& text) {
    std::vector<Triplet> triplets;
    std::vector<Duet> duets;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "T") {
            if (toks.size() != 4)
                throw ParseError(line_no, "expected 'T <a> <b> <c>'");
            for (int i = 1; i <= 3; ++i) require_token(toks[i], line_no);
            try {
                triplets.push_back(Triplet::make(toks[1], toks[2], toks[3]));
            } catch (const std::invalid_argument& err) {
                throw ParseError(line_no, err.what());
            }
        } else if (toks[0] == "D") {
            if (toks.size() != 3)
                throw ParseError(line_no, "expected 'D <a> <b>'");
            require_token(toks[1], line_no);
            require_token(toks[2], line_no);
            try {
                duets.push_back(Duet::make(toks[1], toks[2]));
            } catch (const std::invalid_argument& err) {
                throw ParseError(line_no, err.what());
            }
        } else {
            throw ParseError(line_no, "unknown record '" + toks[0] + "'");
        }
    }
    return {TripletSystem(std::move(triplets)), DuetSystem(std::move(duets))};
}

std::string serialize_constraints(const TripletSystem& r, const DuetSystem& d) {
    std::string out;
    for (const Triplet& t : r.members())
        out += "T " + t.a + " " + t.b + " " + t.c + "\n";
    for (const Duet& duet : d.members())
        out += "D " + duet.a + " " + duet.b + "\n";
    return out;
}

std::string emit_dot(const Network& net) {
    std::string out = "digraph network {\n";
    for (int v = 0; v < net.vertex_count(); ++v) {
        out += "  \"" + net.name(v) + "\" ";
        switch (classify(net, v)) {
            case VertexClass::Root:
                out += "[shape=box];\n";
                break;
            case VertexClass::Hybrid:
                out += "[shape=diamond];\n";
                break;
            case VertexClass::Leaf:
                out += "[shape=plaintext, label=\"" + net.label(v) + "\"];\n";
                break;
            default:
                out += "[shape=point];\n";
                break;
        }
    }
    for (const Network::Arc& a : net.arcs())
        out += "  \"" + a.first + "\" -> \"" + a.second + "\";\n";
    out += "}\n";
    return out;
}

}  // namespace arbornet
