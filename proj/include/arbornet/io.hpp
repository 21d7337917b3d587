#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "arbornet/encoding.hpp"
#include "arbornet/network.hpp"

namespace arbornet {

struct ParseError : std::runtime_error {
    int line;   // 1-based; 0 for whole-document errors

    ParseError(int line, const std::string& message);
};

// NET documents: `A <tail> <head>` per arc, `L <vertex> <label>` per leaf,
// `#` comments and blank lines ignored. Canonical serialization sorts arcs
// then labels; parse(serialize(n)) == n.
Network parse_net(const std::string& text);
std::string serialize_net(const Network& net);

// Constraint documents: `T <a> <b> <c>` for ab|c, `D <a> <b>` for <a,b>.
// Duplicates collapse; serialization sorts triplets then duets.
std::pair<TripletSystem, DuetSystem> parse_constraints(const std::string& text);
std::string serialize_constraints(const TripletSystem& r, const DuetSystem& d);

// Graphviz rendering: roots as boxes, hybrids as diamonds, leaves labeled.
std::string emit_dot(const Network& net);

}  // namespace arbornet
