#include "topograph/textio.hpp"

#include <sstream>
#include <vector>

namespace topograph {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream is(stripped);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto tok = tokens(line);
        if (tok.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        const std::string& kw = tok[0];
        if (kw == "vertex") {
            if (tok.size() != 2) fail("expected: vertex <id>");
            g.vertices.push_back(tok[1]);
        } else if (kw == "edge" || kw == "omega") {
            if (tok.size() != 4) fail("expected: " + kw + " <id> <dom> <range|?>");
            EdgeGroup e;
            e.id = tok[1];
            e.multiplicity = kw == "omega" ? Cardinal::omega() : Cardinal::finite(1);
            e.dom = tok[2];
            if (tok[3] != "?") e.range = tok[3];
            g.groups.push_back(std::move(e));
        } else if (kw == "relative") {
            // A bare `relative` declares the empty subset (Toeplitz side).
            if (!g.relative) g.relative.emplace();
            for (std::size_t i = 1; i < tok.size(); ++i) g.relative->insert(tok[i]);
        } else if (kw == "escape") {
            if (tok.size() != 2 || tok[1] != "omega") fail("expected: escape omega");
            g.escape = Escape::Omega;
        } else {
            fail("unknown declaration '" + kw + "'");
        }
    }
    return canonicalized(std::move(g));
}

std::string print_graph(const Graph& g) {
    Graph c = canonicalized(g);
    std::ostringstream os;
    for (const auto& v : c.vertices) os << "vertex " << v << "\n";
    for (const auto& e : c.groups) {
        if (e.multiplicity == Cardinal::finite(1))
            os << "edge ";
        else if (e.multiplicity.is_omega())
            os << "omega ";
        else
            throw std::invalid_argument("print_graph: finite multiplicity > 1 has no text form");
        os << e.id << " " << e.dom << " " << (e.range ? *e.range : "?") << "\n";
    }
    if (c.relative) {
        os << "relative";
        for (const auto& v : *c.relative) os << " " << v;
        os << "\n";
    }
    if (c.escape == Escape::Omega) os << "escape omega\n";
    return os.str();
}

}  // namespace topograph
