#include "upcolor/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace upcolor {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

[[noreturn]] void syntax(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
}

long long integer(std::string_view tok, std::size_t line_no) {
    long long value = 0;
    const auto* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, value);
    if (res.ec != std::errc{} || res.ptr != end) syntax(line_no, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

std::size_t count(std::string_view tok, std::size_t line_no) {
    const long long v = integer(tok, line_no);
    if (v < 0) syntax(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return static_cast<std::size_t>(v);
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        f(line, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

GraphDocument parse_graph_text(std::string_view text, std::string source) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::vector<std::optional<Color>> colors;
    std::vector<std::string> names;
    bool any_color = false;
    bool any_name = false;
    for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
        const auto tok = tokens(strip_comment(raw));
        if (tok.empty()) return;
        const auto d = tok[0];
        if (d == "n") {
            if (n) syntax(line_no, "vertex count given twice");
            if (tok.size() != 2) syntax(line_no, "expected 'n <count>'");
            n = count(tok[1], line_no);
            colors.assign(*n, std::nullopt);
            names.assign(*n, {});
            return;
        }
        if (!n) syntax(line_no, "'n <count>' must come before other directives");
        auto vertex = [&](std::string_view t) {
            const auto v = count(t, line_no);
            if (v >= *n) {
                throw Error(ErrorCode::VertexOutOfRange,
                            "line " + std::to_string(line_no) + ": vertex " + std::to_string(v) + " out of range");
            }
            return static_cast<Vertex>(v);
        };
        if (d == "e") {
            if (tok.size() != 3) syntax(line_no, "expected 'e <u> <v>'");
            edges.push_back({vertex(tok[1]), vertex(tok[2])});
        } else if (d == "c") {
            if (tok.size() != 3) syntax(line_no, "expected 'c <v> <color>'");
            const Vertex v = vertex(tok[1]);
            if (colors[v]) syntax(line_no, "vertex " + std::to_string(v) + " coloured twice");
            const long long c = integer(tok[2], line_no);
            if (c < 0 || c > 1'000'000'000) syntax(line_no, "colour out of range");
            colors[v] = static_cast<Color>(c);
            any_color = true;
        } else if (d == "v") {
            if (tok.size() != 3) syntax(line_no, "expected 'v <v> <name>'");
            names[vertex(tok[1])] = std::string(tok[2]);
            any_name = true;
        } else {
            syntax(line_no, "unknown directive '" + std::string(d) + "'");
        }
    });
    if (!n) throw Error(ErrorCode::SyntaxError, "missing 'n <count>' directive");
    GraphDocument doc;
    doc.source = std::move(source);
    doc.graph = new_graph(*n, edges);
    if (any_color) {
        std::vector<Color> values(*n);
        for (Vertex v = 0; v < *n; ++v) {
            if (!colors[v]) throw Error(ErrorCode::SyntaxError, "vertex " + std::to_string(v) + " has no colour");
            values[v] = *colors[v];
        }
        doc.coloring = Coloring(std::move(values));
        const auto check = validate_coloring(doc.graph, *doc.coloring);
        if (!check.proper) {
            throw Error(ErrorCode::ImproperColoring, "edge (" + std::to_string(check.violation->u) + "," +
                                                         std::to_string(check.violation->v) + ") joins equal colours");
        }
    }
    if (any_name) {
        for (Vertex v = 0; v < *n; ++v) {
            if (names[v].empty()) names[v] = std::to_string(v);
        }
        doc.names = std::move(names);
    }
    return doc;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphDocument parse_graph_file(const std::string& path) { return parse_graph_text(read_file(path), path); }

std::string serialize_graph(const GraphDocument& doc) {
    std::ostringstream out;
    out << "n " << doc.graph.order() << '\n';
    for (const auto& e : doc.graph.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    if (doc.coloring) {
        for (Vertex v = 0; v < doc.graph.order(); ++v) out << "c " << v << ' ' << (*doc.coloring)[v] << '\n';
    }
    for (Vertex v = 0; v < doc.names.size(); ++v) out << "v " << v << ' ' << doc.names[v] << '\n';
    return out.str();
}

ThreeSatInstance parse_dimacs_cnf(std::string_view text) {
    ThreeSatInstance inst;
    bool header = false;
    std::size_t declared = 0;
    std::vector<int> current;
    for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
        const auto tok = tokens(raw);
        if (tok.empty() || tok[0] == "c" || tok[0] == "%") return;
        if (tok[0] == "p") {
            if (header || tok.size() != 4 || tok[1] != "cnf") syntax(line_no, "expected a single 'p cnf <vars> <clauses>'");
            inst.variables = count(tok[2], line_no);
            declared = count(tok[3], line_no);
            header = true;
            return;
        }
        if (!header) syntax(line_no, "clause before the 'p cnf' header");
        for (auto t : tok) {
            const long long lit = integer(t, line_no);
            if (lit == 0) {
                if (current.empty()) syntax(line_no, "empty clause");
                inst.clauses.push_back(current);
                current.clear();
                continue;
            }
            if (static_cast<std::size_t>(lit < 0 ? -lit : lit) > inst.variables) {
                syntax(line_no, "literal " + std::to_string(lit) + " exceeds the declared variable count");
            }
            current.push_back(static_cast<int>(lit));
        }
    });
    if (!header) throw Error(ErrorCode::SyntaxError, "missing 'p cnf' header");
    if (!current.empty()) inst.clauses.push_back(current);
    if (inst.clauses.size() != declared) {
        throw Error(ErrorCode::SyntaxError, "header declares " + std::to_string(declared) + " clauses, found " +
                                                std::to_string(inst.clauses.size()));
    }
    return inst;
}

std::string serialize_dimacs_cnf(const ThreeSatInstance& inst) {
    std::ostringstream out;
    out << "p cnf " << inst.variables << ' ' << inst.clauses.size() << '\n';
    for (const auto& clause : inst.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

MinCoverInstance parse_min_cover(std::string_view text) {
    MinCoverInstance inst;
    bool have_universe = false;
    bool have_bound = false;
    for_each_line(text, [&](std::string_view raw, std::size_t line_no) {
        const auto tok = tokens(strip_comment(raw));
        if (tok.empty()) return;
        if (tok[0] == "u") {
            if (have_universe || tok.size() != 2) syntax(line_no, "expected a single 'u <m>'");
            const std::size_t m = count(tok[1], line_no);
            for (std::size_t e = 1; e <= m; ++e) inst.universe.push_back(static_cast<int>(e));
            have_universe = true;
        } else if (tok[0] == "s") {
            if (!have_universe) syntax(line_no, "'u <m>' must come before subsets");
            if (tok.size() < 2 || tok.size() > 4) syntax(line_no, "subsets hold 1 to 3 elements");
            std::vector<int> subset;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                const std::size_t e = count(tok[i], line_no);
                if (e < 1 || e > inst.universe.size()) syntax(line_no, "element " + std::to_string(e) + " out of range");
                subset.push_back(static_cast<int>(e));
            }
            inst.subsets.push_back(std::move(subset));
        } else if (tok[0] == "t") {
            if (have_bound || tok.size() != 2) syntax(line_no, "expected a single 't <bound>'");
            inst.t = count(tok[1], line_no);
            have_bound = true;
        } else {
            syntax(line_no, "unknown directive '" + std::string(tok[0]) + "'");
        }
    });
    if (!have_universe) throw Error(ErrorCode::SyntaxError, "missing 'u <m>' directive");
    if (!have_bound) inst.t = inst.subsets.size();
    return inst;
}

std::string emit_dot(const GraphDocument& doc, const VertexSet& highlight) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < doc.graph.order(); ++v) {
        std::string label = doc.names.empty() ? std::to_string(v) : doc.names[v];
        if (doc.coloring) label += ":" + std::to_string((*doc.coloring)[v]);
        out << "  " << v << " [label=" << quote(label);
        if (highlight.universe() > v && highlight.contains(v)) out << ", style=dashed, peripheries=2";
        out << "];\n";
    }
    for (const auto& e : doc.graph.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace upcolor
