#include "graphlink/io.hpp"

#include <fstream>
#include <sstream>

#include "graphlink/errors.hpp"

namespace graphlink {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& reason) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": " + reason);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

int parse_framing(const std::string& tok, std::size_t line) {
    if (tok == "0")
        return 0;
    if (tok == "1")
        return 1;
    fail(line, "framing must be 0 or 1, got '" + tok + "'");
}

int parse_sign(const std::string& tok, std::size_t line) {
    if (tok == "+")
        return +1;
    if (tok == "-")
        return -1;
    fail(line, "sign must be + or -, got '" + tok + "'");
}

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

ParsedFile parse_lines(const std::vector<Line>& lines) {
    if (lines.empty())
        fail(1, "missing header 'graphlink v1 <kind>'");
    const Line& header = lines.front();
    if (header.tokens.size() != 3 || header.tokens[0] != "graphlink" ||
        header.tokens[1] != "v1")
        fail(header.number, "expected header 'graphlink v1 <kind>'");
    const std::string& kind = header.tokens[2];

    if (kind == "labeled") {
        LabeledGraph g;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            const Line& l = lines[k];
            if (l.tokens[0] == "v") {
                if (l.tokens.size() != 4)
                    fail(l.number, "expected 'v <id> <framing> <sign>'");
                if (g.has_vertex(l.tokens[1]))
                    fail(l.number, "duplicate vertex id '" + l.tokens[1] + "'");
                g.add_vertex(l.tokens[1], parse_framing(l.tokens[2], l.number),
                             parse_sign(l.tokens[3], l.number));
            } else if (l.tokens[0] == "e") {
                if (l.tokens.size() != 3)
                    fail(l.number, "expected 'e <id> <id>'");
                if (!g.has_vertex(l.tokens[1]) || !g.has_vertex(l.tokens[2]))
                    fail(l.number, "edge references undeclared vertex");
                if (l.tokens[1] == l.tokens[2])
                    fail(l.number, "loops are not allowed");
                std::size_t i = g.index_of(l.tokens[1]);
                std::size_t j = g.index_of(l.tokens[2]);
                if (g.adjacent(i, j))
                    fail(l.number, "duplicate edge");
                g.set_edge(i, j, true);
            } else {
                fail(l.number, "unknown directive '" + l.tokens[0] + "'");
            }
        }
        return g;
    }

    if (kind == "looped") {
        LoopedGraph g;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            const Line& l = lines[k];
            if (l.tokens[0] == "v") {
                if (l.tokens.size() != 3)
                    fail(l.number, "expected 'v <id> <0|1>'");
                if (g.has_vertex(l.tokens[1]))
                    fail(l.number, "duplicate vertex id '" + l.tokens[1] + "'");
                g.add_vertex(l.tokens[1],
                             parse_framing(l.tokens[2], l.number) == 1);
            } else if (l.tokens[0] == "e") {
                if (l.tokens.size() != 3)
                    fail(l.number, "expected 'e <id> <id>'");
                if (!g.has_vertex(l.tokens[1]) || !g.has_vertex(l.tokens[2]))
                    fail(l.number, "edge references undeclared vertex");
                if (l.tokens[1] == l.tokens[2])
                    fail(l.number, "loops are not allowed");
                std::size_t i = g.index_of(l.tokens[1]);
                std::size_t j = g.index_of(l.tokens[2]);
                if (g.adjacent(i, j))
                    fail(l.number, "duplicate edge");
                g.set_edge(i, j, true);
            } else {
                fail(l.number, "unknown directive '" + l.tokens[0] + "'");
            }
        }
        return g;
    }

    if (kind == "chords") {
        std::vector<std::string> word;
        bool have_word = false;
        std::map<std::string, ChordLabel> labels;
        std::size_t word_line = header.number;
        for (std::size_t k = 1; k < lines.size(); ++k) {
            const Line& l = lines[k];
            if (l.tokens[0] == "D:") {
                if (have_word)
                    fail(l.number, "duplicate 'D:' line");
                have_word = true;
                word_line = l.number;
                word.assign(l.tokens.begin() + 1, l.tokens.end());
            } else if (l.tokens[0] == "c") {
                if (l.tokens.size() != 4)
                    fail(l.number, "expected 'c <token> <framing> <sign>'");
                if (labels.count(l.tokens[1]))
                    fail(l.number, "duplicate chord label '" + l.tokens[1] + "'");
                labels[l.tokens[1]] =
                    ChordLabel{parse_framing(l.tokens[2], l.number),
                               parse_sign(l.tokens[3], l.number)};
            } else {
                fail(l.number, "unknown directive '" + l.tokens[0] + "'");
            }
        }
        if (!have_word)
            fail(header.number, "chord file needs a 'D:' line");
        try {
            return ChordDiagram(std::move(word), std::move(labels));
        } catch (const Error& e) {
            fail(word_line, e.reason());
        }
    }

    fail(header.number, "unknown kind '" + kind + "'");
}

} // namespace

ParsedFile parse_file(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::vector<std::string> toks = tokens_of(raw);
        if (toks.empty() || toks[0][0] == '#')
            continue;
        lines.push_back(Line{number, std::move(toks)});
    }
    return parse_lines(lines);
}

ParsedFile parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse_file(in);
}

ParsedFile load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open file '" + path + "'");
    return parse_file(in);
}

std::string serialize(const LabeledGraph& g) {
    std::ostringstream out;
    out << "graphlink v1 labeled\n";
    for (const auto& v : g.vertices())
        out << "v " << v.id << " " << v.framing << " "
            << (v.sign < 0 ? '-' : '+') << "\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j))
                out << "e " << g.vertex(i).id << " " << g.vertex(j).id << "\n";
    return out.str();
}

std::string serialize(const LoopedGraph& g) {
    std::ostringstream out;
    out << "graphlink v1 looped\n";
    for (const auto& v : g.vertices())
        out << "v " << v.id << " " << (v.looped ? 1 : 0) << "\n";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
            if (g.adjacent(i, j))
                out << "e " << g.vertex(i).id << " " << g.vertex(j).id << "\n";
    return out.str();
}

std::string serialize(const ChordDiagram& d) {
    std::ostringstream out;
    out << "graphlink v1 chords\n";
    out << "D:";
    for (const auto& t : d.word())
        out << " " << t;
    out << "\n";
    for (const auto& [t, l] : d.labels())
        out << "c " << t << " " << l.framing << " " << (l.sign < 0 ? '-' : '+')
            << "\n";
    return out.str();
}

} // namespace graphlink
