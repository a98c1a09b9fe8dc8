#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "graphlink/chord.hpp"
#include "graphlink/errors.hpp"
#include "graphlink/io.hpp"

using namespace graphlink;

namespace {

const std::string cli = GRAPHLINK_CLI_PATH;
const std::string fixtures = GRAPHLINK_FIXTURES;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::filesystem::path out_path =
        std::filesystem::temp_directory_path() / "graphlink_cli_out.txt";
    std::string cmd = cli + " " + args + " > " + out_path.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string fixture(const std::string& name) { return fixtures + "/" + name; }

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p.string();
}

std::string parse_error_message(const std::string& text) {
    try {
        parse_string(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("serialization round trips") {
    LabeledGraph g;
    g.add_vertex("a", 0, +1);
    g.add_vertex("b", 1, -1);
    g.add_edge("a", "b");
    ParsedFile f = parse_string(serialize(g));
    REQUIRE(std::holds_alternative<LabeledGraph>(f));
    CHECK(std::get<LabeledGraph>(f) == g);
    CHECK(serialize(std::get<LabeledGraph>(f)) == serialize(g));

    LoopedGraph l;
    l.add_vertex("x", true);
    l.add_vertex("y", false);
    l.add_edge("x", "y");
    ParsedFile fl = parse_string(serialize(l));
    REQUIRE(std::holds_alternative<LoopedGraph>(fl));
    CHECK(std::get<LoopedGraph>(fl) == l);

    ChordDiagram d({"a", "b", "a", "b"},
                   {{"a", ChordLabel{1, -1}}, {"b", ChordLabel{0, +1}}});
    ParsedFile fd = parse_string(serialize(d));
    REQUIRE(std::holds_alternative<ChordDiagram>(fd));
    CHECK(std::get<ChordDiagram>(fd) == d);
}

TEST_CASE("comments and blank lines are ignored") {
    ParsedFile f = parse_string("# leading comment\n"
                                "graphlink v1 labeled\n"
                                "\n"
                                "v a 0 +\n"
                                "# trailing comment\n");
    REQUIRE(std::holds_alternative<LabeledGraph>(f));
    CHECK(std::get<LabeledGraph>(f).vertex_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(contains(parse_error_message("nonsense\n"), "line 1"));
    CHECK(contains(parse_error_message("graphlink v1 labeled\nx a\n"), "line 2"));
    CHECK(contains(parse_error_message(
                       "graphlink v1 labeled\nv a 0 +\nv a 0 +\n"),
                   "line 3"));
    CHECK(contains(parse_error_message(
                       "graphlink v1 labeled\nv a 0 +\ne a b\n"),
                   "line 3"));
    CHECK(contains(parse_error_message(
                       "graphlink v1 labeled\nv a 0 +\ne a a\n"),
                   "line 3"));
    CHECK(contains(parse_error_message("graphlink v1 labeled\nv a 2 +\n"),
                   "line 2"));
    CHECK(contains(parse_error_message("graphlink v1 chords\nD: a a b\n"),
                   "line 2"));
    CHECK(contains(parse_error_message(
                       "graphlink v1 chords\nD: a a\nc a 0 +\nc a 0 +\n"),
                   "line 4"));
    CHECK(parse_error_message("graphlink v1 labeled\nv a 0 +\n").empty());
}

TEST_CASE("cli invariants") {
    RunResult kink = run("invariants " + fixture("kink.graph"));
    CHECK(kink.code == 0);
    CHECK(contains(kink.out, "components: 1"));
    CHECK(contains(kink.out, "writhe: 1"));
    CHECK(contains(kink.out, "bracket: -1*a^3"));
    CHECK(contains(kink.out, "span: 0"));
    CHECK(contains(kink.out, "parity: k=even"));
    CHECK(contains(kink.out, "minimal: inconclusive"));

    RunResult empty = run("invariants " + fixture("empty_labeled.graph"));
    CHECK(empty.code == 0);
    CHECK(contains(empty.out, "components: 1"));
    CHECK(contains(empty.out, "bracket: 1"));

    RunResult bw3 = run("invariants " + fixture("bw3.graph"));
    CHECK(bw3.code == 0);
    CHECK(contains(bw3.out, "components: 4"));
    CHECK(contains(bw3.out, "span: 28"));
    CHECK(contains(bw3.out, "genus: 0"));
    CHECK(contains(bw3.out, "alternating: true"));
    CHECK(contains(bw3.out, "nonsplit: true"));
    CHECK(contains(bw3.out, "minimal: by-alternating"));

    // Looped files are not accepted here.
    CHECK(run("invariants " + fixture("w5.graph")).code == 2);
}

TEST_CASE("cli moves and move") {
    RunResult moves = run("moves " + fixture("w5.graph"));
    CHECK(moves.code == 0);
    CHECK(contains(moves.out, "r1-add template"));
    CHECK_FALSE(contains(moves.out, "r2-remove"));

    RunResult removed = run("move " + fixture("kink.graph") + " og1 remove k");
    CHECK(removed.code == 0);
    CHECK(removed.out == "graphlink v1 labeled\n");

    // Removing a non-isolated vertex is a domain error.
    CHECK(run("move " + fixture("path3.graph") + " og1-remove b").code == 2);
}

TEST_CASE("cli realize") {
    RunResult path3 = run("realize " + fixture("path3.graph"));
    CHECK(path3.code == 0);
    ParsedFile f = parse_string(path3.out);
    REQUIRE(std::holds_alternative<ChordDiagram>(f));
    CHECK(isomorphic(intersection_graph(std::get<ChordDiagram>(f)),
                     std::get<LabeledGraph>(
                         parse_string(serialize(std::get<LabeledGraph>(
                             load_file(fixture("path3.graph"))))))));

    RunResult w5 = run("realize " + fixture("w5.graph"));
    CHECK(w5.code == 0);
    CHECK(contains(w5.out, "non-realizable"));
    CHECK(contains(w5.out, "graph-link: certified-non-realizable"));

    RunResult bw3 = run("realize " + fixture("bw3.graph") + " --max-steps 1000");
    CHECK(bw3.code == 0);
    CHECK(contains(bw3.out, "non-realizable"));
    CHECK(contains(bw3.out, "graph-link: unknown"));
}

TEST_CASE("cli equiv") {
    RunResult same = run("equiv " + fixture("path3.graph") + " " +
                         fixture("path3.graph"));
    CHECK(same.code == 0);
    CHECK(contains(same.out, "found: 0 moves"));

    RunResult kink = run("equiv " + fixture("kink.graph") + " " +
                         fixture("empty_labeled.graph"));
    CHECK(kink.code == 0);
    CHECK(contains(kink.out, "found: 1 moves"));
    CHECK(contains(kink.out, "og1-remove k"));

    RunResult w5 = run("equiv " + fixture("w5.graph") + " " +
                       fixture("empty_looped.graph") +
                       " --max-vertices 6 --max-steps 50");
    CHECK(w5.code == 0);
    CHECK(contains(w5.out, "not-found-within-bounds"));

    // A vertex bound below the input size is a size error.
    CHECK(run("equiv " + fixture("kink.graph") + " " +
              fixture("empty_labeled.graph") + " --max-vertices 0")
              .code == 4);
}

TEST_CASE("cli chi round trip") {
    RunResult looped = run("chi " + fixture("kink.graph"));
    CHECK(looped.code == 0);
    CHECK(looped.out == "graphlink v1 looped\nv k 0\n");

    std::string tmp = write_temp("graphlink_chi_tmp.graph", looped.out);
    RunResult back = run("chi " + tmp + " --direction to-labeled");
    CHECK(back.code == 0);
    CHECK(back.out == "graphlink v1 labeled\nv k 0 -\n");

    // Direction must match the file kind.
    CHECK(run("chi " + fixture("kink.graph") + " --direction to-labeled").code ==
          2);
    // chi needs a one-component graph.
    CHECK(run("chi " + fixture("bw3.graph")).code == 2);
}

TEST_CASE("cli bracket-parity") {
    RunResult kink = run("bracket-parity " + fixture("kink.graph"));
    CHECK(kink.code == 0);
    CHECK(contains(kink.out, "terms: 1"));
    CHECK(contains(kink.out, "term: (empty)"));

    // link2 needs two components.
    CHECK(run("bracket-parity " + fixture("kink.graph") + " --kind link2").code ==
          2);
}

TEST_CASE("cli exit codes for bad input") {
    std::string bad = write_temp("graphlink_bad.graph", "not a graph file\n");
    CHECK(run("invariants " + bad).code == 3);
    CHECK(run("invariants /nonexistent/graphlink_missing.graph").code == 3);

    RunResult chords = run("invariants " + fixture("linked_pair.chords"));
    CHECK(chords.code == 2); // wrong file kind for this subcommand
}
