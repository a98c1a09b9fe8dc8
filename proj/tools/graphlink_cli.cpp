#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "graphlink/chi.hpp"
#include "graphlink/chord.hpp"
#include "graphlink/errors.hpp"
#include "graphlink/invariants.hpp"
#include "graphlink/io.hpp"
#include "graphlink/moves.hpp"
#include "graphlink/parity.hpp"

namespace gl = graphlink;

namespace {

gl::LabeledGraph expect_labeled(const gl::ParsedFile& f) {
    if (const auto* g = std::get_if<gl::LabeledGraph>(&f))
        return *g;
    throw gl::Error(gl::ErrorCode::NotApplicable, "a labeled graph file is required",
                    "wrong-file-kind");
}

int parse_sign_arg(const std::string& tok) {
    if (tok == "+")
        return +1;
    if (tok == "-")
        return -1;
    throw gl::Error(gl::ErrorCode::ParseError, "sign must be + or -");
}

int parse_bit_arg(const std::string& tok) {
    if (tok == "0")
        return 0;
    if (tok == "1")
        return 1;
    throw gl::Error(gl::ErrorCode::ParseError, "expected 0 or 1");
}

void require_args(const std::vector<std::string>& args, std::size_t count,
                  const std::string& usage) {
    if (args.size() < count)
        throw gl::Error(gl::ErrorCode::ParseError, "move usage: " + usage);
}

std::string one_line(const std::string& file_text) {
    std::istringstream in(file_text);
    std::string line, out;
    std::getline(in, line); // drop header
    while (std::getline(in, line)) {
        if (!out.empty())
            out += " | ";
        out += line;
    }
    return out.empty() ? "(empty)" : out;
}

void cmd_invariants(const std::string& path) {
    gl::LabeledGraph g = expect_labeled(gl::load_file(path));
    std::size_t components = gl::component_count(g);
    std::cout << "components: " << components << "\n";
    if (components == 1)
        std::cout << "writhe: " << gl::writhe(g).total << "\n";
    gl::LaurentPoly bracket = gl::kauffman_bracket(g);
    std::cout << "bracket: " << bracket.to_string() << "\n";
    if (bracket.is_zero())
        std::cout << "span: undefined\n";
    else
        std::cout << "span: " << gl::span(bracket) << "\n";
    std::cout << "genus: " << gl::atom_genus(g).to_string() << "\n";
    std::cout << "alternating: " << (gl::is_alternating(g) ? "true" : "false")
              << "\n";
    std::cout << "nonsplit: " << (gl::is_nonsplit(g) ? "true" : "false") << "\n";
    if (components == 1 || components == 2) {
        gl::ParityTable table = components == 1 ? gl::parity_knot_labeled(g)
                                                : gl::parity_link2(g);
        std::string row;
        for (const auto& [id, p] : table) {
            if (!row.empty())
                row += ",";
            row += id + "=" + (p == gl::Parity::Odd ? "odd" : "even");
        }
        std::cout << "parity: " << row << "\n";
    }
    std::cout << "minimal: " << gl::verdict_name(gl::minimality_certificate(g).verdict)
              << "\n";
}

void cmd_moves(const std::string& path) {
    gl::ParsedFile f = gl::load_file(path);
    auto print = [](const std::vector<gl::MoveDescriptor>& moves) {
        for (const auto& d : moves) {
            std::cout << gl::move_kind_name(d.kind);
            if (d.site.empty()) {
                std::cout << " template";
            } else {
                for (const auto& id : d.site)
                    std::cout << " " << id;
            }
            std::cout << "\n";
        }
    };
    if (const auto* g = std::get_if<gl::LabeledGraph>(&f))
        print(gl::detect_moves(*g));
    else if (const auto* g = std::get_if<gl::LoopedGraph>(&f))
        print(gl::detect_moves(*g));
    else
        throw gl::Error(gl::ErrorCode::NotApplicable, "a graph file is required",
                        "wrong-file-kind");
}

void cmd_move(const std::string& path, std::vector<std::string> spec) {
    if (spec.empty())
        throw gl::Error(gl::ErrorCode::ParseError, "missing move name");
    // Accept "og1 remove v3" as well as "og1-remove v3".
    if (spec.size() >= 2 && (spec[1] == "add" || spec[1] == "remove")) {
        spec[0] += "-" + spec[1];
        spec.erase(spec.begin() + 1);
    }
    std::string kind = spec[0];
    std::vector<std::string> a(spec.begin() + 1, spec.end());
    gl::ParsedFile f = gl::load_file(path);

    if (const auto* gp = std::get_if<gl::LabeledGraph>(&f)) {
        const gl::LabeledGraph& g = *gp;
        gl::LabeledGraph out;
        if (kind == "og1-add") {
            require_args(a, 2, "og1-add <id> <+|->");
            out = gl::apply_og1_add(g, a[0], parse_sign_arg(a[1]));
        } else if (kind == "og1-remove") {
            require_args(a, 1, "og1-remove <id>");
            out = gl::apply_og1_remove(g, a[0]);
        } else if (kind == "og2-add") {
            require_args(a, 4, "og2-add <id1> <id2> <framing> <+|-> [neighbor...]");
            out = gl::apply_og2_add(g, a[0], a[1], parse_bit_arg(a[2]),
                                    parse_sign_arg(a[3]),
                                    {a.begin() + 4, a.end()});
        } else if (kind == "og2-remove") {
            require_args(a, 2, "og2-remove <id1> <id2>");
            out = gl::apply_og2_remove(g, a[0], a[1]);
        } else if (kind == "og3") {
            require_args(a, 3, "og3 <u> <v> <w>");
            out = gl::apply_og3(g, a[0], a[1], a[2]);
        } else if (kind == "og3-inverse") {
            require_args(a, 3, "og3-inverse <u> <v> <w>");
            out = gl::apply_og3_inverse(g, a[0], a[1], a[2]);
        } else if (kind == "og4") {
            require_args(a, 2, "og4 <u> <v>");
            out = gl::apply_og4(g, a[0], a[1]);
        } else if (kind == "og4p") {
            require_args(a, 1, "og4p <v>");
            out = gl::apply_og4p(g, a[0]);
        } else {
            throw gl::Error(gl::ErrorCode::NotApplicable,
                            "move '" + kind + "' does not apply to labeled graphs",
                            "wrong-graph-kind");
        }
        std::cout << gl::serialize(out);
        return;
    }
    if (const auto* gp = std::get_if<gl::LoopedGraph>(&f)) {
        const gl::LoopedGraph& g = *gp;
        gl::LoopedGraph out;
        if (kind == "r1-add") {
            require_args(a, 2, "r1-add <id> <looped:0|1>");
            out = gl::apply_r1_add(g, a[0], parse_bit_arg(a[1]) == 1);
        } else if (kind == "r1-remove") {
            require_args(a, 1, "r1-remove <id>");
            out = gl::apply_r1_remove(g, a[0]);
        } else if (kind == "r2-add") {
            require_args(a, 4,
                         "r2-add <id1> <id2> <first-looped:0|1> <adjacent:0|1> "
                         "[neighbor...]");
            out = gl::apply_r2_add(g, a[0], a[1], parse_bit_arg(a[2]) == 1,
                                   parse_bit_arg(a[3]) == 1,
                                   {a.begin() + 4, a.end()});
        } else if (kind == "r2-remove") {
            require_args(a, 2, "r2-remove <id1> <id2>");
            out = gl::apply_r2_remove(g, a[0], a[1]);
        } else if (kind == "r3") {
            require_args(a, 3, "r3 <u> <v> <w>");
            out = gl::apply_r3(g, a[0], a[1], a[2]);
        } else {
            throw gl::Error(gl::ErrorCode::NotApplicable,
                            "move '" + kind + "' does not apply to looped graphs",
                            "wrong-graph-kind");
        }
        std::cout << gl::serialize(out);
        return;
    }
    throw gl::Error(gl::ErrorCode::NotApplicable, "a graph file is required",
                    "wrong-file-kind");
}

void cmd_realize(const std::string& path, std::size_t max_chords,
                 std::size_t max_steps) {
    gl::ParsedFile f = gl::load_file(path);
    gl::RealizabilityVerdict rep_level;
    gl::RealizabilityVerdict link_level;
    if (const auto* g = std::get_if<gl::LabeledGraph>(&f)) {
        if (auto d = gl::realize(*g, max_chords)) {
            std::cout << gl::serialize(*d);
            return;
        }
        link_level = gl::graphlink_realizability(*g, max_chords, max_steps);
    } else if (const auto* g = std::get_if<gl::LoopedGraph>(&f)) {
        if (auto d = gl::realize(*g, max_chords)) {
            std::cout << gl::serialize(*d);
            return;
        }
        link_level = gl::graphlink_realizability(*g, max_chords, max_steps);
    } else {
        throw gl::Error(gl::ErrorCode::NotApplicable, "a graph file is required",
                        "wrong-file-kind");
    }
    std::cout << "non-realizable\n";
    std::cout << "graph-link: " << gl::verdict_kind_name(link_level.kind) << "\n";
    if (link_level.witness)
        std::cout << gl::serialize(*link_level.witness);
}

void cmd_equiv(const std::string& path_a, const std::string& path_b,
               std::size_t max_vertices, std::size_t max_steps) {
    gl::ParsedFile fa = gl::load_file(path_a);
    gl::ParsedFile fb = gl::load_file(path_b);
    std::optional<std::vector<gl::MoveDescriptor>> trace;
    if (const auto* a = std::get_if<gl::LabeledGraph>(&fa)) {
        const auto* b = std::get_if<gl::LabeledGraph>(&fb);
        if (!b)
            throw gl::Error(gl::ErrorCode::NotApplicable,
                            "files have different graph kinds", "wrong-file-kind");
        trace = gl::equivalence_search(*a, *b, max_vertices, max_steps);
    } else if (const auto* a = std::get_if<gl::LoopedGraph>(&fa)) {
        const auto* b = std::get_if<gl::LoopedGraph>(&fb);
        if (!b)
            throw gl::Error(gl::ErrorCode::NotApplicable,
                            "files have different graph kinds", "wrong-file-kind");
        trace = gl::equivalence_search(*a, *b, max_vertices, max_steps);
    } else {
        throw gl::Error(gl::ErrorCode::NotApplicable, "graph files are required",
                        "wrong-file-kind");
    }
    if (!trace) {
        std::cout << "not-found-within-bounds\n";
        return;
    }
    std::cout << "found: " << trace->size() << " moves\n";
    for (const auto& d : *trace) {
        std::cout << gl::move_kind_name(d.kind);
        for (const auto& id : d.site)
            std::cout << " " << id;
        for (const auto& id : d.new_ids)
            std::cout << " +" << id;
        std::cout << "\n";
    }
}

void cmd_chi(const std::string& path, const std::string& direction) {
    gl::ParsedFile f = gl::load_file(path);
    if (const auto* g = std::get_if<gl::LabeledGraph>(&f)) {
        if (direction == "to-labeled")
            throw gl::Error(gl::ErrorCode::NotApplicable,
                            "to-labeled needs a looped graph file",
                            "wrong-file-kind");
        std::cout << gl::serialize(gl::chi(*g));
        return;
    }
    if (const auto* g = std::get_if<gl::LoopedGraph>(&f)) {
        if (direction == "to-looped")
            throw gl::Error(gl::ErrorCode::NotApplicable,
                            "to-looped needs a labeled graph file",
                            "wrong-file-kind");
        std::cout << gl::serialize(gl::chi_inverse(*g));
        return;
    }
    throw gl::Error(gl::ErrorCode::NotApplicable, "a graph file is required",
                    "wrong-file-kind");
}

void cmd_bracket_parity(const std::string& path, const std::string& kind) {
    gl::LabeledGraph g = expect_labeled(gl::load_file(path));
    gl::GraphSum sum = kind == "link2" ? gl::bracket_link2(g) : gl::bracket_knot(g);
    gl::GraphSum reduced = gl::reduce_sum(sum);
    std::cout << "terms: " << reduced.size() << "\n";
    for (const auto& [key, rep] : reduced.terms())
        std::cout << "term: " << one_line(gl::serialize(rep)) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-link workbench"};
    app.require_subcommand(1);

    std::size_t max_chords = 8, max_vertices = 12, max_steps = 100000;
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker thread budget (reserved)");

    std::string file_a, file_b, direction = "auto", bracket_kind = "knot";
    std::vector<std::string> move_spec;

    CLI::App* inv = app.add_subcommand("invariants", "invariant report");
    inv->add_option("file", file_a)->required();

    CLI::App* moves = app.add_subcommand("moves", "list applicable moves");
    moves->add_option("file", file_a)->required();

    CLI::App* move = app.add_subcommand("move", "apply one move");
    move->add_option("file", file_a)->required();
    move->add_option("spec", move_spec, "move name and arguments")->required();

    CLI::App* realize = app.add_subcommand("realize", "chord-diagram realizability");
    realize->add_option("file", file_a)->required();
    realize->add_option("--max-chords", max_chords);
    realize->add_option("--max-steps", max_steps);

    CLI::App* equiv = app.add_subcommand("equiv", "bounded equivalence search");
    equiv->add_option("fileA", file_a)->required();
    equiv->add_option("fileB", file_b)->required();
    equiv->add_option("--max-vertices", max_vertices);
    equiv->add_option("--max-steps", max_steps);

    CLI::App* chi = app.add_subcommand("chi", "labeled <-> looped correspondence");
    chi->add_option("file", file_a)->required();
    chi->add_option("--direction", direction)
        ->check(CLI::IsMember({"auto", "to-looped", "to-labeled"}));

    CLI::App* bracket = app.add_subcommand("bracket-parity", "parity bracket sum");
    bracket->add_option("file", file_a)->required();
    bracket->add_option("--kind", bracket_kind)
        ->check(CLI::IsMember({"knot", "link2"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed())
            cmd_invariants(file_a);
        else if (moves->parsed())
            cmd_moves(file_a);
        else if (move->parsed())
            cmd_move(file_a, move_spec);
        else if (realize->parsed())
            cmd_realize(file_a, max_chords, max_steps);
        else if (equiv->parsed())
            cmd_equiv(file_a, file_b, max_vertices, max_steps);
        else if (chi->parsed())
            cmd_chi(file_a, direction);
        else if (bracket->parsed())
            cmd_bracket_parity(file_a, bracket_kind);
    } catch (const gl::Error& e) {
        std::cerr << "error: " << e.what();
        if (!e.reason().empty())
            std::cerr << " (" << e.reason() << ")";
        std::cerr << "\n";
        return gl::exit_code_for(e.code());
    }
    return 0;
}
