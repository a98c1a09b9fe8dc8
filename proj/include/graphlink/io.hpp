#ifndef GRAPHLINK_IO_HPP
#define GRAPHLINK_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "graphlink/chord.hpp"
#include "graphlink/graph.hpp"

namespace graphlink {

/// Parsed content of a graphlink v1 file; the alternative mirrors the header
/// kind (labeled, looped, chords).
using ParsedFile = std::variant<LabeledGraph, LoopedGraph, ChordDiagram>;

// Parsers throw Error(ParseError) with "line N:" prefixed reasons.
ParsedFile parse_file(std::istream& in);
ParsedFile parse_string(const std::string& text);
ParsedFile load_file(const std::string& path);

std::string serialize(const LabeledGraph& g);
std::string serialize(const LoopedGraph& g);
std::string serialize(const ChordDiagram& d);

} // namespace graphlink

#endif
