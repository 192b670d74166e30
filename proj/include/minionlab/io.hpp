#pragma once

#include <iosfwd>
#include <string>

#include "minionlab/boolfn.hpp"
#include "minionlab/gadget.hpp"
#include "minionlab/minors.hpp"
#include "minionlab/pcsp.hpp"

namespace minionlab {

/// Parse errors carry the 1-based line number of the offending line.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, unsigned line);
  unsigned line;
};

/// Function file: "arity=<n>" then a hex string of ceil(2^n / 4) digits,
/// table index 0 in the least-significant nibble (the last character).
BoolFn read_function(std::istream& in);
BoolFn read_function_file(const std::string& path);
void write_function(std::ostream& out, const BoolFn& f);
std::string function_to_string(const BoolFn& f);

/// Template file: repeated blocks of
///   pair k=<k>
///   A: <space-separated bitstrings>
///   B: <space-separated bitstrings>
/// A bitstring lists the tuple values with scope position 1 first.
Template read_template(std::istream& in);
Template read_template_file(const std::string& path);
void write_template(std::ostream& out, const Template& t);

/// Instance file: "vars <N>" then lines "c <pair> <v1> ... <vk>".
/// Pair indices and variables are 1-based in files.
Instance read_instance(std::istream& in, const Template& t);
Instance read_instance_file(const std::string& path, const Template& t);
void write_instance(std::ostream& out, const Instance& inst);

/// Label cover file: "sigma <s>" then lines
/// "edge <u> <v> <2s comma-separated labels>" (vertices and labels 1-based).
LabelCover read_labelcover(std::istream& in);
LabelCover read_labelcover_file(const std::string& path);
void write_labelcover(std::ostream& out, const LabelCover& lc);

/// "1,1,2,2" -> VarMap (1-based entries in the text).
VarMap parse_varmap(const std::string& text);
std::string varmap_to_string(const VarMap& pi);

}  // namespace minionlab
