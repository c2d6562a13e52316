#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include <json.hpp>

#include "cubhom/ast.hpp"
#include "cubhom/cubical.hpp"
#include "cubhom/matrix.hpp"
#include "cubhom/mset.hpp"
#include "cubhom/precubical.hpp"
#include "cubhom/schema.hpp"
#include "cubhom/trace.hpp"

namespace cubhom::io {

using nlohmann::json;

// Matrix text format: first line "rows cols", then whitespace-separated
// entries row by row.
IntMatrix read_matrix_text(std::istream& in);
void write_matrix_text(std::ostream& out, const IntMatrix& m);
IntMatrix read_matrix_file(const std::string& path);

json load_json_file(const std::string& path);

// Model files; the CLI dispatches on a top-level "kind" field.
PrecubicalSet parse_precubical(const json& j);
EuclideanCubicalSet parse_cubical(const json& j);
IndependenceAlphabet parse_alphabet(const json& j);
std::pair<IndependenceAlphabet, RightMSet> parse_mset(const json& j);
AsyncTransitionSystem parse_ast(const json& j);
SimplicialSchema parse_schema(const json& j);

// Coefficient files, dispatched on their own "kind".
HomologicalSystem parse_homological_system(const json& j, const PrecubicalSet& X);
RightModule parse_right_module(const json& j, const IndependenceAlphabet& A);
Bimodule parse_bimodule(const json& j, const IndependenceAlphabet& A);
CliqueSystem parse_clique_system(const json& j, const IndependenceAlphabet& A);
MSetSystem parse_mset_system(const json& j, const IndependenceAlphabet& A, const RightMSet& X);

}  // namespace cubhom::io
