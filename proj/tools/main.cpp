// Command-line front end: model validation, homology, Smith normal form and
// boundary-matrix export for the file formats described in the README.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cubhom/errors.hpp"
#include "cubhom/io.hpp"
#include "cubhom/smith.hpp"

using namespace cubhom;

namespace {

struct LoadedModel {
  std::string kind;
  io::json j;        // model kinds
  IntMatrix matrix;  // kind == "matrix"
};

LoadedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first != '{') {
    // Plain text is the matrix format.
    return {"matrix", {}, io::read_matrix_text(in)};
  }
  in.close();
  io::json j = io::load_json_file(path);
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("model file needs a top-level \"kind\" string");
  std::string kind = j["kind"].get<std::string>();
  for (const char* known : {"precubical", "cubical", "alphabet", "mset", "ast", "schema"})
    if (kind == known) return {kind, std::move(j), {}};
  throw UnsupportedKind("unsupported model kind '" + kind + "'");
}

io::json load_coeff_file(const std::string& path, const std::string& expect_for) {
  io::json j = io::load_json_file(path);
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError("coefficient file needs a top-level \"kind\" string (" + expect_for + ")");
  return j;
}

// Builds the chain complex selected by model kind and coefficient option.
ChainComplex build_complex(const LoadedModel& model, const std::string& coeff,
                           bool exclude_point) {
  if (exclude_point && model.kind != "mset" && model.kind != "ast")
    throw UnsupportedKind("--exclude-point applies only to M-sets and transition systems");

  if (model.kind == "precubical" || model.kind == "cubical") {
    PrecubicalSet X = model.kind == "cubical" ? to_precubical(io::parse_cubical(model.j))
                                              : io::parse_precubical(model.j);
    if (coeff == "constant") return integral_complex(X);
    if (coeff == "z0") return coefficient_complex(X, goubault_systems(X).first);
    if (coeff == "z1") return coefficient_complex(X, goubault_systems(X).second);
    io::json cj = load_coeff_file(coeff, "homological-system");
    if (cj["kind"] != "homological-system")
      throw UnsupportedKind("precubical models take homological-system coefficients");
    return coefficient_complex(X, io::parse_homological_system(cj, X));
  }

  if (model.kind == "alphabet") {
    IndependenceAlphabet A = io::parse_alphabet(model.j);
    if (coeff == "constant") return integral_complex(t_precubical(A));
    io::json cj = load_coeff_file(coeff, "right-module | bimodule | clique-system");
    if (cj["kind"] == "right-module")
      return right_module_complex(A, io::parse_right_module(cj, A));
    if (cj["kind"] == "bimodule") return hochschild_complex(A, io::parse_bimodule(cj, A));
    if (cj["kind"] == "clique-system") return leech_complex(A, io::parse_clique_system(cj, A));
    throw UnsupportedKind("alphabet models take right-module, bimodule or clique-system "
                          "coefficients");
  }

  if (model.kind == "mset" || model.kind == "ast") {
    IndependenceAlphabet A;
    RightMSet X;
    if (model.kind == "mset") {
      auto parsed = io::parse_mset(model.j);
      A = std::move(parsed.first);
      X = std::move(parsed.second);
    } else {
      AsyncTransitionSystem T = io::parse_ast(model.j);
      auto converted = to_pointed_mset(T);
      A = std::move(converted.first);
      X = std::move(converted.second);
    }
    MSetSystem F;
    if (coeff == "constant") {
      F = MSetSystem::constant_z(A, X);
    } else {
      io::json cj = load_coeff_file(coeff, "mset-system");
      if (cj["kind"] != "mset-system")
        throw UnsupportedKind("M-set and transition-system models take mset-system "
                              "coefficients");
      F = io::parse_mset_system(cj, A, X);
    }
    ChainComplex C = mset_complex(A, X, F, !exclude_point);
    if (coeff == "constant" && !exclude_point && model.kind == "mset") {
      // Cross-check the coefficient route against the precubical one.
      if (homology_of_complex(C) != integral_mset_homology(A, X))
        throw Error("integral M-set homology routes disagree");
    }
    return C;
  }

  if (model.kind == "schema") {
    if (coeff != "constant")
      throw UnsupportedKind("schema models take only constant coefficients");
    return schema_complex(io::parse_schema(model.j));
  }

  throw UnsupportedKind("homology of a bare matrix is undefined; use the snf command");
}

int run_validate(const std::string& path) {
  LoadedModel model = load_model(path);
  try {
    if (model.kind == "precubical")
      io::parse_precubical(model.j).validate();
    else if (model.kind == "cubical")
      to_precubical(io::parse_cubical(model.j)).validate();
    else if (model.kind == "alphabet")
      io::parse_alphabet(model.j);
    else if (model.kind == "mset")
      io::parse_mset(model.j);  // validates the action squares
    else if (model.kind == "ast")
      to_pointed_mset(io::parse_ast(model.j));  // (i)-(iii) plus induced squares
    else if (model.kind == "schema")
      io::parse_schema(model.j);
    // matrix files have nothing further to check
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    std::cout << err.what() << "\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

int run_homology(const std::string& path, const std::string& coeff,
                 std::optional<std::size_t> max_degree, bool exclude_point) {
  ChainComplex C = build_complex(load_model(path), coeff, exclude_point);
  std::size_t cap = max_degree.value_or(C.top_degree());
  auto h = homology_of_complex(C, cap);
  for (std::size_t n = 0; n <= cap; ++n)
    std::cout << "H_" << n << " = " << h[n].to_string() << "\n";
  return 0;
}

int run_snf(const std::string& path, bool with_transforms) {
  LoadedModel model = load_model(path);
  if (model.kind != "matrix")
    throw UnsupportedKind("snf expects a matrix file (\"rows cols\" header, then rows)");
  SmithDecomposition snf = smith_normal_form(model.matrix);
  std::cout << "D =\n" << snf.D;
  std::cout << "invariant factors:";
  for (const Int& d : snf.invariant_factors) std::cout << " " << d;
  std::cout << "\n";
  if (with_transforms) {
    std::cout << "T =\n" << snf.T;
    std::cout << "S =\n" << snf.S;
  }
  return 0;
}

int run_export(const std::string& path, const std::string& coeff, const std::string& out,
               bool exclude_point) {
  ChainComplex C = build_complex(load_model(path), coeff, exclude_point);
  std::string prefix = out;
  if (prefix.empty()) {
    prefix = path;
    std::size_t dot = prefix.find_last_of('.');
    if (dot != std::string::npos && prefix.find('/', dot) == std::string::npos)
      prefix = prefix.substr(0, dot);
  }
  for (std::size_t n = 0; n <= C.top_degree(); ++n)
    std::cout << "C_" << n << " rank " << C.rank(n) << "\n";
  for (std::size_t n = 1; n <= C.top_degree(); ++n) {
    std::string name = prefix + ".d" + std::to_string(n) + ".txt";
    std::ofstream f(name);
    if (!f) throw Error("cannot write '" + name + "'");
    io::write_matrix_text(f, C.boundary(n));
    std::cout << "wrote " << name << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homology of precubical sets, trace monoids, M-sets and asynchronous "
               "transition systems"};
  app.require_subcommand(1);

  std::string input, coeff = "constant", out;
  std::optional<std::size_t> max_degree;
  bool transforms = false, exclude_point = false;

  CLI::App* validate = app.add_subcommand("validate", "check a model file and report the first "
                                                      "violation");
  validate->add_option("input", input, "model file")->required();

  CLI::App* homology = app.add_subcommand("homology", "print one group per degree");
  homology->add_option("input", input, "model file")->required();
  homology->add_option("--coeff", coeff,
                       "coefficients: constant (default), z0, z1, or a coefficient file");
  homology->add_option("--max-degree", max_degree, "cap the reported degrees");
  homology->add_flag("--exclude-point", exclude_point,
                     "drop the base-point summands (quotient complex; not part of the source "
                     "constructions)");

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form of a matrix file");
  snf->add_option("input", input, "matrix file")->required();
  snf->add_flag("--transforms", transforms, "also print the unimodular factors T and S");

  CLI::App* exportc = app.add_subcommand("export-complex", "write every boundary matrix in the "
                                                           "matrix text format");
  exportc->add_option("input", input, "model file")->required();
  exportc->add_option("--coeff", coeff, "coefficients, as for homology");
  exportc->add_option("--out", out, "output prefix (default: input path without extension)");
  exportc->add_flag("--exclude-point", exclude_point, "as for homology");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate)) return run_validate(input);
    if (app.got_subcommand(homology)) return run_homology(input, coeff, max_degree, exclude_point);
    if (app.got_subcommand(snf)) return run_snf(input, transforms);
    if (app.got_subcommand(exportc)) return run_export(input, coeff, out, exclude_point);
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
