#include "cubhom/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "cubhom/errors.hpp"

namespace cubhom::io {

namespace {

const json& field(const json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field \"" + key + "\"");
  return *it;
}

std::string string_at(const json& j, const std::string& key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw ParseError("field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

// Matrix as an array of rows; shape falls back to the expected one when the
// row list is empty (a map from or to the zero group).
IntMatrix parse_matrix(const json& j, std::size_t rows, std::size_t cols,
                       const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array of rows");
  IntMatrix m(rows, cols);
  if (j.empty()) {
    if (rows != 0 && cols != 0)
      throw ParseError(what + " is empty but a " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " matrix is expected");
    return m;
  }
  if (j.size() != rows)
    throw ParseError(what + " has " + std::to_string(j.size()) + " rows, expected " +
                     std::to_string(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(what + " row " + std::to_string(i) + " must have " +
                       std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& v = row[c];
      if (v.is_number_integer())
        m.at(i, c) = Int(v.get<long long>());
      else if (v.is_string())
        m.at(i, c) = Int(v.get<std::string>());  // large entries as strings
      else
        throw ParseError(what + " entries must be integers");
    }
  }
  return m;
}

std::vector<std::size_t> parse_clique_key(const std::string& key,
                                          const IndependenceAlphabet& A) {
  std::vector<std::size_t> clique;
  if (key == "1") return clique;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, '.')) clique.push_back(A.event_index(part));
  return clique;
}

}  // namespace

IntMatrix read_matrix_text(std::istream& in) {
  long long rows = -1, cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw ParseError("matrix file must start with \"rows cols\"");
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long long i = 0; i < rows; ++i)
    for (long long j = 0; j < cols; ++j) {
      Int v;
      if (!(in >> v))
        throw ParseError("matrix file ends after " +
                         std::to_string(i * cols + j) + " of " +
                         std::to_string(rows * cols) + " entries");
      m.at(i, j) = std::move(v);
    }
  return m;
}

void write_matrix_text(std::ostream& out, const IntMatrix& m) { out << m; }

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix_text(in);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("in '") + path + "': " + err.what());
  }
}

PrecubicalSet parse_precubical(const json& j) {
  const json& cells = field(j, "cells");
  if (!cells.is_object()) throw ParseError("\"cells\" must map degrees to cell lists");
  PrecubicalSet X;
  std::map<std::string, std::pair<std::size_t, std::size_t>> where;
  std::vector<std::pair<long long, const json*>> degrees;
  for (auto it = cells.begin(); it != cells.end(); ++it)
    degrees.push_back({std::stoll(it.key()), &it.value()});
  std::sort(degrees.begin(), degrees.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [degree, list] : degrees) {
    if (degree < 0 || !list->is_array()) throw ParseError("bad degree entry in \"cells\"");
    for (const json& name : *list) {
      if (!name.is_string()) throw ParseError("cell names must be strings");
      std::string s = name.get<std::string>();
      if (where.count(s)) throw ParseError("duplicate cell name '" + s + "'");
      where[s] = {static_cast<std::size_t>(degree),
                  X.add_cell(static_cast<std::size_t>(degree), s)};
    }
  }
  if (j.contains("faces")) {
    const json& faces = field(j, "faces");
    if (!faces.is_object()) throw ParseError("\"faces\" must be an object");
    for (auto it = faces.begin(); it != faces.end(); ++it) {
      auto cell = where.find(it.key());
      if (cell == where.end()) throw ParseError("faces of unknown cell '" + it.key() + "'");
      auto [degree, index] = cell->second;
      for (auto f = it.value().begin(); f != it.value().end(); ++f) {
        std::size_t i = 0;
        int eps = -1;
        if (std::sscanf(f.key().c_str(), "%zu,%d", &i, &eps) != 2 || (eps != 0 && eps != 1))
          throw ParseError("face key '" + f.key() + "' must look like \"i,eps\"");
        if (!f.value().is_string()) throw ParseError("face targets must be cell names");
        auto target = where.find(f.value().get<std::string>());
        if (target == where.end())
          throw ParseError("face of '" + it.key() + "' points to unknown cell");
        if (i < 1 || i > degree)
          throw ParseError("face index " + std::to_string(i) + " out of range for '" +
                           it.key() + "'");
        X.set_face(degree, index, i, eps, target->second.second);
      }
    }
  }
  return X;
}

EuclideanCubicalSet parse_cubical(const json& j) {
  const json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 0)
    throw ParseError("\"dim\" must be a non-negative integer");
  std::size_t n = dim.get<std::size_t>();
  std::vector<std::vector<std::pair<long long, long long>>> boxes;
  for (const json& box : field(j, "boxes")) {
    std::vector<std::pair<long long, long long>> axes;
    if (!box.is_array()) throw ParseError("each box must be a list of intervals");
    for (const json& iv : box) {
      if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number_integer() ||
          !iv[1].is_number_integer())
        throw ParseError("intervals must be integer pairs [a,b]");
      axes.push_back({iv[0].get<long long>(), iv[1].get<long long>()});
    }
    boxes.push_back(std::move(axes));
  }
  return from_generators(n, boxes);
}

IndependenceAlphabet parse_alphabet(const json& j) {
  std::vector<std::string> events;
  for (const json& e : field(j, "events")) {
    if (!e.is_string()) throw ParseError("events must be strings");
    events.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> indep;
  if (j.contains("independence"))
    for (const json& p : j["independence"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw ParseError("independence entries must be pairs of event names");
      indep.push_back({p[0].get<std::string>(), p[1].get<std::string>()});
    }
  return IndependenceAlphabet(std::move(events), indep);
}

std::pair<IndependenceAlphabet, RightMSet> parse_mset(const json& j) {
  IndependenceAlphabet A = parse_alphabet(field(j, "alphabet"));
  std::vector<std::string> carrier;
  for (const json& s : field(j, "carrier")) {
    if (!s.is_string()) throw ParseError("carrier elements must be strings");
    carrier.push_back(s.get<std::string>());
  }
  auto state_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t x = 0; x < carrier.size(); ++x)
      if (carrier[x] == name) return x;
    throw ParseError("unknown carrier element '" + name + "'");
  };
  std::optional<std::size_t> point;
  if (j.contains("point")) point = state_index(string_at(j, "point"));

  // Missing entries default to the base point when one is declared.
  std::vector<std::vector<std::size_t>> action(
      A.size(), std::vector<std::size_t>(carrier.size(), point.value_or(carrier.size())));
  const json& act = field(j, "action");
  if (!act.is_object()) throw ParseError("\"action\" must map states to event maps");
  for (auto it = act.begin(); it != act.end(); ++it) {
    std::size_t x = state_index(it.key());
    for (auto m = it.value().begin(); m != it.value().end(); ++m) {
      if (!m.value().is_string()) throw ParseError("action targets must be state names");
      action[A.event_index(m.key())][x] = state_index(m.value().get<std::string>());
    }
  }
  for (std::size_t e = 0; e < A.size(); ++e)
    for (std::size_t x = 0; x < carrier.size(); ++x)
      if (action[e][x] >= carrier.size())
        throw ParseError("action of '" + A.events()[e] + "' at '" + carrier[x] +
                         "' is undefined and no base point is declared");
  RightMSet X(std::move(carrier), std::move(action), point);
  X.validate(A);
  return {std::move(A), std::move(X)};
}

AsyncTransitionSystem parse_ast(const json& j) {
  AsyncTransitionSystem T;
  for (const json& s : field(j, "states")) {
    if (!s.is_string()) throw ParseError("states must be strings");
    T.states.push_back(s.get<std::string>());
  }
  json alphabet_json = {{"events", field(j, "events")}};
  if (j.contains("independence")) alphabet_json["independence"] = j["independence"];
  T.alphabet = parse_alphabet(alphabet_json);
  auto initial = T.find_state(string_at(j, "initial"));
  if (!initial) throw ParseError("initial state is not listed in \"states\"");
  T.initial = *initial;
  for (const json& t : field(j, "transitions")) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
        !t[2].is_string())
      throw ParseError("transitions must be triples [state, event, state]");
    auto s = T.find_state(t[0].get<std::string>());
    auto u = T.find_state(t[2].get<std::string>());
    if (!s || !u) throw ParseError("transition mentions an unknown state");
    T.transitions.insert({*s, T.alphabet.event_index(t[1].get<std::string>()), *u});
  }
  return T;
}

SimplicialSchema parse_schema(const json& j) {
  std::vector<std::string> vertices;
  for (const json& v : field(j, "vertices")) {
    if (!v.is_string()) throw ParseError("vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  auto vertex_index = [&](const std::string& name) -> std::size_t {
    for (std::size_t k = 0; k < vertices.size(); ++k)
      if (vertices[k] == name) return k;
    throw ParseError("unknown vertex '" + name + "'");
  };
  std::vector<std::vector<std::size_t>> maximal;
  for (const json& f : field(j, "maximal_faces")) {
    if (!f.is_array()) throw ParseError("faces must be lists of vertices");
    std::vector<std::size_t> face;
    for (const json& v : f) {
      if (!v.is_string()) throw ParseError("face entries must be vertex names");
      face.push_back(vertex_index(v.get<std::string>()));
    }
    maximal.push_back(std::move(face));
  }
  return SimplicialSchema::from_maximal(std::move(vertices), std::move(maximal));
}

HomologicalSystem parse_homological_system(const json& j, const PrecubicalSet& X) {
  HomologicalSystem F(X);
  const json& ranks = field(j, "rank");
  if (!ranks.is_object()) throw ParseError("\"rank\" must map cells to ranks");
  auto locate = [&](const std::string& name) -> std::pair<std::size_t, std::size_t> {
    for (std::size_t n = 0; n <= X.top_degree(); ++n)
      if (auto idx = X.find_cell(n, name)) return {n, *idx};
    throw ParseError("unknown cell '" + name + "'");
  };
  for (auto it = ranks.begin(); it != ranks.end(); ++it) {
    auto [n, c] = locate(it.key());
    if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
      throw ParseError("ranks must be non-negative integers");
    F.set_rank(n, c, it.value().get<std::size_t>());
  }
  const json& maps = field(j, "maps");
  if (!maps.is_object()) throw ParseError("\"maps\" must map cells to face matrices");
  for (auto it = maps.begin(); it != maps.end(); ++it) {
    auto [n, c] = locate(it.key());
    for (auto f = it.value().begin(); f != it.value().end(); ++f) {
      std::size_t i = 0;
      int eps = -1;
      if (std::sscanf(f.key().c_str(), "%zu,%d", &i, &eps) != 2 || (eps != 0 && eps != 1))
        throw ParseError("map key '" + f.key() + "' must look like \"i,eps\"");
      if (i < 1 || i > n) throw ParseError("map index out of range for '" + it.key() + "'");
      std::size_t target = X.face(n, c, i, eps);
      F.set_face_matrix(n, c, i, eps,
                        parse_matrix(f.value(), F.rank(n - 1, target), F.rank(n, c),
                                     "face matrix of '" + it.key() + "'"));
    }
  }
  return F;
}

RightModule parse_right_module(const json& j, const IndependenceAlphabet& A) {
  const json& rank = field(j, "rank");
  if (!rank.is_number_integer() || rank.get<long long>() < 0)
    throw ParseError("\"rank\" must be a non-negative integer");
  RightModule G;
  G.rank = rank.get<std::size_t>();
  G.action.assign(A.size(), IntMatrix::identity(G.rank));
  const json& act = field(j, "action");
  for (auto it = act.begin(); it != act.end(); ++it)
    G.action[A.event_index(it.key())] =
        parse_matrix(it.value(), G.rank, G.rank, "action of '" + it.key() + "'");
  return G;
}

Bimodule parse_bimodule(const json& j, const IndependenceAlphabet& A) {
  RightModule right = parse_right_module(j, A);
  Bimodule B;
  B.rank = right.rank;
  B.right_action = std::move(right.action);
  B.left_action.assign(A.size(), IntMatrix::identity(B.rank));
  const json& act = field(j, "left_action");
  for (auto it = act.begin(); it != act.end(); ++it)
    B.left_action[A.event_index(it.key())] =
        parse_matrix(it.value(), B.rank, B.rank, "left action of '" + it.key() + "'");
  return B;
}

CliqueSystem parse_clique_system(const json& j, const IndependenceAlphabet& A) {
  CliqueSystem F;
  const json& entries = field(j, "cliques");
  if (!entries.is_object()) throw ParseError("\"cliques\" must map clique names to data");
  // First pass: ranks; second pass: matrices need both endpoint ranks.
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    const json& r = field(it.value(), "rank");
    if (!r.is_number_integer() || r.get<long long>() < 0)
      throw ParseError("clique ranks must be non-negative integers");
    F.set_rank(parse_clique_key(it.key(), A), r.get<std::size_t>());
  }
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    std::vector<std::size_t> clique = parse_clique_key(it.key(), A);
    for (const char* side : {"left", "right"}) {
      if (!it.value().contains(side)) continue;
      const json& maps = it.value()[side];
      for (auto m = maps.begin(); m != maps.end(); ++m) {
        std::size_t gen = A.event_index(m.key());
        std::vector<std::size_t> big = clique;
        big.insert(std::lower_bound(big.begin(), big.end(), gen), gen);
        IntMatrix mat = parse_matrix(m.value(), F.rank(clique), F.rank(big),
                                     std::string(side) + " map of '" + it.key() + "'");
        if (side == std::string("left"))
          F.set_left(clique, gen, std::move(mat));
        else
          F.set_right(clique, gen, std::move(mat));
      }
    }
  }
  return F;
}

MSetSystem parse_mset_system(const json& j, const IndependenceAlphabet& A,
                             const RightMSet& X) {
  const json& ranks = field(j, "rank");
  if (!ranks.is_object()) throw ParseError("\"rank\" must map states to ranks");
  std::vector<std::size_t> rank(X.size(), 0);
  for (auto it = ranks.begin(); it != ranks.end(); ++it) {
    auto x = X.find_state(it.key());
    if (!x) throw ParseError("unknown state '" + it.key() + "'");
    if (!it.value().is_number_integer() || it.value().get<long long>() < 0)
      throw ParseError("ranks must be non-negative integers");
    rank[*x] = it.value().get<std::size_t>();
  }
  std::vector<std::vector<IntMatrix>> maps(A.size(), std::vector<IntMatrix>(X.size()));
  for (std::size_t e = 0; e < A.size(); ++e)
    for (std::size_t x = 0; x < X.size(); ++x)
      maps[e][x] = IntMatrix(rank[X.act(x, e)], rank[x]);
  if (j.contains("maps")) {
    const json& entries = j["maps"];
    for (auto it = entries.begin(); it != entries.end(); ++it) {
      auto x = X.find_state(it.key());
      if (!x) throw ParseError("unknown state '" + it.key() + "'");
      for (auto m = it.value().begin(); m != it.value().end(); ++m) {
        std::size_t e = A.event_index(m.key());
        maps[e][*x] = parse_matrix(m.value(), rank[X.act(*x, e)], rank[*x],
                                   "map of '" + it.key() + "' under '" + m.key() + "'");
      }
    }
  }
  return MSetSystem(std::move(rank), std::move(maps));
}

}  // namespace cubhom::io
