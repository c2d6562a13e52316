#include "cubhom/precubical.hpp"

#include <sstream>

#include "cubhom/errors.hpp"

namespace cubhom {

std::size_t PrecubicalSet::add_cell(std::size_t degree, std::string name) {
  if (cells_.size() <= degree) {
    cells_.resize(degree + 1);
    faces_.resize(degree + 1);
  }
  cells_[degree].push_back(std::move(name));
  if (degree >= 1)
    faces_[degree].emplace_back(degree, std::array<std::size_t, 2>{kNoFace, kNoFace});
  return cells_[degree].size() - 1;
}

void PrecubicalSet::set_face(std::size_t degree, std::size_t index, std::size_t i, int eps,
                             std::size_t target) {
  if (degree == 0 || i < 1 || i > degree)
    throw IndexOutOfRange("face index " + std::to_string(i) + " out of range in degree " +
                          std::to_string(degree));
  faces_[degree][index][i - 1][eps] = target;
}

std::optional<std::size_t> PrecubicalSet::find_cell(std::size_t degree,
                                                    const std::string& name) const {
  if (degree >= cells_.size()) return std::nullopt;
  for (std::size_t k = 0; k < cells_[degree].size(); ++k)
    if (cells_[degree][k] == name) return k;
  return std::nullopt;
}

std::size_t PrecubicalSet::face(std::size_t degree, std::size_t index, std::size_t i,
                                int eps) const {
  std::size_t t = faces_[degree][index][i - 1][eps];
  if (t == kNoFace || t >= size(degree - 1)) {
    std::ostringstream os;
    os << "cell '" << cells_[degree][index] << "' of degree " << degree << " has no face (i="
       << i << ", eps=" << eps << ")";
    throw DanglingFace(os.str());
  }
  return t;
}

void PrecubicalSet::validate() const {
  for (std::size_t n = 1; n < cells_.size(); ++n)
    for (std::size_t c = 0; c < cells_[n].size(); ++c)
      for (std::size_t i = 1; i <= n; ++i)
        for (int eps : {0, 1}) face(n, c, i, eps);  // throws DanglingFace if unset

  for (std::size_t n = 2; n < cells_.size(); ++n)
    for (std::size_t c = 0; c < cells_[n].size(); ++c)
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
          for (int alpha : {0, 1})
            for (int beta : {0, 1}) {
              std::size_t via_j = face(n - 1, face(n, c, j, beta), i, alpha);
              std::size_t via_i = face(n - 1, face(n, c, i, alpha), j - 1, beta);
              if (via_j != via_i) {
                std::ostringstream os;
                os << "precubical identity fails at n=" << n << ", i=" << i << ", j=" << j
                   << ", alpha=" << alpha << ", beta=" << beta << ", cell '" << cells_[n][c]
                   << "': got '" << cells_[n - 2][via_j] << "' vs '" << cells_[n - 2][via_i]
                   << "'";
                throw PrecubicalIdentityViolated(os.str());
              }
            }
}

HomologicalSystem::HomologicalSystem(const PrecubicalSet& X) {
  ranks_.resize(X.top_degree() + 1);
  maps_.resize(X.top_degree() + 1);
  for (std::size_t n = 0; n <= X.top_degree(); ++n) {
    ranks_[n].assign(X.size(n), 0);
    if (n >= 1)
      maps_[n].assign(X.size(n),
                      std::vector<std::array<IntMatrix, 2>>(n, std::array<IntMatrix, 2>{}));
  }
}

HomologicalSystem HomologicalSystem::constant_z(const PrecubicalSet& X) {
  HomologicalSystem F(X);
  IntMatrix one = IntMatrix::identity(1);
  for (std::size_t n = 0; n <= X.top_degree(); ++n)
    for (std::size_t c = 0; c < X.size(n); ++c) {
      F.set_rank(n, c, 1);
      for (std::size_t i = 1; i <= n; ++i)
        for (int eps : {0, 1}) F.set_face_matrix(n, c, i, eps, one);
    }
  return F;
}

void HomologicalSystem::set_rank(std::size_t degree, std::size_t index, std::size_t rank) {
  ranks_[degree][index] = rank;
}

void HomologicalSystem::set_face_matrix(std::size_t degree, std::size_t index, std::size_t i,
                                        int eps, IntMatrix m) {
  maps_[degree][index][i - 1][eps] = std::move(m);
}

void HomologicalSystem::validate(const PrecubicalSet& X) const {
  if (ranks_.size() < X.top_degree() + 1)
    throw RankMismatch("homological system does not cover every degree");
  for (std::size_t n = 0; n <= X.top_degree(); ++n)
    if (ranks_[n].size() != X.size(n))
      throw RankMismatch("homological system does not assign a rank to every cell of degree " +
                         std::to_string(n));

  for (std::size_t n = 1; n <= X.top_degree(); ++n)
    for (std::size_t c = 0; c < X.size(n); ++c)
      for (std::size_t i = 1; i <= n; ++i)
        for (int eps : {0, 1}) {
          const IntMatrix& m = face_matrix(n, c, i, eps);
          std::size_t target = X.face(n, c, i, eps);
          if (m.rows() != rank(n - 1, target) || m.cols() != rank(n, c)) {
            std::ostringstream os;
            os << "face matrix of cell '" << X.cell_name(n, c) << "' (i=" << i
               << ", eps=" << eps << ") has shape " << m.rows() << "x" << m.cols()
               << ", expected " << rank(n - 1, target) << "x" << rank(n, c);
            throw RankMismatch(os.str());
          }
        }

  for (std::size_t n = 2; n <= X.top_degree(); ++n)
    for (std::size_t c = 0; c < X.size(n); ++c)
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
          for (int alpha : {0, 1})
            for (int beta : {0, 1}) {
              std::size_t tj = X.face(n, c, j, beta);
              std::size_t ti = X.face(n, c, i, alpha);
              IntMatrix lhs = face_matrix(n - 1, tj, i, alpha) * face_matrix(n, c, j, beta);
              IntMatrix rhs = face_matrix(n - 1, ti, j - 1, beta) * face_matrix(n, c, i, alpha);
              if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "functoriality fails on the square of cell '" << X.cell_name(n, c)
                   << "' at i=" << i << ", j=" << j << ", alpha=" << alpha << ", beta=" << beta;
                throw FunctorialityViolated(os.str());
              }
            }
}

ChainComplex integral_complex(const PrecubicalSet& X) {
  X.validate();
  std::vector<std::vector<std::string>> labels(X.top_degree() + 1);
  for (std::size_t n = 0; n <= X.top_degree(); ++n)
    for (std::size_t c = 0; c < X.size(n); ++c) labels[n].push_back(X.cell_name(n, c));

  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= X.top_degree(); ++n) {
    IntMatrix d(X.size(n - 1), X.size(n));
    for (std::size_t c = 0; c < X.size(n); ++c)
      for (std::size_t i = 1; i <= n; ++i) {
        Int sign = (i % 2 == 0) ? 1 : -1;
        d.at(X.face(n, c, i, 1), c) += sign;
        d.at(X.face(n, c, i, 0), c) -= sign;
      }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(labels), std::move(boundaries));
}

namespace {

std::vector<std::vector<std::size_t>> block_offsets(const PrecubicalSet& X,
                                                    const HomologicalSystem& F) {
  std::vector<std::vector<std::size_t>> off(X.top_degree() + 1);
  for (std::size_t n = 0; n <= X.top_degree(); ++n) {
    off[n].resize(X.size(n) + 1, 0);
    for (std::size_t c = 0; c < X.size(n); ++c) off[n][c + 1] = off[n][c] + F.rank(n, c);
  }
  return off;
}

}  // namespace

ChainComplex coefficient_complex(const PrecubicalSet& X, const HomologicalSystem& F) {
  X.validate();
  F.validate(X);
  auto off = block_offsets(X, F);

  std::vector<std::vector<std::string>> labels(X.top_degree() + 1);
  for (std::size_t n = 0; n <= X.top_degree(); ++n)
    for (std::size_t c = 0; c < X.size(n); ++c) {
      std::size_t r = F.rank(n, c);
      for (std::size_t k = 0; k < r; ++k) {
        std::string l = X.cell_name(n, c);
        if (r > 1) l += ":" + std::to_string(k);
        labels[n].push_back(std::move(l));
      }
    }

  std::vector<IntMatrix> boundaries;
  for (std::size_t n = 1; n <= X.top_degree(); ++n) {
    IntMatrix d(off[n - 1].back(), off[n].back());
    for (std::size_t c = 0; c < X.size(n); ++c)
      for (std::size_t i = 1; i <= n; ++i) {
        Int sign = (i % 2 == 0) ? 1 : -1;
        for (int eps : {0, 1}) {
          std::size_t target = X.face(n, c, i, eps);
          d.add_block(off[n - 1][target], off[n][c], F.face_matrix(n, c, i, eps),
                      eps == 1 ? sign : Int(-sign));
        }
      }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(std::move(labels), std::move(boundaries));
}

std::pair<HomologicalSystem, HomologicalSystem> goubault_systems(const PrecubicalSet& X) {
  X.validate();
  HomologicalSystem z0(X), z1(X);
  IntMatrix one = IntMatrix::identity(1);
  IntMatrix zero(1, 1);
  for (std::size_t n = 0; n <= X.top_degree(); ++n)
    for (std::size_t c = 0; c < X.size(n); ++c) {
      z0.set_rank(n, c, 1);
      z1.set_rank(n, c, 1);
      for (std::size_t i = 1; i <= n; ++i) {
        z0.set_face_matrix(n, c, i, 0, one);
        z0.set_face_matrix(n, c, i, 1, zero);
        z1.set_face_matrix(n, c, i, 0, zero);
        z1.set_face_matrix(n, c, i, 1, one);
      }
    }
  return {std::move(z0), std::move(z1)};
}

}  // namespace cubhom
