#include "cubhom/chain.hpp"

#include <future>
#include <sstream>

#include "cubhom/errors.hpp"
#include "cubhom/smith.hpp"

namespace cubhom {

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " (+) ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> labels,
                           std::vector<IntMatrix> boundaries)
    : labels_(std::move(labels)), boundaries_(std::move(boundaries)) {
  if (labels_.empty()) labels_.emplace_back();
  if (boundaries_.size() + 1 != labels_.size())
    throw DimensionMismatch("chain complex needs one boundary per consecutive degree pair");
  for (std::size_t i = 0; i < boundaries_.size(); ++i) {
    const IntMatrix& d = boundaries_[i];
    if (d.rows() != rank(i) || d.cols() != rank(i + 1)) {
      std::ostringstream os;
      os << "boundary d_" << (i + 1) << " has shape " << d.rows() << "x" << d.cols()
         << ", expected " << rank(i) << "x" << rank(i + 1);
      throw DimensionMismatch(os.str());
    }
  }
  for (std::size_t i = 0; i + 1 < boundaries_.size(); ++i)
    if (!(boundaries_[i] * boundaries_[i + 1]).is_zero()) {
      std::ostringstream os;
      os << "d_" << (i + 1) << " composed with d_" << (i + 2) << " is nonzero";
      throw CompositionNotZero(os.str());
    }
}

IntMatrix ChainComplex::boundary(std::size_t n) const {
  if (n == 0) return IntMatrix(0, rank(0));
  if (n <= boundaries_.size()) return boundaries_[n - 1];
  return IntMatrix(rank(n - 1), 0);
}

FGAbelianGroup homology_of_pair(const IntMatrix& alpha, const IntMatrix& beta) {
  if (beta.cols() != alpha.rows()) {
    std::ostringstream os;
    os << "inner dimensions disagree: alpha is " << alpha.rows() << "x" << alpha.cols()
       << ", beta is " << beta.rows() << "x" << beta.cols();
    throw DimensionMismatch(os.str());
  }
  if (!(beta * alpha).is_zero()) throw CompositionNotZero("beta * alpha is nonzero");

  const std::vector<Int> factors = invariant_factors(alpha);
  const std::size_t k = factors.size();
  const std::size_t b = matrix_rank(beta);
  FGAbelianGroup out;
  out.free_rank = alpha.rows() - k - b;
  for (const Int& d : factors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::vector<FGAbelianGroup> homology_of_complex(const ChainComplex& C, std::size_t max_degree) {
  const std::size_t top = C.top_degree();
  // One Smith reduction per boundary map; independent degrees run concurrently.
  const std::size_t nmaps = top < max_degree + 1 ? top : max_degree + 1;
  std::vector<std::vector<Int>> factors(top + 2);
  {
    std::vector<std::future<std::vector<Int>>> jobs;
    for (std::size_t n = 1; n <= nmaps; ++n)
      jobs.push_back(std::async(std::launch::async,
                                [&C, n] { return invariant_factors(C.boundary(n)); }));
    for (std::size_t n = 1; n <= nmaps; ++n) factors[n] = jobs[n - 1].get();
  }

  std::vector<FGAbelianGroup> out(max_degree + 1);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    if (n > top) continue;  // zero group beyond the top degree
    const std::vector<Int>& incoming = n + 1 <= top ? factors[n + 1] : factors[top + 1];
    const std::size_t k = incoming.size();
    const std::size_t b = n == 0 ? 0 : factors[n].size();
    out[n].free_rank = C.rank(n) - k - b;
    for (const Int& d : incoming)
      if (d > 1) out[n].torsion.push_back(d);
  }
  return out;
}

std::vector<FGAbelianGroup> homology_of_complex(const ChainComplex& C) {
  return homology_of_complex(C, C.top_degree());
}

}  // namespace cubhom
