// Copyright 2026 The pisu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pisu/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace pisu {

namespace {

void check_qubit(int q, std::size_t n, const char* what) {
  if (q < 1 || static_cast<std::size_t>(q) > n) {
    throw std::out_of_range(std::string(what) + ": qubit " + std::to_string(q) +
                            " outside [1, " + std::to_string(n) + "]");
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Basis-index map for a qubit permutation: index b goes to map[b].
std::vector<std::uint64_t> index_map(std::span<const int> image) {
  const std::size_t n = image.size();
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::uint64_t> out(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    std::uint64_t mapped = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if ((b >> (n - 1 - q)) & 1u) mapped |= std::uint64_t{1} << (n - static_cast<std::size_t>(image[q]));
    }
    out[b] = mapped;
  }
  return out;
}

void check_permutation(std::span<const int> image) {
  std::vector<bool> seen(image.size(), false);
  for (int q : image) {
    check_qubit(q, image.size(), "qubit permutation");
    if (seen[static_cast<std::size_t>(q - 1)]) {
      throw std::invalid_argument("qubit permutation: image is not a permutation");
    }
    seen[static_cast<std::size_t>(q - 1)] = true;
  }
}

std::vector<int> transposition_image(int i, int j, std::size_t n) {
  std::vector<int> image(n);
  for (std::size_t q = 0; q < n; ++q) image[q] = static_cast<int>(q + 1);
  std::swap(image[static_cast<std::size_t>(i - 1)], image[static_cast<std::size_t>(j - 1)]);
  return image;
}

double permutation_defect(const Matrix& u, const std::vector<std::uint64_t>& map) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    const auto pc = static_cast<Eigen::Index>(map[static_cast<std::size_t>(c)]);
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      const auto pr = static_cast<Eigen::Index>(map[static_cast<std::size_t>(r)]);
      worst = std::max(worst, std::abs(u(pr, pc) - u(r, c)));
    }
  }
  return worst;
}

void check_square_qubits(const Matrix& u, std::size_t n, const char* what) {
  if (u.rows() != u.cols() || u.rows() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument(std::string(what) + ": matrix is not 2^n x 2^n");
  }
}

}  // namespace

std::string TypeVector::representative() const {
  return std::string(static_cast<std::size_t>(x), 'X') + std::string(static_cast<std::size_t>(y), 'Y') +
         std::string(static_cast<std::size_t>(z), 'Z') + std::string(static_cast<std::size_t>(i), 'I');
}

TypeVector type_of(const PauliString& s) {
  TypeVector t;
  for (PauliLetter l : s.letters()) {
    switch (l) {
      case PauliLetter::X: ++t.x; break;
      case PauliLetter::Y: ++t.y; break;
      case PauliLetter::Z: ++t.z; break;
      case PauliLetter::I: ++t.i; break;
    }
  }
  return t;
}

std::uint64_t multinomial(const TypeVector& t) {
  if (t.x < 0 || t.y < 0 || t.z < 0 || t.i < 0) {
    throw std::invalid_argument("multinomial: negative count");
  }
  const auto n = static_cast<std::uint64_t>(t.n());
  const auto x = static_cast<std::uint64_t>(t.x);
  const auto y = static_cast<std::uint64_t>(t.y);
  const auto z = static_cast<std::uint64_t>(t.z);
  return binomial(n, x) * binomial(n - x, y) * binomial(n - x - y, z);
}

SymmetrizedGenerator::SymmetrizedGenerator(TypeVector type) : type_(type) {
  if (type.x < 0 || type.y < 0 || type.z < 0 || type.i < 0 || type.n() < 1 ||
      static_cast<std::size_t>(type.n()) > PauliString::kMaxQubits) {
    throw std::invalid_argument("SymmetrizedGenerator: invalid type vector");
  }
  if (type.is_identity()) {
    throw std::invalid_argument("SymmetrizedGenerator: the identity type is not traceless");
  }
  label_ = type.representative();
  std::vector<PauliLetter> letters;
  for (char c : label_) letters.push_back(letter_from_char(c));
  std::ranges::sort(letters);
  orbit_.reserve(multinomial(type));
  do {
    orbit_.emplace_back(letters);
  } while (std::ranges::next_permutation(letters).found);
}

PauliSum SymmetrizedGenerator::sum() const {
  PauliSum s(n());
  for (const PauliString& p : orbit_) s.add(p);
  return s;
}

Matrix SymmetrizedGenerator::matrix() const { return sum().matrix(); }

std::vector<std::pair<int, int>> transpositions(std::size_t n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) out.emplace_back(i, j);
  }
  return out;
}

UnitaryMatrix swap_matrix(int i, int j, std::size_t n) {
  check_qubit(i, n, "swap_matrix");
  check_qubit(j, n, "swap_matrix");
  return qubit_permutation_matrix(transposition_image(i, j, n));
}

UnitaryMatrix qubit_permutation_matrix(std::span<const int> image) {
  check_permutation(image);
  check_dense_limit(image.size(), "qubit_permutation_matrix");
  const auto map = index_map(image);
  const auto dim = static_cast<Eigen::Index>(map.size());
  Matrix m = Matrix::Zero(dim, dim);
  for (std::size_t b = 0; b < map.size(); ++b) {
    m(static_cast<Eigen::Index>(map[b]), static_cast<Eigen::Index>(b)) = 1.0;
  }
  return UnitaryMatrix(std::move(m));
}

PauliString conjugate_by_swap(const PauliString& s, int i, int j) {
  check_qubit(i, s.n(), "conjugate_by_swap");
  check_qubit(j, s.n(), "conjugate_by_swap");
  PauliString out = s;
  const auto pi = static_cast<std::size_t>(i - 1);
  const auto pj = static_cast<std::size_t>(j - 1);
  out.set_letter(pi, s.letter(pj));
  out.set_letter(pj, s.letter(pi));
  return out;
}

std::vector<TypeVector> enumerate_types(std::size_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_types: n must be positive");
  std::vector<TypeVector> types;
  const int nn = static_cast<int>(n);
  for (int x = nn; x >= 0; --x) {
    for (int y = nn - x; y >= 0; --y) {
      for (int z = nn - x - y; z >= 0; --z) {
        TypeVector t{x, y, z, nn - x - y - z};
        if (!t.is_identity()) types.push_back(t);
      }
    }
  }
  return types;
}

std::vector<SymmetrizedGenerator> enumerate_basis(std::size_t n) {
  if (n < 1) throw std::invalid_argument("enumerate_basis: n must be positive");
  std::vector<SymmetrizedGenerator> basis;
  for (const TypeVector& t : enumerate_types(n)) basis.emplace_back(t);
  return basis;
}

std::uint64_t dim_pisu(std::size_t n) {
  if (n < 1) throw std::invalid_argument("dim_pisu: n must be positive");
  const std::uint64_t m = n;
  return (m + 3) * (m + 2) * (m + 1) / 6 - 1;
}

bool is_invariant_under(const Matrix& u, const Matrix& s, double tol) {
  if (u.rows() != u.cols() || s.rows() != u.rows() || s.cols() != u.cols()) {
    throw std::invalid_argument("is_invariant_under: dimension mismatch");
  }
  return max_abs_diff(s * u * s.adjoint(), u) < tol;
}

bool is_invariant_under_permutation(const Matrix& u, std::span<const int> image, double tol) {
  check_permutation(image);
  check_square_qubits(u, image.size(), "is_invariant_under_permutation");
  return permutation_defect(u, index_map(image)) < tol;
}

double swap_invariance_defect(const Matrix& u, std::size_t n) {
  check_square_qubits(u, n, "swap_invariance_defect");
  double worst = 0.0;
  for (auto [i, j] : transpositions(n)) {
    worst = std::max(worst, permutation_defect(u, index_map(transposition_image(i, j, n))));
  }
  return worst;
}

bool is_swap_invariant(const Matrix& u, std::size_t n, double tol) {
  return swap_invariance_defect(u, n) < tol;
}

Projection project_onto_basis(const PauliSum& v, std::span<const SymmetrizedGenerator> basis) {
  std::map<TypeVector, std::size_t> index;
  for (std::size_t g = 0; g < basis.size(); ++g) {
    if (basis[g].n() != v.n()) throw std::invalid_argument("project_onto_basis: qubit counts differ");
    index.emplace(basis[g].type(), g);
  }
  Projection out;
  out.coefficients.assign(basis.size(), Complex{});
  std::vector<std::size_t> present(basis.size(), 0);
  std::vector<std::pair<std::size_t, Complex>> located;
  double outside = 0.0;
  for (const PauliString& t : v.terms()) {
    auto it = index.find(type_of(t));
    if (it == index.end()) {
      outside += std::norm(t.coefficient());
      continue;
    }
    out.coefficients[it->second] += t.coefficient();
    ++present[it->second];
    located.emplace_back(it->second, t.coefficient());
  }
  for (std::size_t g = 0; g < basis.size(); ++g) {
    out.coefficients[g] /= static_cast<double>(basis[g].orbit().size());
  }
  double residual2 = outside;
  for (const auto& [g, c] : located) residual2 += std::norm(c - out.coefficients[g]);
  for (std::size_t g = 0; g < basis.size(); ++g) {
    const double absent = static_cast<double>(basis[g].orbit().size() - present[g]);
    residual2 += absent * std::norm(out.coefficients[g]);
  }
  out.residual = std::sqrt(residual2);
  return out;
}

ClosureReport verify_closure(std::size_t n, double tol) {
  const std::vector<SymmetrizedGenerator> basis = enumerate_basis(n);
  std::vector<PauliSum> sums;
  sums.reserve(basis.size());
  for (const auto& g : basis) sums.push_back(g.sum());

  ClosureReport report;
  report.n = n;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const double residual = project_onto_basis(commutator(sums[a], sums[b]), basis).residual;
      ++report.pairs;
      if (residual > report.max_residual) {
        report.max_residual = residual;
        report.worst_pair = {a, b};
      }
    }
  }
  report.pass = report.max_residual < tol;
  return report;
}

nlohmann::json closure_report_json(const ClosureReport& r) {
  return {{"n", r.n}, {"pairs", r.pairs}, {"max_residual", r.max_residual}, {"pass", r.pass}};
}

}  // namespace pisu
