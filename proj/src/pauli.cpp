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


#include "pisu/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pisu {

namespace {

constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void require_same_n(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": qubit counts differ (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

// Exponent of i picked up by one qubit when multiplying letter (x1,z1) by
// (x2,z2), with (1,1) denoting Y.
int product_phase(bool x1, bool z1, bool x2, bool z2) {
  if (x1 && z1) return int(z2) - int(x2);
  if (x1) return int(z2) * (2 * int(x2) - 1);
  if (z1) return int(x2) * (1 - 2 * int(z2));
  return 0;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_coeff(Complex c) {
  if (c.imag() == 0.0) return format_real(c.real());
  if (c.real() == 0.0) return format_real(c.imag()) + "i";
  std::string im = format_real(c.imag());
  if (im.front() != '-') im = "+" + im;
  return "(" + format_real(c.real()) + im + "i)";
}

}  // namespace

char to_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': case 'i': case '_': return PauliLetter::I;
    case 'X': case 'x': return PauliLetter::X;
    case 'Y': case 'y': return PauliLetter::Y;
    case 'Z': case 'z': return PauliLetter::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
  }
}

Matrix letter_matrix(PauliLetter l) {
  Matrix m = Matrix::Zero(2, 2);
  switch (l) {
    case PauliLetter::I: m(0, 0) = 1; m(1, 1) = 1; break;
    case PauliLetter::X: m(0, 1) = 1; m(1, 0) = 1; break;
    case PauliLetter::Y: m(0, 1) = Complex(0, -1); m(1, 0) = Complex(0, 1); break;
    case PauliLetter::Z: m(0, 0) = 1; m(1, 1) = -1; break;
  }
  return m;
}

PauliString::PauliString(std::size_t n, Complex coeff) : n_(n), coeff_(coeff) {
  if (n > kMaxQubits) throw std::invalid_argument("PauliString: more than 64 qubits");
}

PauliString::PauliString(std::string_view letters, Complex coeff)
    : PauliString(letters.size(), coeff) {
  for (std::size_t p = 0; p < letters.size(); ++p) set_letter(p, letter_from_char(letters[p]));
}

PauliString::PauliString(const std::vector<PauliLetter>& letters, Complex coeff)
    : PauliString(letters.size(), coeff) {
  for (std::size_t p = 0; p < letters.size(); ++p) set_letter(p, letters[p]);
}

PauliLetter PauliString::letter(std::size_t pos) const {
  if (pos >= n_) throw std::out_of_range("PauliString::letter: position out of range");
  const bool x = (x_ >> pos) & 1u;
  const bool z = (z_ >> pos) & 1u;
  if (x && z) return PauliLetter::Y;
  if (x) return PauliLetter::X;
  if (z) return PauliLetter::Z;
  return PauliLetter::I;
}

std::vector<PauliLetter> PauliString::letters() const {
  std::vector<PauliLetter> out(n_);
  for (std::size_t p = 0; p < n_; ++p) out[p] = letter(p);
  return out;
}

void PauliString::set_letter(std::size_t pos, PauliLetter l) {
  if (pos >= n_) throw std::out_of_range("PauliString::set_letter: position out of range");
  const std::uint64_t bit = std::uint64_t{1} << pos;
  x_ &= ~bit;
  z_ &= ~bit;
  if (l == PauliLetter::X || l == PauliLetter::Y) x_ |= bit;
  if (l == PauliLetter::Z || l == PauliLetter::Y) z_ |= bit;
}

Complex PauliString::coefficient() const { return coeff_ * kPowersOfI[phase_ & 3]; }

PauliString PauliString::with_coefficient(Complex c) const {
  PauliString out = *this;
  out.coeff_ = c;
  out.phase_ = 0;
  return out;
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::popcount(support_bits()));
}

std::string PauliString::dense() const {
  std::string out(n_, 'I');
  for (std::size_t p = 0; p < n_; ++p) out[p] = to_char(letter(p));
  return out;
}

std::string PauliString::notation() const {
  std::string out;
  for (std::size_t p = n_; p-- > 0;) {
    const PauliLetter l = letter(p);
    if (l == PauliLetter::I) continue;
    if (!out.empty()) out += ' ';
    out += static_cast<char>(to_char(l) - 'A' + 'a');
    out += std::to_string(p + 1);
  }
  return out.empty() ? "1" : out;
}

Matrix string_matrix(const PauliString& s) {
  check_dense_limit(s.n(), "string_matrix");
  const std::size_t n = s.n();
  // Position p is basis-index bit n-1-p.
  std::uint64_t flip = 0;
  std::uint64_t sign = 0;
  int num_y = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - p);
    const PauliLetter l = s.letter(p);
    if (l == PauliLetter::X || l == PauliLetter::Y) flip |= bit;
    if (l == PauliLetter::Z || l == PauliLetter::Y) sign |= bit;
    if (l == PauliLetter::Y) ++num_y;
  }
  const Complex base = s.coefficient() * kPowersOfI[num_y & 3];
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(dim); ++col) {
    const bool negative = std::popcount(col & sign) & 1;
    m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) =
        negative ? -base : base;
  }
  return m;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  require_same_n(a.n(), b.n(), "multiply");
  PauliString out(a.n());
  out.x_ = a.x_ ^ b.x_;
  out.z_ = a.z_ ^ b.z_;
  out.coeff_ = a.coeff_ * b.coeff_;
  int phase = a.phase_ + b.phase_;
  std::uint64_t overlap = a.support_bits() & b.support_bits();
  while (overlap != 0) {
    const int p = std::countr_zero(overlap);
    overlap &= overlap - 1;
    phase += product_phase((a.x_ >> p) & 1u, (a.z_ >> p) & 1u, (b.x_ >> p) & 1u,
                           (b.z_ >> p) & 1u);
  }
  out.phase_ = ((phase % 4) + 4) % 4;
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_n(a.n(), b.n(), "commutes");
  const std::uint64_t anti = (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
  return (std::popcount(anti) & 1) == 0;
}

PauliSum::PauliSum(std::size_t n, double epsilon) : n_(n), epsilon_(epsilon) {
  if (n > PauliString::kMaxQubits) throw std::invalid_argument("PauliSum: more than 64 qubits");
}

PauliSum::PauliSum(const PauliString& s, double epsilon) : PauliSum(s.n(), epsilon) { add(s); }

void PauliSum::accumulate(const Key& key, Complex c) {
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < epsilon_) terms_.erase(it);
}

void PauliSum::add(const PauliString& s) {
  require_same_n(n_, s.n(), "PauliSum::add");
  accumulate({s.x_bits(), s.z_bits()}, s.coefficient());
}

void PauliSum::add(const PauliSum& other, Complex scale) {
  require_same_n(n_, other.n_, "PauliSum::add");
  for (const auto& [key, c] : other.terms_) accumulate(key, scale * c);
}

Complex PauliSum::coefficient(const PauliString& letters) const {
  require_same_n(n_, letters.n(), "PauliSum::coefficient");
  auto it = terms_.find({letters.x_bits(), letters.z_bits()});
  return it == terms_.end() ? Complex{} : it->second;
}

PauliString PauliSum::term(const Key& key, Complex c) const {
  PauliString s(n_, c);
  for (std::size_t p = 0; p < n_; ++p) {
    const bool x = (key.first >> p) & 1u;
    const bool z = (key.second >> p) & 1u;
    s.set_letter(p, x ? (z ? PauliLetter::Y : PauliLetter::X)
                      : (z ? PauliLetter::Z : PauliLetter::I));
  }
  return s;
}

std::vector<PauliString> PauliSum::terms() const {
  std::vector<PauliString> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back(term(key, c));
  return out;
}

double PauliSum::norm() const {
  double acc = 0.0;
  for (const auto& [key, c] : terms_) acc += std::norm(c);
  return std::sqrt(acc);
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [key, c] : terms_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

Matrix PauliSum::matrix() const {
  check_dense_limit(n_, "PauliSum::matrix");
  const Eigen::Index dim = Eigen::Index{1} << n_;
  Matrix m = Matrix::Zero(dim, dim);
  for (const PauliString& s : terms()) m += string_matrix(s);
  return m;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const PauliString& s : terms()) {
    if (!out.empty()) out += " + ";
    out += format_coeff(s.coefficient()) + " " + s.dense();
  }
  return out;
}

PauliSum operator+(PauliSum a, const PauliSum& b) {
  a.add(b);
  return a;
}

PauliSum operator-(PauliSum a, const PauliSum& b) {
  a.add(b, -1.0);
  return a;
}

PauliSum operator*(Complex c, PauliSum a) {
  PauliSum out(a.n_, a.epsilon_);
  out.add(a, c);
  return out;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require_same_n(a.n_, b.n_, "PauliSum product");
  PauliSum out(a.n_, a.epsilon_);
  for (const PauliString& sa : a.terms()) {
    for (const PauliString& sb : b.terms()) out.add(multiply(sa, sb));
  }
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  require_same_n(a.n(), b.n(), "commutator");
  PauliSum out(a.n(), a.epsilon());
  const std::vector<PauliString> ta = a.terms();
  const std::vector<PauliString> tb = b.terms();
  for (const PauliString& sa : ta) {
    for (const PauliString& sb : tb) {
      if (commutes(sa, sb)) continue;
      PauliString prod = multiply(sa, sb);
      out.add(prod.with_coefficient(2.0 * prod.coefficient()));
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const PauliSum& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const PauliString& t : s.terms()) {
    const Complex c = t.coefficient();
    terms.push_back({{"letters", t.dense()}, {"re", c.real()}, {"im", c.imag()}});
  }
  j = nlohmann::json{{"n", s.n()}, {"terms", std::move(terms)}};
}

void from_json(const nlohmann::json& j, PauliSum& s) {
  const std::size_t n = j.at("n").get<std::size_t>();
  PauliSum out(n);
  for (const auto& t : j.at("terms")) {
    const std::string letters = t.at("letters").get<std::string>();
    if (letters.size() != n) {
      throw std::invalid_argument("PauliSum JSON: term length does not match n");
    }
    out.add(PauliString(letters, Complex(t.at("re").get<double>(), t.at("im").get<double>())));
  }
  s = std::move(out);
}

}  // namespace pisu
