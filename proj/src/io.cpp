// Copyright 2026 The ergo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ergo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace ergo {

namespace {

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
  std::string line = raw;
  std::size_t hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  std::size_t first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  std::size_t last = line.find_last_not_of(" \t\r\n");
  return line.substr(first, last - first + 1);
}

double parse_real(const std::string& token, int line_no, const char* what) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("cannot parse ") + what + " \"" +
                                  token + "\"");
  }
  if (used != token.size())
    throw ParseError(line_no, std::string("trailing junk after ") + what +
                                  " \"" + token + "\"");
  return value;
}

}  // namespace

PauliOperator read_hamiltonian(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::vector<std::pair<std::string, double>> terms;
  int n_qubits = -1;
  double identity_shift = 0.0;
  bool saw_identity = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = clean_line(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string coeff_token, word, extra;
    fields >> coeff_token >> word;
    if (word.empty())
      throw ParseError(line_no, "expected \"<coefficient> <pauli-word>\"");
    if (fields >> extra)
      throw ParseError(line_no, "unexpected trailing field \"" + extra + "\"");
    double coeff = parse_real(coeff_token, line_no, "coefficient");
    if (n_qubits < 0) {
      n_qubits = static_cast<int>(word.size());
    } else if (static_cast<int>(word.size()) != n_qubits) {
      throw ParseError(line_no, "Pauli word length differs from earlier lines");
    }
    PauliString p;
    try {
      p = PauliString::from_word(word);
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
    if (p.is_identity()) {
      identity_shift += coeff;
      saw_identity = true;
      continue;
    }
    terms.emplace_back(word, coeff);
  }
  if (n_qubits < 0) throw ParseError(line_no, "no Hamiltonian terms found");
  if (saw_identity)
    std::fprintf(stderr,
                 "warning: identity term(s) totalling %.6g stripped; energies "
                 "shift by that constant\n",
                 identity_shift);
  if (terms.empty())
    throw ParseError(line_no, "Hamiltonian has no non-identity terms");
  PauliOperator op(n_qubits);
  for (const auto& [word, coeff] : terms)
    op.add(PauliString::from_word(word), coeff);
  return op;
}

PauliOperator read_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  return read_hamiltonian(in);
}

PureState read_state(std::istream& in) {
  std::string raw;
  int line_no = 0;
  std::vector<Cplx> amps;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = clean_line(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string re_token, im_token, extra;
    fields >> re_token >> im_token;
    if (im_token.empty())
      throw ParseError(line_no, "expected \"<re> <im>\"");
    if (fields >> extra)
      throw ParseError(line_no, "unexpected trailing field \"" + extra + "\"");
    amps.emplace_back(parse_real(re_token, line_no, "real part"),
                      parse_real(im_token, line_no, "imaginary part"));
  }
  std::size_t count = amps.size();
  if (count < 2 || (count & (count - 1)) != 0)
    throw ParseError(line_no, "amplitude count " + std::to_string(count) +
                                  " is not a power of two >= 2");
  int n_qubits = 0;
  while ((std::size_t{1} << n_qubits) < count) ++n_qubits;
  if (n_qubits > kMaxAmplitudeQubits)
    throw ParseError(line_no, "state larger than " +
                                  std::to_string(kMaxAmplitudeQubits) +
                                  " qubits");
  Vector v(static_cast<Eigen::Index>(count));
  for (std::size_t c = 0; c < count; ++c) v(static_cast<Eigen::Index>(c)) = amps[c];
  double norm = v.norm();
  if (std::abs(norm - 1.0) > 1e-6)
    throw ParseError(line_no, "state norm " + std::to_string(norm) +
                                  " is not 1 (tolerance 1e-6)");
  v /= norm;
  return PureState(n_qubits, std::move(v));
}

PureState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open \"" + path + "\"");
  return read_state(in);
}

void write_hamiltonian(std::ostream& out, const PauliOperator& h) {
  for (std::size_t k = 0; k < h.num_terms(); ++k) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", h.terms()[k].second);
    out << buf << ' ' << h.string_at(k).word() << '\n';
  }
}

void write_state(std::ostream& out, const PureState& state) {
  const Vector& amps = state.amplitudes();
  for (Eigen::Index c = 0; c < amps.size(); ++c) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.17g %.17g", amps(c).real(), amps(c).imag());
    out << buf << '\n';
  }
}

}  // namespace ergo
