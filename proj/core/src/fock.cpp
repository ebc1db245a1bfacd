// Copyright 2026 The holochip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holochip/fock.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace holochip::fock {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::optional<int> parse_count(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || value < 0) return std::nullopt;
  return value;
}

void enumerate(int remaining, int mode, std::vector<int>& current,
               std::vector<std::vector<int>>& out) {
  const int last = static_cast<int>(current.size()) - 1;
  if (mode == last) {
    current[mode] = remaining;
    out.push_back(current);
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    current[mode] = n;
    enumerate(remaining - n, mode + 1, current, out);
  }
}

}  // namespace

std::string to_label(const OccupationState& s) {
  return std::to_string(s.n_east) + "," + std::to_string(s.n_west);
}

std::optional<OccupationState> parse_label(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  const auto east = parse_count(text.substr(0, comma));
  const auto west = parse_count(text.substr(comma + 1));
  if (!east || !west) return std::nullopt;
  return OccupationState{*east, *west};
}

DarkBasis::DarkBasis(int photon_count) : photon_count_(photon_count) {
  if (photon_count < 0) {
    throw std::invalid_argument("dark_basis: photon count must be non-negative");
  }
  states_.reserve(static_cast<std::size_t>(photon_count) + 1);
  for (int n_east = photon_count; n_east >= 0; --n_east) {
    states_.push_back({n_east, photon_count - n_east});
  }
}

std::optional<std::size_t> DarkBasis::index_of(const OccupationState& s) const {
  if (s.n_east < 0 || s.n_west < 0 || s.total() != photon_count_) return std::nullopt;
  return static_cast<std::size_t>(photon_count_ - s.n_east);
}

DarkBasis dark_basis(int photon_count) { return DarkBasis(photon_count); }

std::uint64_t hilbert_dimension(int photon_count, int mode_count) {
  if (photon_count < 0) throw std::invalid_argument("hilbert_dimension: negative photon count");
  if (mode_count < 1) throw std::invalid_argument("hilbert_dimension: mode count must be >= 1");
  // binomial(P + K - 1, k) with k = min(P, K - 1); each partial product is itself
  // a binomial coefficient, so the division is exact.
  const std::uint64_t n = static_cast<std::uint64_t>(photon_count) + mode_count - 1;
  const std::uint64_t k = std::min<std::uint64_t>(photon_count, mode_count - 1);
  // The running product can exceed 64 bits one step before the division
  // brings it back, so it is carried in 128 bits.
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    __extension__ using Wide = unsigned __int128;
    const Wide next = static_cast<Wide>(result) * (n - k + i) / i;
    if (next > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("hilbert_dimension: count exceeds 64-bit range");
    }
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

std::vector<std::vector<int>> occupation_basis(int photon_count, int mode_count) {
  const auto size = hilbert_dimension(photon_count, mode_count);
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(size));
  std::vector<int> current(static_cast<std::size_t>(mode_count), 0);
  enumerate(photon_count, 0, current, out);
  return out;
}

ModeOperator lowering_operator(int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("lowering_operator: cutoff must be >= 1");
  CMatrix a = CMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {cutoff, std::move(a)};
}

ModeOperator raising_operator(int cutoff) { return lowering_operator(cutoff).adjoint(); }

ModeOperator identity_operator(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("identity_operator: negative cutoff");
  return {cutoff, CMatrix::Identity(cutoff + 1, cutoff + 1)};
}

ModeOperator number_operator(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("number_operator: negative cutoff");
  CMatrix n = CMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int k = 0; k <= cutoff; ++k) n(k, k) = k;
  return {cutoff, std::move(n)};
}

CMatrix two_mode_embed(const ModeOperator& op_east, const ModeOperator& op_west) {
  const auto& e = op_east.matrix;
  const auto& w = op_west.matrix;
  CMatrix out(e.rows() * w.rows(), e.cols() * w.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i) {
    for (Eigen::Index j = 0; j < e.cols(); ++j) {
      out.block(i * w.rows(), j * w.cols(), w.rows(), w.cols()) = e(i, j) * w;
    }
  }
  return out;
}

}  // namespace holochip::fock
