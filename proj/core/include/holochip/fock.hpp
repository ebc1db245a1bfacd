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

#pragma once

// Fock-space bookkeeping: two-mode dark bases, multi-mode occupation bases,
// and truncated bosonic ladder operators.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "holochip/types.hpp"

namespace holochip::fock {

/// Photon occupation numbers of the east and west waveguides.
struct OccupationState {
  int n_east = 0;
  int n_west = 0;

  int total() const { return n_east + n_west; }
  friend auto operator<=>(const OccupationState&, const OccupationState&) = default;
};

/// "n_E,n_W" label used by the CLI and in CSV output.
std::string to_label(const OccupationState& s);

/// Parses "n_E,n_W" (surrounding whitespace allowed). Returns nullopt on any
/// malformed or negative entry.
std::optional<OccupationState> parse_label(std::string_view text);

/// Ordered dark basis of a fixed photon number P: (P,0), (P-1,1), ..., (0,P).
class DarkBasis {
 public:
  explicit DarkBasis(int photon_count);

  int photon_count() const { return photon_count_; }
  std::size_t dimension() const { return states_.size(); }
  std::span<const OccupationState> states() const { return states_; }
  const OccupationState& operator[](std::size_t i) const { return states_[i]; }

  /// Position of `s` in the basis, or nullopt when s does not carry P photons.
  std::optional<std::size_t> index_of(const OccupationState& s) const;

  friend bool operator==(const DarkBasis& a, const DarkBasis& b) {
    return a.photon_count_ == b.photon_count_;
  }

 private:
  int photon_count_;
  std::vector<OccupationState> states_;
};

DarkBasis dark_basis(int photon_count);

/// Number of ways to put `photon_count` bosons into `mode_count` modes,
/// binomial(P + K - 1, P). Throws std::overflow_error when the count does not
/// fit in 64 bits.
std::uint64_t hilbert_dimension(int photon_count, int mode_count);

/// All occupation vectors of `photon_count` photons over `mode_count` modes,
/// in descending lexicographic order (first mode most significant). For two
/// modes this coincides with the dark basis order.
std::vector<std::vector<int>> occupation_basis(int photon_count, int mode_count);

/// Truncated single-mode operator on occupations 0..cutoff.
struct ModeOperator {
  int cutoff = 1;
  CMatrix matrix;

  ModeOperator adjoint() const { return {cutoff, matrix.adjoint()}; }
  std::size_t local_dimension() const { return static_cast<std::size_t>(cutoff) + 1; }
};

/// a with a|n> = sqrt(n)|n-1>, truncated at `cutoff` (>= 1).
ModeOperator lowering_operator(int cutoff);
/// a^dagger, the conjugate transpose of lowering_operator(cutoff).
ModeOperator raising_operator(int cutoff);
ModeOperator identity_operator(int cutoff);
ModeOperator number_operator(int cutoff);

/// Kronecker product east (x) west over the east-major two-mode basis.
CMatrix two_mode_embed(const ModeOperator& op_east, const ModeOperator& op_west);

/// East-major flat index of |n_E, n_W> when the west mode has `west_dimension`
/// local levels.
inline std::size_t two_mode_index(int n_east, int n_west, std::size_t west_dimension) {
  return static_cast<std::size_t>(n_east) * west_dimension + static_cast<std::size_t>(n_west);
}

}  // namespace holochip::fock
