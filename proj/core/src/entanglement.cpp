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

#include "holochip/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace holochip::entanglement {

namespace {

constexpr double kHermiticityTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-10;
constexpr double kNegativeEigenvalueFloor = -1e-9;
constexpr double kZeroEigenvalue = 1e-12;

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

}  // namespace

DensityMatrix::DensityMatrix(CMatrix entries, LocalDims dims)
    : entries_(std::move(entries)), dims_(dims) {
  if (dims_.east == 0 || dims_.west == 0) {
    throw std::invalid_argument("DensityMatrix: local dimensions must be positive");
  }
  if (entries_.rows() != idx(dims_.total()) || entries_.cols() != idx(dims_.total())) {
    throw std::invalid_argument("DensityMatrix: matrix side does not match local dimensions");
  }
  if (max_abs(entries_ - entries_.adjoint()) > kHermiticityTolerance) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex{1.0}) > kTraceTolerance) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  eigenvalues_ = solver.eigenvalues();
  if (eigenvalues_.minCoeff() < kNegativeEigenvalueFloor) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(eigenvalues_.minCoeff()));
  }
}

DensityMatrix DensityMatrix::from_pure(const CVector& amplitudes, LocalDims dims) {
  return DensityMatrix(amplitudes * amplitudes.adjoint(), dims);
}

DensityMatrix density_from_pure(const holonomy::PureState& state) {
  const std::size_t side = state.basis().dimension();
  CVector embedded = CVector::Zero(idx(side * side));
  for (std::size_t k = 0; k < side; ++k) {
    const auto& s = state.basis()[k];
    embedded(idx(fock::two_mode_index(s.n_east, s.n_west, side))) = state.amplitudes()(idx(k));
  }
  return DensityMatrix::from_pure(embedded, {side, side});
}

DensityMatrix reduce(const DensityMatrix& rho, Side keep) {
  const auto [de, dw] = rho.dims();
  const auto& m = rho.matrix();
  if (keep == Side::east) {
    CMatrix out = CMatrix::Zero(idx(de), idx(de));
    for (std::size_t i = 0; i < de; ++i)
      for (std::size_t k = 0; k < de; ++k)
        for (std::size_t j = 0; j < dw; ++j) out(idx(i), idx(k)) += m(idx(i * dw + j), idx(k * dw + j));
    return DensityMatrix(std::move(out), {de, 1});
  }
  CMatrix out = CMatrix::Zero(idx(dw), idx(dw));
  for (std::size_t j = 0; j < dw; ++j)
    for (std::size_t l = 0; l < dw; ++l)
      for (std::size_t i = 0; i < de; ++i) out(idx(j), idx(l)) += m(idx(i * dw + j), idx(i * dw + l));
  return DensityMatrix(std::move(out), {dw, 1});
}

DensityMatrix reduced_from_pure(const holonomy::PureState& state, Side keep) {
  const CMatrix c = state.coefficient_matrix();
  const std::size_t side = state.basis().dimension();
  if (keep == Side::east) return DensityMatrix(c * c.adjoint(), {side, 1});
  return DensityMatrix((c.adjoint() * c).transpose(), {side, 1});
}

double von_neumann_entropy_bits(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.eigenvalues()) {
    if (lambda > kZeroEigenvalue) s -= lambda * std::log2(lambda);
  }
  return std::max(0.0, s);
}

double purity(const DensityMatrix& rho) { return rho.matrix().cwiseAbs2().sum(); }

double renyi2_bits(const DensityMatrix& rho) { return std::max(0.0, -std::log2(purity(rho))); }

InequalityWitness entropic_inequality_violated(const DensityMatrix& global) {
  const double global_purity = purity(global);
  return {purity(reduce(global, Side::east)) < global_purity - 1e-12,
          purity(reduce(global, Side::west)) < global_purity - 1e-12};
}

SchmidtSpectrum schmidt(const holonomy::PureState& state) {
  Eigen::JacobiSVD<CMatrix> svd(state.coefficient_matrix());
  const auto& sv = svd.singularValues();
  SchmidtSpectrum out;
  out.coefficients.assign(sv.data(), sv.data() + sv.size());
  std::sort(out.coefficients.begin(), out.coefficients.end(), std::greater<>());
  return out;
}

CMatrix partial_transpose(const DensityMatrix& rho, Side side) {
  return detail::partial_transpose(rho.matrix(), rho.dims(), side);
}

double log_negativity(const DensityMatrix& rho, Side side) {
  return detail::log_negativity(rho.matrix(), rho.dims(), side);
}

double entanglement_entropy_bits(const holonomy::PureState& state) {
  return von_neumann_entropy_bits(reduced_from_pure(state, Side::east));
}

namespace detail {

CMatrix partial_transpose(const CMatrix& rho, LocalDims dims, Side side) {
  const auto [de, dw] = dims;
  CMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < de; ++i)
    for (std::size_t j = 0; j < dw; ++j)
      for (std::size_t k = 0; k < de; ++k)
        for (std::size_t l = 0; l < dw; ++l) {
          const Complex v = rho(idx(i * dw + j), idx(k * dw + l));
          if (side == Side::east) {
            out(idx(k * dw + j), idx(i * dw + l)) = v;
          } else {
            out(idx(i * dw + l), idx(k * dw + j)) = v;
          }
        }
  return out;
}

double log_negativity(const CMatrix& rho, LocalDims dims, Side side) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(partial_transpose(rho, dims, side),
                                                Eigen::EigenvaluesOnly);
  const double trace_norm = solver.eigenvalues().cwiseAbs().sum();
  return std::max(0.0, std::log2(trace_norm));
}

}  // namespace detail

}  // namespace holochip::entanglement
