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

#include "holochip/holonomy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "holochip/entanglement.hpp"
#include "holochip/fock.hpp"
#include "support.hpp"

namespace holochip::holonomy {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

CMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Independent route to the two-mode lift: truncated creation matrices at
// cutoff P + 1, monomials applied to the vacuum by matrix-vector products.
CMatrix ladder_lift(const CMatrix& u2, int photons) {
  const int cutoff = photons + 1;
  const auto local = static_cast<std::size_t>(cutoff) + 1;
  const CMatrix create_east =
      fock::two_mode_embed(fock::raising_operator(cutoff), fock::identity_operator(cutoff));
  const CMatrix create_west =
      fock::two_mode_embed(fock::identity_operator(cutoff), fock::raising_operator(cutoff));
  const CMatrix column_op[2] = {u2(0, 0) * create_east + u2(1, 0) * create_west,
                                u2(0, 1) * create_east + u2(1, 1) * create_west};
  const fock::DarkBasis basis(photons);
  CMatrix out(static_cast<Eigen::Index>(basis.dimension()), static_cast<Eigen::Index>(basis.dimension()));
  for (std::size_t col = 0; col < basis.dimension(); ++col) {
    CVector v = CVector::Zero(static_cast<Eigen::Index>(local * local));
    v(0) = 1.0;
    for (int k = 0; k < basis[col].n_west; ++k) v = column_op[1] * v;
    for (int k = 0; k < basis[col].n_east; ++k) v = column_op[0] * v;
    v /= std::sqrt(std::tgamma(basis[col].n_east + 1.0) * std::tgamma(basis[col].n_west + 1.0));
    for (std::size_t row = 0; row < basis.dimension(); ++row) {
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          v(static_cast<Eigen::Index>(fock::two_mode_index(basis[row].n_east, basis[row].n_west, local)));
    }
  }
  return out;
}

TEST(U3Test, IdentityAtZero) { EXPECT_EQ(max_abs(u3({0.0}).entries() - CMatrix::Identity(3, 3)), 0.0); }

TEST(U3Test, QuarterPiGoldenMatrix) {
  const auto expected = real_matrix({{0.5, -1 / sqrt2, 0.5}, {1 / sqrt2, 0.0, -1 / sqrt2}, {0.5, 1 / sqrt2, 0.5}});
  EXPECT_LT(max_abs(u3({pi / 4}).entries() - expected), 1e-12);
}

TEST(U3Test, HalfPiIsAntiDiagonal) {
  const auto expected = real_matrix({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  EXPECT_LT(max_abs(u3({pi / 2}).entries() - expected), 1e-12);
}

TEST(U3Test, UnitaryUnitDeterminantAndInverseByNegation) {
  testing::Generator gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Phase phi{gen.phase()};
    const CMatrix u = u3(phi).entries();
    EXPECT_LT(max_abs(u * u.transpose() - CMatrix::Identity(3, 3)), 1e-12);
    EXPECT_LT(std::abs(u.determinant() - Complex{1.0}), 1e-12);
    EXPECT_LT(max_abs(u * u3({-phi.radians}).entries() - CMatrix::Identity(3, 3)), 1e-12);
    EXPECT_EQ(u.imag().cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(RotationTest, Values) {
  EXPECT_TRUE(single_mode_rotation({0.0}).isIdentity());
  Eigen::Matrix2d expected;
  expected << 1 / sqrt2, -1 / sqrt2, 1 / sqrt2, 1 / sqrt2;
  EXPECT_LT((single_mode_rotation({pi / 4}) - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(FockLiftTest, LadderOracleAgreesWithClosedFormAtTwoPhotons) {
  // Freeze the oracle against the closed form first, then check the lift.
  for (double phi : {0.1, 0.477, pi / 4, 1.3}) {
    const CMatrix rot = single_mode_rotation({phi}).cast<Complex>();
    const CMatrix oracle = ladder_lift(rot, 2);
    EXPECT_LT(max_abs(oracle - u3({phi}).entries()), 1e-12) << phi;
    EXPECT_LT(max_abs(fock_lift(rot, 2).entries() - u3({phi}).entries()), 1e-12) << phi;
  }
}

TEST(FockLiftTest, MatchesLadderOracleForRandomUnitaries) {
  testing::Generator gen(5);
  for (int photons = 1; photons <= 5; ++photons) {
    for (int trial = 0; trial < 10; ++trial) {
      const CMatrix u = gen.unitary(2);
      EXPECT_LT(max_abs(fock_lift(u, photons).entries() - ladder_lift(u, photons)), 1e-12);
    }
  }
}

TEST(FockLiftTest, IdentityAndDefiningRepresentation) {
  for (int p : {1, 2, 3}) {
    EXPECT_LT(max_abs(fock_lift(CMatrix::Identity(2, 2), p).entries() - CMatrix::Identity(p + 1, p + 1)), 1e-15);
  }
  const CMatrix rot = single_mode_rotation({0.3}).cast<Complex>();
  EXPECT_LT(max_abs(fock_lift(rot, 1).entries() - rot), 1e-15);
}

TEST(FockLiftTest, HomomorphismOnRandomPairs) {
  testing::Generator gen(17);
  for (int photons = 1; photons <= 4; ++photons) {
    for (int trial = 0; trial < 25; ++trial) {
      const CMatrix a = gen.unitary(2);
      const CMatrix b = gen.unitary(2);
      const CMatrix lhs = fock_lift(a * b, photons).entries();
      const CMatrix rhs = fock_lift(a, photons).entries() * fock_lift(b, photons).entries();
      EXPECT_LT(max_abs(lhs - rhs), 1e-10);
    }
  }
}

TEST(FockLiftTest, RejectsNonUnitaryAndBadPhotonCount) {
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = 1e-6;
  EXPECT_THROW(fock_lift(m, 2), std::invalid_argument);
  EXPECT_THROW(fock_lift(CMatrix::Identity(2, 2), 0), std::invalid_argument);
  EXPECT_THROW(fock_lift(CMatrix::Identity(3, 3), 2), std::invalid_argument);
}

TEST(BosonicLiftTest, FourModeLiftIsUnitaryAndMultiplicative) {
  testing::Generator gen(23);
  for (int photons = 1; photons <= 3; ++photons) {
    const CMatrix a = gen.unitary(4);
    const CMatrix b = gen.unitary(4);
    const CMatrix la = bosonic_lift(a, photons);
    const auto dim = static_cast<Eigen::Index>(fock::hilbert_dimension(photons, 4));
    ASSERT_EQ(la.rows(), dim);
    EXPECT_LT(max_abs(la * la.adjoint() - CMatrix::Identity(dim, dim)), 1e-12);
    EXPECT_LT(max_abs(bosonic_lift(a * b, photons) - la * bosonic_lift(b, photons)), 1e-12);
  }
}

TEST(ApplyHolonomyTest, OutputsOfTheThreeInputs) {
  testing::Generator gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    const double phi = gen.phase();
    const double c = std::cos(phi), s = std::sin(phi);
    const auto from20 = apply_holonomy(u3({phi}), PureState::basis_state({2, 0}));
    const auto from11 = apply_holonomy(u3({phi}), PureState::basis_state({1, 1}));
    CVector expected20(3), expected11(3);
    expected20 << c * c, sqrt2 * s * c, s * s;
    expected11 << -sqrt2 * s * c, std::cos(2 * phi), sqrt2 * s * c;
    EXPECT_LT(max_abs(from20.amplitudes() - expected20), 1e-14);
    EXPECT_LT(max_abs(from11.amplitudes() - expected11), 1e-14);
    EXPECT_NEAR(from20.amplitudes().norm(), 1.0, 1e-12);
  }
  const auto hom = apply_holonomy(u3({pi / 4}), PureState::basis_state({2, 0}));
  CVector expected(3);
  expected << 0.5, 1 / sqrt2, 0.5;
  EXPECT_LT(max_abs(hom.amplitudes() - expected), 1e-15);
}

TEST(ApplyHolonomyTest, DimensionMismatchThrows) {
  EXPECT_THROW(apply_holonomy(u3({0.1}), PureState::basis_state({1, 0})), std::invalid_argument);
}

TEST(ApplyHolonomyTest, ProbabilityConservedForRandomInputs) {
  testing::Generator gen(8);
  for (int photons = 1; photons <= 6; ++photons) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto out = apply_holonomy(rotation_lift({gen.phase()}, photons), gen.dark_state(photons));
      EXPECT_NEAR(out.amplitudes().norm(), 1.0, 1e-12);
    }
  }
}

TEST(PureStateTest, RejectsBadNormAndLength) {
  EXPECT_THROW(PureState(fock::DarkBasis(2), CVector::Ones(3)), std::invalid_argument);
  EXPECT_THROW(PureState(fock::DarkBasis(2), CVector::Ones(1)), std::invalid_argument);
}

TEST(MaximallyEntangledPhaseTest, ClosedFormAndEqualAmplitudes) {
  const Phase phi = phi_maximally_entangled();
  EXPECT_NEAR(phi.radians, 0.4776583, 5e-8);
  EXPECT_NEAR(std::tan(2 * phi.radians), sqrt2, 1e-15);
  const auto out = apply_holonomy(u3(phi), PureState::basis_state({1, 1}));
  const double a = 1 / std::sqrt(3.0);
  CVector expected(3);
  expected << -a, a, a;
  EXPECT_LT(max_abs(out.amplitudes() - expected), 1e-15);
  EXPECT_NEAR(entanglement::entanglement_entropy_bits(out), std::log2(3.0), 1e-12);
}

// Dense scan of a closed-form entropy curve; oracle for the optimizer.
template <class F>
std::pair<double, double> dense_argmax(F&& f) {
  double best_phi = 0.0, best = -1.0;
  constexpr int kPoints = 200'000;
  for (int k = 0; k < kPoints; ++k) {
    const double phi = pi * k / kPoints;
    const double v = f(phi);
    if (v > best + 1e-15) best = v, best_phi = phi;
  }
  return {best_phi, best};
}

double shannon_bits(std::initializer_list<double> p) {
  double s = 0.0;
  for (double x : p)
    if (x > 0) s -= x * std::log2(x);
  return s;
}

TEST(MaxEntropyTest, SinglePhotonPeaksAtQuarterPi) {
  const auto [oracle_phi, oracle_value] = dense_argmax([](double phi) {
    const double c2 = std::pow(std::cos(phi), 2);
    return shannon_bits({c2, 1 - c2});
  });
  EXPECT_NEAR(oracle_phi, pi / 4, 1e-4);
  EXPECT_NEAR(oracle_value, 1.0, 1e-9);

  const auto opt = max_entropy_over_phase(1, 0);
  EXPECT_NEAR(opt.phi.radians, pi / 4, 1e-6);
  EXPECT_NEAR(opt.entropy_bits, 1.0, 1e-12);
}

TEST(MaxEntropyTest, TwoPhotonProductInputPeaksAtOneAndAHalfBits) {
  const auto [oracle_phi, oracle_value] = dense_argmax([](double phi) {
    const double c2 = std::pow(std::cos(phi), 2), s2 = 1 - c2;
    return shannon_bits({c2 * c2, 2 * s2 * c2, s2 * s2});
  });
  EXPECT_NEAR(oracle_phi, pi / 4, 1e-4);
  EXPECT_NEAR(oracle_value, 1.5, 1e-9);

  const auto opt = max_entropy_over_phase(2, 0);
  EXPECT_NEAR(opt.phi.radians, pi / 4, 1e-6);
  EXPECT_NEAR(opt.entropy_bits, 1.5, 1e-12);
}

TEST(MaxEntropyTest, TwoPhotonBalancedInputReachesLogThree) {
  const auto opt = max_entropy_over_phase(2, 1);
  EXPECT_NEAR(opt.phi.radians, phi_maximally_entangled().radians, 1e-6);
  EXPECT_NEAR(opt.entropy_bits, std::log2(3.0), 1e-12);
}

TEST(MaxEntropyTest, HigherSectorsStayBelowTheVolumeBound) {
  for (int photons = 3; photons <= 5; ++photons) {
    for (std::size_t k = 0; k <= static_cast<std::size_t>(photons); ++k) {
      const auto opt = max_entropy_over_phase(photons, k, 512);
      EXPECT_LE(opt.entropy_bits, std::log2(photons + 1.0) + 1e-12);
      EXPECT_GE(opt.phi.radians, 0.0);
      EXPECT_LT(opt.phi.radians, pi);
    }
  }
}

TEST(MaxEntropyTest, InvalidArguments) {
  EXPECT_THROW(max_entropy_over_phase(0, 0), std::invalid_argument);
  EXPECT_THROW(max_entropy_over_phase(2, 3), std::out_of_range);
}

TEST(MirrorSymmetryTest, MirroredInputsShareSchmidtSpectra) {
  testing::Generator gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Phase phi{gen.uniform(0.0, pi)};
    const auto a = entanglement::schmidt(apply_holonomy(u3(phi), PureState::basis_state({2, 0})));
    const auto b = entanglement::schmidt(apply_holonomy(u3(phi), PureState::basis_state({0, 2})));
    ASSERT_EQ(a.coefficients.size(), b.coefficients.size());
    for (std::size_t k = 0; k < a.coefficients.size(); ++k) {
      EXPECT_NEAR(a.coefficients[k], b.coefficients[k], 1e-12);
    }
  }
}

}  // namespace
}  // namespace holochip::holonomy
