// Copyright 2026 The graymux Authors
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

#include "graymux/angle_transform.h"

#include "graymux/sim.h"
#include "graymux/synth.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace graymux;

static double max_diff(const AngleVector &a, const AngleVector &b) {
    EXPECT_EQ(a.size(), b.size());
    double worst = 0;
    for (size_t k = 0; k < a.size(); k++) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

TEST(angle_vector, validates_length_and_finiteness) {
    ASSERT_THROW(AngleVector(2, AngleBasis::control, {1, 2, 3}), std::invalid_argument);
    ASSERT_THROW(AngleVector(1, AngleBasis::control, {1, NAN}), std::invalid_argument);
    ASSERT_THROW(AngleVector(0, AngleBasis::control, {INFINITY}), std::invalid_argument);
    ASSERT_NO_THROW(AngleVector(0, AngleBasis::subscript, {0.25}));
}

TEST(angle_transform, width_one_example) {
    const double a = 0.7;
    const double b = -1.3;
    AngleVector thetas = thetas_from_phis(AngleVector(1, AngleBasis::control, {a, b}));
    ASSERT_EQ(thetas.basis(), AngleBasis::subscript);
    ASSERT_NEAR(thetas[0], (a + b) / 2, 1e-15);
    ASSERT_NEAR(thetas[1], (a - b) / 2, 1e-15);

    // Matrix oracle: D = blockdiag(R(a), R(b)) must equal A_1 A_0 built from
    // the subscript angles, A_0 = RotY(theta_0), A_1 = CNot RotY(theta_1) CNot.
    DenseUnitary d = DenseUnitary::identity(2);
    const double phis[2] = {a, b};
    for (size_t c = 0; c < 2; c++) {
        d(c, c) = std::cos(phis[c]);
        d(c, c + 2) = std::sin(phis[c]);
        d(c + 2, c) = -std::sin(phis[c]);
        d(c + 2, c + 2) = std::cos(phis[c]);
    }
    DenseUnitary a0 = gate_matrix(RotY{1, thetas[0]}, 2);
    DenseUnitary cx = gate_matrix(CNot{0, 1}, 2);
    DenseUnitary a1 = cx * gate_matrix(RotY{1, thetas[1]}, 2) * cx;
    ASSERT_LE(max_abs_diff(a1 * a0, d), 1e-15);
}

TEST(angle_transform, zero_and_constant_vectors) {
    AngleVector zero = AngleVector::zeros(2, AngleBasis::control);
    ASSERT_EQ(thetas_from_phis(zero), AngleVector::zeros(2, AngleBasis::subscript));
    ASSERT_EQ(phis_from_thetas(AngleVector::zeros(3, AngleBasis::subscript)), AngleVector::zeros(3, AngleBasis::control));

    const double alpha = 0.3;
    AngleVector thetas = thetas_from_phis(AngleVector(2, AngleBasis::control, {alpha, alpha, alpha, alpha}));
    ASSERT_NEAR(thetas[0], alpha, 1e-15);
    ASSERT_NEAR(thetas[1], 0, 1e-15);
    ASSERT_NEAR(thetas[2], 0, 1e-15);
    ASSERT_NEAR(thetas[3], 0, 1e-15);

    // A constant phi is a plain rotation on the target; the circuit must agree.
    AngleVector phis(2, AngleBasis::control, {alpha, alpha, alpha, alpha});
    ASSERT_LE(max_abs_diff(circuit_matrix(emit_optimized(thetas)), target_d_matrix(phis, 3)), 1e-12);
}

TEST(angle_transform, forward_width_one) {
    AngleVector phis = phis_from_thetas(AngleVector(1, AngleBasis::subscript, {0.25, 0.5}));
    ASSERT_EQ(phis.basis(), AngleBasis::control);
    ASSERT_DOUBLE_EQ(phis[0], 0.75);
    ASSERT_DOUBLE_EQ(phis[1], -0.25);
}

TEST(angle_transform, rejects_wrong_basis) {
    AngleVector control = AngleVector::zeros(2, AngleBasis::control);
    AngleVector subscript = AngleVector::zeros(2, AngleBasis::subscript);
    ASSERT_THROW(thetas_from_phis(subscript), std::invalid_argument);
    ASSERT_THROW(phis_from_thetas(control), std::invalid_argument);
    ASSERT_THROW(thetas_from_phis_direct(subscript), std::invalid_argument);
    ASSERT_THROW(phis_from_thetas_direct(control), std::invalid_argument);
}

TEST(angle_transform, round_trip) {
    std::mt19937_64 rng(3);
    AngleVector thetas = oracle::random_angle_vector(3, AngleBasis::subscript, rng);
    ASSERT_LE(max_diff(thetas_from_phis(phis_from_thetas(thetas)), thetas), 1e-12);

    for (unsigned m = 0; m <= 12; m++) {
        AngleVector t = oracle::random_angle_vector(m, AngleBasis::subscript, rng);
        ASSERT_LE(max_diff(thetas_from_phis(phis_from_thetas(t)), t), 1e-12) << "m=" << m;
        AngleVector p = oracle::random_angle_vector(m, AngleBasis::control, rng);
        ASSERT_LE(max_diff(phis_from_thetas(thetas_from_phis(p)), p), 1e-12) << "m=" << m;
    }
}

TEST(angle_transform, butterfly_matches_direct_sum) {
    std::mt19937_64 rng(4);
    for (unsigned m = 0; m <= 8; m++) {
        AngleVector t = oracle::random_angle_vector(m, AngleBasis::subscript, rng);
        ASSERT_LE(max_diff(phis_from_thetas(t), phis_from_thetas_direct(t)), 1e-12) << "m=" << m;
        AngleVector p = oracle::random_angle_vector(m, AngleBasis::control, rng);
        ASSERT_LE(max_diff(thetas_from_phis(p), thetas_from_phis_direct(p)), 1e-12) << "m=" << m;
    }
}

TEST(angle_transform, linearity) {
    std::mt19937_64 rng(5);
    for (unsigned m = 1; m <= 10; m++) {
        auto x = oracle::random_angles(size_t{1} << m, rng);
        auto y = oracle::random_angles(size_t{1} << m, rng);
        std::vector<double> sum(x.size());
        for (size_t k = 0; k < x.size(); k++) {
            sum[k] = x[k] + y[k];
        }
        auto tx = thetas_from_phis(AngleVector(m, AngleBasis::control, x));
        auto ty = thetas_from_phis(AngleVector(m, AngleBasis::control, y));
        auto ts = thetas_from_phis(AngleVector(m, AngleBasis::control, sum));
        for (size_t k = 0; k < ts.size(); k++) {
            ASSERT_NEAR(ts[k], tx[k] + ty[k], 1e-12);
        }
    }
}

TEST(angle_transform, circuit_from_transformed_angles_reproduces_target) {
    std::mt19937_64 rng(6);
    for (unsigned m = 0; m <= 4; m++) {
        for (int trial = 0; trial < 5; trial++) {
            AngleVector phis = oracle::random_angle_vector(m, AngleBasis::control, rng);
            AngleVector thetas = thetas_from_phis(phis);
            Circuit naive = emit_naive(thetas, lazy_codes(m));
            ASSERT_LE(max_abs_diff(oracle::dense_product(naive), target_d_matrix(phis, m + 1)), 1e-10);
        }
    }
}
