#pragma once

#include <symmetria/groups.hpp>

#include <random>

namespace symmetria {

using Rng = std::mt19937_64;

CMatrix random_cmatrix(int rows, int cols, Rng& rng);
// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
CMatrix random_unitary(int d, Rng& rng);
CVector random_pure(int d, Rng& rng);
// Full-rank Ginibre density matrix; rank < d gives a lower-rank state.
CMatrix random_density(int d, Rng& rng, int rank = -1);
// Stinespring channel with n_kraus operators.
Superoperator random_channel(int dim_in, int dim_out, Rng& rng, int n_kraus = -1);
// Arbitrary linear map with Gaussian Choi entries.
Superoperator random_superoperator(int dim_in, int dim_out, Rng& rng);
GroupElement random_su2_element(Rng& rng);

}  // namespace symmetria
