#pragma once

#include <cstdint>
#include <random>

#include "dramsey/geom.hpp"

namespace dramsey {

using Rng = std::mt19937_64;

/// splitmix64 finaliser applied to (base, index); used to give every restart
/// and sample block its own reproducible stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with the signs
/// of R's diagonal folded into Q, then one column flipped with probability
/// 1/2 so that both determinant signs occur.
Matrix random_orthogonal(std::size_t dim, Rng& rng);

/// Uniform direction on the unit sphere S^{dim-1}.
Vector random_unit_vector(std::size_t dim, Rng& rng);

/// Uniform point in the ball of the given radius.
Vector random_in_ball(std::size_t dim, double radius, Rng& rng);

RigidMotion random_motion(std::size_t dim, double translation_scale, Rng& rng);

}  // namespace dramsey
