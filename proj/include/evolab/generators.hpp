#pragma once

#include <string>

#include "evolab/geometry.hpp"
#include "evolab/rng.hpp"
#include "evolab/smooth.hpp"

namespace evolab::gen {

using geom::Polygon;

// theta sampled uniformly on the positive simplex scaled to 2pi (total
// turning 1), p uniform in [-1, 1]; resamples while min theta < 0.01 rad
// to keep cot/csc terms well conditioned
Polygon random_ngon(int n, SplitMix64& rng);

// random_ngon post-projected to the zero-quasiperimeter hyperplane (odd n)
Polygon random_zero_qp(int n, SplitMix64& rng);

// theta = 2pi/n, random base direction, p uniform in [-1, 1]
Polygon random_equiangular(int n, SplitMix64& rng);

// equiangular with zero perimeter (support numbers sum to zero); even n
// additionally has the alternating sum removed (both side-length sums zero)
Polygon random_equiangular_zero_perimeter(int n, SplitMix64& rng);

// convex hedgehog: random_ngon with the support shifted until all side
// lengths are positive
Polygon random_convex(int n, SplitMix64& rng);

// zero-mean trig polynomial with harmonics 2..max_k, coefficients in [-1, 1]
smooth::SupportPoly random_support_poly(int max_k, SplitMix64& rng);

// "name:n" spec, e.g. "random-ngon:6"; throws Error on unknown name
Polygon from_spec(const std::string& spec, SplitMix64& rng);

}  // namespace evolab::gen
