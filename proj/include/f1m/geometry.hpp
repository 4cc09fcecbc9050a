#pragma once

#include "f1m/plasma.hpp"
#include "f1m/report.hpp"

namespace f1m {

/// The discrete combinatorial projective geometry on points {1..n}: three
/// points are collinear exactly when at most two of them are distinct, so
/// every line is just its pair of defining points.
struct DiscreteGeometry {
  int n = 1;
};

bool collinear(const DiscreteGeometry& g, int x, int y, int z);

/// {z : (z,x,y) collinear} for x != y, {x} for x = y; unpointed mask.
Mask line_hyperop(const DiscreteGeometry& g, int x, int y);

/// Subspace closure of an unpointed subset; the identity for the discrete
/// relation (every subset is a subspace).
Mask closure_unpointed(const DiscreteGeometry& g, Mask a);

/// Closure after freely adjoining the loop 0: empty stays empty, otherwise
/// close away from 0 and put 0 back in. Pointed masks over {0..n}.
Mask closure_pointed(const DiscreteGeometry& g, Mask a);

/// The plasma of the pointed geometry on carrier <n>: x+x = {0,x} (the
/// pointed closure of a point), x+y empty for distinct nonzero points, and
/// 0 a weak identity.
Plasma mosaic_plasma(const DiscreteGeometry& g);

/// Full pipeline check for one n: the mosaic equals the canonical n-fold
/// wedge of K on the nose, and an isomorphism search finds a bijection.
CheckResult verify_projective(int n);  // n <= 8

}  // namespace f1m
