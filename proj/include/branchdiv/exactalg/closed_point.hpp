#pragma once

#include "branchdiv/exactalg/number_field.hpp"

#include <vector>

namespace branchdiv {

// A Galois orbit of points: coordinates in Q(theta) for one primitive theta.
// Canonical form: the field is generated by the coordinates and theta is the
// first combination in a fixed sequence that generates it, so equal orbits
// compare equal.
struct ClosedPoint {
    FieldPtr field; // null for rational points
    std::vector<FieldElem> coords;

    int degree() const { return field ? field->degree() : 1; }
    UPoly<Rational> minpoly() const;
    int real_points() const;
    int conjugate_pairs() const { return (degree() - real_points()) / 2; }
    bool is_real() const { return real_points() == degree(); }
};

bool operator==(const ClosedPoint& a, const ClosedPoint& b);
inline bool operator!=(const ClosedPoint& a, const ClosedPoint& b) { return !(a == b); }
bool operator<(const ClosedPoint& a, const ClosedPoint& b);

// Degree of Q(coords) inside the common field.
int generated_degree(const std::vector<FieldElem>& coords);

ClosedPoint canonical_affine(const std::vector<FieldElem>& coords);
// Scales so that the first nonzero coordinate is 1.
ClosedPoint canonical_projective(const std::vector<FieldElem>& coords);

// Coordinates of the conjugate point (requires a declared conjugation unless rational).
std::vector<FieldElem> conjugate(const std::vector<FieldElem>& coords);

} // namespace branchdiv
