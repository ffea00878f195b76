#ifndef LDERLAB_VARIETIES_HPP
#define LDERLAB_VARIETIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "lderlab/algebra.hpp"

namespace lderlab {

enum class VarietyTag {
  associative,
  commutative,
  anticommutative,
  lie,
  malcev,
  jordan,
  right_alternative,
  minus_one_one,
  flexible,
  noncommutative_jordan,
  zinbiel,
  malcev_admissible,
};

std::string variety_tag_name(VarietyTag tag);
std::optional<VarietyTag> variety_tag_from_name(const std::string& name);
std::vector<VarietyTag> all_variety_tags();

// (xy)z - x(yz)
Vec associator(const Algebra& a, const Vec& x, const Vec& y, const Vec& z);

/*
 * Identity membership test. Non-multilinear defining identities are checked
 * through their full linearizations, which over a field of characteristic
 * zero hold for all elements iff the originals do; basis tuples then
 * suffice. The linearizations used:
 *
 *   malcev     J(x,y,[x,z]) = [J(x,y,z),x], quadratic in x; replacing
 *              x -> x1 + x2 and dropping the pure terms leaves
 *              J(x1,y,[x2,z]) + J(x2,y,[x1,z]) = [J(x1,y,z),x2] + [J(x2,y,z),x1].
 *   jordan     (x^2 y)x = x^2(yx), cubic in x; with f(a,b,c;y) = ((ab)y)c - (ab)(yc)
 *              the polarization is  sum over permutations s of {a,b,c} of
 *              f(s(a),s(b),s(c);y) = 0.
 *   right alt  (x,y,y) = 0, quadratic in y: (x,y1,y2) + (x,y2,y1) = 0.
 *   flexible   (x,y,x) = 0, quadratic in x: (x1,y,x2) + (x2,y,x1) = 0.
 *   ncj        flexible + the jordan polarization (commutativity not assumed).
 *
 * The second (-1,1) identity (x,y,z) + (z,x,y) + (y,z,x) = 0 is multilinear
 * and checked as printed. The returned witness is the first violating basis
 * tuple in lexicographic order.
 */
std::pair<bool, std::optional<std::vector<int>>> satisfies(const Algebra& a, VarietyTag tag);

// x o y = 1/2 (xy + yx); commutative by construction.
Algebra plus_algebra(const Algebra& a);

// [x, y] = xy - yx; anticommutative by construction.
Algebra minus_algebra(const Algebra& a);

// x .l y = l x y + (1 - l) y x.
Algebra mutation(const Algebra& a, const Rational& lambda);

}  // namespace lderlab

#endif
