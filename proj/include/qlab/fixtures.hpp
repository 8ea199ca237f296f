#pragma once

#include "qlab/qdist.hpp"

namespace qlab::fixtures {

// The running example: boolean base, discrete contexts {x1,x2} / {y1,y2},
// incidence {(x1,y1),(x1,y2),(x2,y2)}.
struct Ctx {
  QuantaloidPtr q2;
  QCategory A;
  QCategory B;
  QDistributor phi;
};

Ctx ctx();

// Four-element boolean posets encoded as Q2-categories.
QCategory poset_antichain(QuantaloidPtr q2);         // a b c d, no relations
QCategory poset_fence(QuantaloidPtr q2);             // a <= b >= c <= d
QCategory poset_diamond_minus_top(QuantaloidPtr q2); // o below a, b, c

// Discrete category with the given object names, all of the quantaloid's
// first object type unless a type id is supplied.
QCategory discrete(QuantaloidPtr q, const std::vector<std::string>& names,
                   const std::string& type_id = "");

}  // namespace qlab::fixtures
