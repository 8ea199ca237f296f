#pragma once

#include <string>

#include "qlab/isbell.hpp"

namespace qlab {

// Hasse reduction of the underlying preorder, one cluster per type object.
// ≅-classes are collapsed to single nodes labeled by their canonical
// representative.
std::string dot_of_category(const QCategory& a, const std::string& name);
std::string dot_of_lattice(const FixedPointLattice& lattice);

}  // namespace qlab
