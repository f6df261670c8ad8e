#pragma once

#include <string>
#include <vector>

#include "tfca/context.hpp"
#include "tfca/triadic.hpp"

namespace tfca {

// Line diagram of the concept set (must be the full, canonically sorted
// lattice of ctx). Edges run lower -> upper; labels are reduced: an
// attribute sits at the largest concept carrying it, an object at the
// smallest.
std::string lattice_dot(const formal_context& ctx,
                        const std::vector<formal_concept>& concepts,
                        const std::vector<std::pair<std::size_t, std::size_t>>& covers);

// The three quotient diagrams of one tri-concept set, one cluster per axis.
std::string quotient_dot(const triadic_context& k,
                         const std::vector<tri_concept>& concepts);

}  // namespace tfca
