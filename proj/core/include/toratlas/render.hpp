#pragma once

#include <string>
#include <vector>

#include "toratlas/rotation_map.hpp"

namespace toratlas {

// Draws each face as a regular labeled polygon, arranged in rows. Output
// bytes depend only on the input map.
std::string map_to_svg(const RotationMap& m);

// Several maps stacked vertically with captions (used for class listings).
std::string maps_to_svg(const std::vector<RotationMap>& maps,
                        const std::vector<std::string>& captions);

}  // namespace toratlas
