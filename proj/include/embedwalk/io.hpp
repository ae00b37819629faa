#pragma once

#include <istream>
#include <string>

#include "embedwalk/coin.hpp"
#include "embedwalk/rotation_system.hpp"

namespace ew {

// Text format:
//   vertices <n>
//   edge <u> <v> <twist>          one per edge
//   rotation <x>: <v1> ... <vd>   one per vertex, cyclic neighbour order
// Blank lines and '#' comments are ignored.
RotationSystem parse_rotation_system(std::istream& in);
RotationSystem parse_rotation_system(const std::string& text);
RotationSystem read_rotation_system(const std::string& path);
std::string write_rotation_system(const RotationSystem& rs);

// "re,im" or a plain real number.
cplx parse_complex(const std::string& text);
std::string format_complex(cplx z);

}  // namespace ew
