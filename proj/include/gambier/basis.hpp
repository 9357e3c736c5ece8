#pragma once

#include "gambier/field.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gambier {

// Named fields on the punctured (x, v) plane:
//   Y1..Y11   Gambier decomposition basis plus the scaling field x d/dx
//   Y12..Y17  extension closing the second scheme
//   X1..X8    the sl(3,R) algebra behind second-order Riccati systems
//   Z1..Z6    the distinguished combinations of the X's
// Throws UnknownIdentifier for anything else.
PlaneField basis(std::string_view id);

// W1..W4 on the (y, v_y, a_y) space of the order-3 linear system.
LinearField basis_linear(std::string_view id);

// Exact coordinates of one plane field: pairs (id, coefficient).
PlaneField combine(const std::vector<std::pair<std::string, Rat>>& terms);

namespace spaces {

std::vector<PlaneField> VG();        // Y1..Y11
std::vector<PlaneField> WG();        // Y4, Y8, Y11
std::vector<PlaneField> VG_prime();  // Y1..Y17
std::vector<PlaneField> sl3();       // X1..X8
std::vector<PlaneField> V1();        // Z1, Z3, Z1+Z5, Z6
std::vector<PlaneField> sl2_triple();  // Z1+Z5, Z3-Z4, Z2

// Kummer-Schwarz Vessiot-Guldberg algebra 2Y8, Y11+2Y4, Y1+3/2 Y2-2c0 Y6.
std::vector<PlaneField> ks2_algebra(const Rat& c0);

std::vector<LineField> abel_W();  // d/dx, x d/dx
std::vector<LineField> abel_V();  // d/dx, x d/dx, x^2 d/dx, x^3 d/dx

}  // namespace spaces

}  // namespace gambier
