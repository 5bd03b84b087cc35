#pragma once

#include <string>

#include "odz/matrix.hpp"

namespace odz {

// {"n": 4, "entries": [["1/2^1", ...], ...]}
std::string matrix_to_json(const DyadicMatrix& m);
DyadicMatrix matrix_from_json(const std::string& text);

// {"n": 2, "k": 1, "integral": [[1,1],[1,-1]]}
std::string scaled_to_json(const ScaledMatrix& s);
ScaledMatrix scaled_from_json(const std::string& text);

}  // namespace odz
