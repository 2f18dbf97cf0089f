#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "koszul/algebra.hpp"
#include "koszul/quiver.hpp"
#include "koszul/scalar.hpp"

namespace testutil {

using Q = koszul::Rational;

inline std::string read_data_file(const std::string& name) {
    std::ifstream in(std::string(KOSZUL_DATA_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing data file " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline koszul::Presentation<Q> load_presentation(const std::string& name) {
    return koszul::parse_presentation<Q>(read_data_file(name));
}

inline koszul::GradedAlgebra<Q>::Ptr load_algebra(const std::string& name, int bound = -1) {
    return koszul::GradedAlgebra<Q>::build(load_presentation(name), bound);
}

}  // namespace testutil
