#pragma once

#include <random>
#include <string>

#include "bialg/binfty.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name) { return std::string(BIALG_TEST_DATA) + "/" + name; }

inline bialg::BInftyStructure load(const std::string& name) { return bialg::BInftyStructure::load(data_path(name)); }

inline bialg::TensorElem T(const bialg::Alphabet& a, const char* text) { return a.parse_tensor(text); }

inline bialg::Word W(const bialg::Alphabet& a, const char* text) { return a.parse_word(text); }

inline std::mt19937_64 rng(unsigned long seed) { return std::mt19937_64(seed); }

} // namespace testing_support
