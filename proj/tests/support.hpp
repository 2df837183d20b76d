#pragma once

#include <string_view>

#include "sombor/radical.hpp"

namespace sombor::test {

inline RadicalSum rs(std::string_view text) { return RadicalSum::parse(text); }

}  // namespace sombor::test
