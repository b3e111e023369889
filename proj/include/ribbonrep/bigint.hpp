#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbonrep {

// Character values grow factorially; all exact counts use an
// arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

}  // namespace ribbonrep
