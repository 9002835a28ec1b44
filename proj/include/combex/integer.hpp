#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace combex {

using Integer = boost::multiprecision::cpp_int;

}  // namespace combex
