#pragma once

#include <cstddef>

#include "irack/algebra.hpp"

namespace irack {

/// Z/n with labels "0".."n-1".
GroupTable cyclic_group(std::size_t n);

/// S3 as permutations of {1,2,3}; labels e t12 t13 t23 c123 c132.
GroupTable symmetric_group_s3();

}  // namespace irack
