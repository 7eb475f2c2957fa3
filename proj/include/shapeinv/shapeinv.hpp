#ifndef SHAPEINV_SHAPEINV_HPP
#define SHAPEINV_SHAPEINV_HPP

#include "bigint.hpp"
#include "decompose.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "jump.hpp"
#include "knuth.hpp"
#include "minimal.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

#endif  // SHAPEINV_SHAPEINV_HPP
