#pragma once

/**
 * @file instances.hpp
 * @brief The exact-arithmetic trusses 2Z+1, O(x), O(i) and T_n(Z).
 */

#include "trusskit/instances/odd_gauss.hpp"
#include "trusskit/instances/odd_int.hpp"
#include "trusskit/instances/odd_matrix.hpp"
#include "trusskit/instances/odd_poly.hpp"
