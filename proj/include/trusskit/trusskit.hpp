#pragma once

/**
 * @file trusskit.hpp
 * @brief Everything except the command line.
 */

#include "trusskit/catalogue.hpp"
#include "trusskit/core.hpp"
#include "trusskit/domain.hpp"
#include "trusskit/effective.hpp"
#include "trusskit/error.hpp"
#include "trusskit/group.hpp"
#include "trusskit/heap.hpp"
#include "trusskit/instances.hpp"
#include "trusskit/io.hpp"
#include "trusskit/ore.hpp"
#include "trusskit/paragon.hpp"
#include "trusskit/pretruss.hpp"
