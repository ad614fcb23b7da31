#pragma once

#include "linarr/hs.hpp"
#include "linarr/intervals.hpp"
#include "linarr/metrics.hpp"
#include "linarr/oracle.hpp"
#include "linarr/sizes.hpp"
#include "linarr/tree.hpp"
