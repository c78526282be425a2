#pragma once

#include "config.hpp"
#include "csv.hpp"
#include "domain.hpp"
#include "estimate.hpp"
#include "kernel.hpp"
#include "path.hpp"
#include "rng.hpp"
#include "simulate.hpp"
#include "stats.hpp"
#include "vec.hpp"
#include "verify.hpp"
