#pragma once

#include "hblab/checks.hpp"
#include "hblab/decomposition.hpp"
#include "hblab/disk_core.hpp"
#include "hblab/hb_space.hpp"
#include "hblab/parallel.hpp"
#include "hblab/pythagorean_pairs.hpp"
#include "hblab/toeplitz_lab.hpp"
