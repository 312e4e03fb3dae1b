#pragma once

#include "ratcat/config.hpp"
#include "ratcat/json_io.hpp"
#include "ratcat/lattice.hpp"
#include "ratcat/polynomial.hpp"
#include "ratcat/rank_word.hpp"
#include "ratcat/statistics.hpp"
#include "ratcat/three_n.hpp"
#include "ratcat/verify.hpp"
