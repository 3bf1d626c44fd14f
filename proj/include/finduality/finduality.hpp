#pragma once

#include "finduality/error.hpp"
#include "finduality/bitset.hpp"
#include "finduality/poset.hpp"
#include "finduality/lattice.hpp"
#include "finduality/congruence.hpp"
#include "finduality/pervin.hpp"
#include "finduality/enumerate.hpp"
#include "finduality/frith.hpp"
#include "finduality/bitop.hpp"
#include "finduality/characterization.hpp"
#include "finduality/laws.hpp"
#include "finduality/duality.hpp"
#include "finduality/adjunctions.hpp"
#include "finduality/io.hpp"
#include "finduality/dot.hpp"
#include "finduality/suite.hpp"
