#pragma once

#include "sympow/alpha.hpp"
#include "sympow/errors.hpp"
#include "sympow/factorization.hpp"
#include "sympow/generator_set.hpp"
#include "sympow/graph.hpp"
#include "sympow/ideals.hpp"
#include "sympow/invariants.hpp"
#include "sympow/lp.hpp"
#include "sympow/monomial.hpp"
#include "sympow/oracle.hpp"
#include "sympow/rational.hpp"
#include "sympow/serialize.hpp"
