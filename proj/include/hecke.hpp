#pragma once

#include "hecke/alexlimit.hpp"
#include "hecke/chartable_cache.hpp"
#include "hecke/combinatorics.hpp"
#include "hecke/errors.hpp"
#include "hecke/fraction.hpp"
#include "hecke/hecke.hpp"
#include "hecke/laurent.hpp"
#include "hecke/lmov.hpp"
#include "hecke/number.hpp"
#include "hecke/numeric.hpp"
#include "hecke/report.hpp"
#include "hecke/torus.hpp"
#include "hecke/zbasis.hpp"
