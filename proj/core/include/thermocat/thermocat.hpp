#pragma once

#include "thermocat/alpha.hpp"
#include "thermocat/catalysis.hpp"
#include "thermocat/channels.hpp"
#include "thermocat/correlated.hpp"
#include "thermocat/divergences.hpp"
#include "thermocat/error.hpp"
#include "thermocat/ext_real.hpp"
#include "thermocat/free_energy.hpp"
#include "thermocat/gibbs.hpp"
#include "thermocat/io.hpp"
#include "thermocat/majorization.hpp"
#include "thermocat/prob_dist.hpp"
