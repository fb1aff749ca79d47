#pragma once

#include "fanohyp/rational.hpp"
#include "fanohyp/weighted_space.hpp"
#include "fanohyp/singularities.hpp"
#include "fanohyp/blowup.hpp"
#include "fanohyp/catalog.hpp"
#include "fanohyp/export.hpp"
#include "fanohyp/inequality.hpp"
#include "fanohyp/golden.hpp"
#include "fanohyp/ledger.hpp"
