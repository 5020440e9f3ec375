#pragma once

// Umbrella header for the genera library.

#include "genera/bundle.hpp"
#include "genera/catalog.hpp"
#include "genera/character_expr.hpp"
#include "genera/genus.hpp"
#include "genera/laurent.hpp"
#include "genera/localization.hpp"
#include "genera/manifold_io.hpp"
#include "genera/multipoly.hpp"
#include "genera/partition.hpp"
#include "genera/pontryagin.hpp"
#include "genera/qseries.hpp"
#include "genera/rational.hpp"
#include "genera/rational_func.hpp"
