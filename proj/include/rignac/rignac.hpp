#pragma once

#include "rignac/canonical.hpp"
#include "rignac/catalog.hpp"
#include "rignac/colouring.hpp"
#include "rignac/constructions.hpp"
#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/gsc.hpp"
#include "rignac/io.hpp"
#include "rignac/nac.hpp"
#include "rignac/nac_construct.hpp"
#include "rignac/pebble_game.hpp"
#include "rignac/rigidity.hpp"
#include "rignac/stable_cut.hpp"
#include "rignac/structure.hpp"
#include "rignac/union_find.hpp"
