#pragma once

#include "qgame/analysis.hpp"
#include "qgame/channels.hpp"
#include "qgame/cmatrix.hpp"
#include "qgame/density.hpp"
#include "qgame/errors.hpp"
#include "qgame/game.hpp"
#include "qgame/protocol.hpp"
#include "qgame/rng.hpp"
#include "qgame/scenario.hpp"
#include "qgame/validate.hpp"
