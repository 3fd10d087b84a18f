#pragma once

#include "eqnorm/errors.hpp"
#include "eqnorm/group.hpp"
#include "eqnorm/gset.hpp"
#include "eqnorm/indexing.hpp"
#include "eqnorm/io.hpp"
#include "eqnorm/lattice.hpp"
#include "eqnorm/norm.hpp"
#include "eqnorm/presets.hpp"
#include "eqnorm/rational.hpp"
#include "eqnorm/rep.hpp"
#include "eqnorm/span.hpp"
#include "eqnorm/workspace.hpp"
