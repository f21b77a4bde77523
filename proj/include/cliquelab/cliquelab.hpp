#pragma once

#include "cliquelab/bounds.hpp"
#include "cliquelab/cliques.hpp"
#include "cliquelab/combinatorics.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/generators.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/graph_io.hpp"
#include "cliquelab/lagrangian.hpp"
#include "cliquelab/parallel.hpp"
#include "cliquelab/rng.hpp"
#include "cliquelab/serialize.hpp"
#include "cliquelab/spectral.hpp"
#include "cliquelab/stability.hpp"
