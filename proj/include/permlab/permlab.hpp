#pragma once

#include "permlab/bounds.hpp"
#include "permlab/btgraph.hpp"
#include "permlab/distance.hpp"
#include "permlab/error.hpp"
#include "permlab/graph.hpp"
#include "permlab/moves.hpp"
#include "permlab/permutation.hpp"
#include "permlab/rank.hpp"
#include "permlab/toric.hpp"
#include "permlab/verify.hpp"
