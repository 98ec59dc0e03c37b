#pragma once

#include "nacflex/bitset.hpp"
#include "nacflex/budget.hpp"
#include "nacflex/colouring.hpp"
#include "nacflex/cuts.hpp"
#include "nacflex/disjoint_sets.hpp"
#include "nacflex/error.hpp"
#include "nacflex/experiments.hpp"
#include "nacflex/flex.hpp"
#include "nacflex/graph.hpp"
#include "nacflex/graph_io.hpp"
#include "nacflex/nac_oracle.hpp"
#include "nacflex/nac_search.hpp"
#include "nacflex/parallel.hpp"
#include "nacflex/process.hpp"
#include "nacflex/random.hpp"
#include "nacflex/serialise.hpp"
#include "nacflex/stable_nac.hpp"
#include "nacflex/two_sat.hpp"
