#pragma once

#include "monocomp/adversarial.hpp"
#include "monocomp/arborescence.hpp"
#include "monocomp/audits.hpp"
#include "monocomp/block_partition.hpp"
#include "monocomp/bounds.hpp"
#include "monocomp/color_hamilton.hpp"
#include "monocomp/color_kout.hpp"
#include "monocomp/cycles.hpp"
#include "monocomp/density.hpp"
#include "monocomp/digraph.hpp"
#include "monocomp/edge_coloring.hpp"
#include "monocomp/errors.hpp"
#include "monocomp/euler.hpp"
#include "monocomp/experiment.hpp"
#include "monocomp/generators.hpp"
#include "monocomp/hamilton.hpp"
#include "monocomp/majority.hpp"
#include "monocomp/mono_stats.hpp"
#include "monocomp/multigraph.hpp"
#include "monocomp/rng.hpp"
#include "monocomp/union_find.hpp"
