#pragma once

#include "girthforge/graph.hpp"
#include "girthforge/cycles.hpp"
#include "girthforge/random.hpp"
#include "girthforge/edge_list.hpp"
#include "girthforge/generators.hpp"
#include "girthforge/partition.hpp"
#include "girthforge/hosts.hpp"
#include "girthforge/coloring.hpp"
#include "girthforge/report.hpp"
#include "girthforge/edge_extract.hpp"
#include "girthforge/degree_extract.hpp"
#include "girthforge/oracle.hpp"
#include "girthforge/sweep.hpp"
