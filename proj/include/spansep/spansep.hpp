#ifndef SPANSEP_SPANSEP_HPP
#define SPANSEP_SPANSEP_HPP

#include "spansep/cgmz.hpp"
#include "spansep/experiment.hpp"
#include "spansep/fractal.hpp"
#include "spansep/generators.hpp"
#include "spansep/graph.hpp"
#include "spansep/greedy.hpp"
#include "spansep/io.hpp"
#include "spansep/metric.hpp"
#include "spansep/net_tree.hpp"
#include "spansep/oracle.hpp"
#include "spansep/separator.hpp"
#include "spansep/wspd.hpp"

#endif  // SPANSEP_SPANSEP_HPP
