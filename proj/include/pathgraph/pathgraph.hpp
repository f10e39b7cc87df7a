#pragma once

#include "pathgraph/chordal.hpp"
#include "pathgraph/colored_graph.hpp"
#include "pathgraph/coloring.hpp"
#include "pathgraph/generator.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/recognizer.hpp"
#include "pathgraph/selftest.hpp"
#include "pathgraph/separation.hpp"
