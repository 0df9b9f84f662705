#pragma once

#include "domination.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "knodel_graph.hpp"
#include "lemma_suite.hpp"
#include "solver.hpp"
#include "structure.hpp"
#include "table.hpp"
#include "verification.hpp"
