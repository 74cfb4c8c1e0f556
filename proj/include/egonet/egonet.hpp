#pragma once

// Observer-centric community detection: local graph views, walk-based and
// neighborhood rankings, threshold classification, and ROC evaluation.

#include "egonet/classify.hpp"
#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/escape.hpp"
#include "egonet/eval.hpp"
#include "egonet/experiment.hpp"
#include "egonet/graph.hpp"
#include "egonet/heuristics.hpp"
#include "egonet/labels.hpp"
#include "egonet/ppr.hpp"
#include "egonet/sbm.hpp"
#include "egonet/score.hpp"
#include "egonet/serialize.hpp"
