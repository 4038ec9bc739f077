#pragma once

#include "sline/core/hypergraph.hpp"
#include "sline/core/io.hpp"
#include "sline/generate.hpp"
#include "sline/overlap/overlap.hpp"
#include "sline/postprocess/components.hpp"
#include "sline/postprocess/spectral.hpp"
#include "sline/postprocess/squeeze.hpp"
#include "sline/report.hpp"
#include "sline/scheduling/partition.hpp"
#include "sline/scheduling/relabel.hpp"
#include "sline/scheduling/workload.hpp"
