#pragma once

#include "sepcx/boundary_study.hpp"
#include "sepcx/checks.hpp"
#include "sepcx/collapse.hpp"
#include "sepcx/complex.hpp"
#include "sepcx/covering.hpp"
#include "sepcx/errors.hpp"
#include "sepcx/graph.hpp"
#include "sepcx/homology.hpp"
#include "sepcx/io.hpp"
#include "sepcx/isomorphism.hpp"
#include "sepcx/report.hpp"
#include "sepcx/separation_complex.hpp"
#include "sepcx/subset.hpp"
