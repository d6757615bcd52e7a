#pragma once

#include "algorithms.hpp"
#include "analyzer.hpp"
#include "errors.hpp"
#include "experiment.hpp"
#include "format.hpp"
#include "functions.hpp"
#include "problem.hpp"
#include "reader.hpp"
#include "registry.hpp"
#include "suite.hpp"
#include "transform.hpp"
#include "trigger.hpp"
