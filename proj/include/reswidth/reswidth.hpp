#pragma once

#include "reswidth/cnf.hpp"
#include "reswidth/error.hpp"
#include "reswidth/generators.hpp"
#include "reswidth/graph.hpp"
#include "reswidth/literal.hpp"
#include "reswidth/measure.hpp"
#include "reswidth/negation.hpp"
#include "reswidth/normalize.hpp"
#include "reswidth/oracle.hpp"
#include "reswidth/rdnf.hpp"
#include "reswidth/trace.hpp"
#include "reswidth/trace_io.hpp"
#include "reswidth/transform.hpp"
