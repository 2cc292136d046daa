#pragma once

#include "bounds.hpp"
#include "catalog.hpp"
#include "checks.hpp"
#include "csv.hpp"
#include "errors.hpp"
#include "extension.hpp"
#include "field.hpp"
#include "kernels.hpp"
#include "operators.hpp"
#include "order.hpp"
#include "parallel.hpp"
#include "point.hpp"
#include "quadrature.hpp"
#include "report.hpp"
#include "rules.hpp"
#include "semigroup.hpp"
#include "specfun.hpp"
#include "suites.hpp"
