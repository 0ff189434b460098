#pragma once

#include "phom/complex.hpp"
#include "phom/errors.hpp"
#include "phom/field.hpp"
#include "phom/homology.hpp"
#include "phom/metric_space.hpp"
#include "phom/oracle.hpp"
#include "phom/pairs_file.hpp"
#include "phom/persistence.hpp"
#include "phom/pipeline.hpp"
#include "phom/svg.hpp"
