#pragma once

#include "mmkde/baselines.hpp"
#include "mmkde/catalog.hpp"
#include "mmkde/errors.hpp"
#include "mmkde/estimator.hpp"
#include "mmkde/io.hpp"
#include "mmkde/meijer.hpp"
#include "mmkde/mellin.hpp"
#include "mmkde/quadrature.hpp"
#include "mmkde/rng.hpp"
#include "mmkde/sample.hpp"
#include "mmkde/selector.hpp"
#include "mmkde/simlab.hpp"
#include "mmkde/specfun.hpp"
