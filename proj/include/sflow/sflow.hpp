#pragma once

#include "sflow/bounds.hpp"
#include "sflow/catalog.hpp"
#include "sflow/classifier.hpp"
#include "sflow/errors.hpp"
#include "sflow/family.hpp"
#include "sflow/modes.hpp"
#include "sflow/parallel.hpp"
#include "sflow/polynomial.hpp"
#include "sflow/rational.hpp"
#include "sflow/spectral_flow.hpp"
#include "sflow/sweep.hpp"
#include "sflow/symbolic.hpp"
#include "sflow/weight.hpp"
#include "sflow/weight_domain.hpp"
