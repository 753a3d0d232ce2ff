#pragma once

// Umbrella header for the capacity-urns library.

#include "urns/binomial.hpp"
#include "urns/counting.hpp"
#include "urns/exact.hpp"
#include "urns/oracle.hpp"
#include "urns/probability.hpp"
#include "urns/problem.hpp"
#include "urns/sample.hpp"
#include "urns/verify.hpp"
