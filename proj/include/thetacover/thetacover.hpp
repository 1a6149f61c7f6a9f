#pragma once

#include "thetacover/certificate.hpp"
#include "thetacover/exact.hpp"
#include "thetacover/graph.hpp"
#include "thetacover/ideal.hpp"
#include "thetacover/json_io.hpp"
#include "thetacover/linalg.hpp"
#include "thetacover/moment.hpp"
#include "thetacover/polynomial.hpp"
#include "thetacover/rational.hpp"
#include "thetacover/sdp.hpp"
#include "thetacover/solve.hpp"
#include "thetacover/varset.hpp"
#include "thetacover/version.hpp"
