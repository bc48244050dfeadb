#pragma once

#include "sincsum/certify.hpp"
#include "sincsum/constants.hpp"
#include "sincsum/corpus.hpp"
#include "sincsum/dual.hpp"
#include "sincsum/error.hpp"
#include "sincsum/evaluate.hpp"
#include "sincsum/exactpoly.hpp"
#include "sincsum/global_min.hpp"
#include "sincsum/interval.hpp"
#include "sincsum/majorization.hpp"
#include "sincsum/manifest.hpp"
#include "sincsum/proof_chain.hpp"
#include "sincsum/rational.hpp"
#include "sincsum/report.hpp"
#include "sincsum/sinc_core.hpp"
#include "sincsum/specfun.hpp"
#include "sincsum/summation.hpp"
#include "sincsum/trig.hpp"
