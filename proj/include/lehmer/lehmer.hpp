#ifndef LEHMER_LEHMER_HPP
#define LEHMER_LEHMER_HPP

#include "closed_forms.hpp"
#include "error_analysis.hpp"
#include "exact.hpp"
#include "gamma_ratio.hpp"
#include "hp_real.hpp"
#include "lehmer_limit.hpp"
#include "power_series.hpp"
#include "quadrature.hpp"

#endif
