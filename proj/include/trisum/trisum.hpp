#ifndef TRISUM_TRISUM_HPP
#define TRISUM_TRISUM_HPP

#include "trisum/bell.hpp"
#include "trisum/bigint.hpp"
#include "trisum/errors.hpp"
#include "trisum/numbers.hpp"
#include "trisum/report.hpp"
#include "trisum/series.hpp"
#include "trisum/verify.hpp"

#endif
