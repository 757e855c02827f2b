#ifndef KEMENY_KEMENY_HPP
#define KEMENY_KEMENY_HPP

#include "kemeny/dataset.hpp"
#include "kemeny/distributions.hpp"
#include "kemeny/errors.hpp"
#include "kemeny/estimators.hpp"
#include "kemeny/inference.hpp"
#include "kemeny/rank_score.hpp"
#include "kemeny/report_json.hpp"
#include "kemeny/rng.hpp"
#include "kemeny/score_matrix.hpp"
#include "kemeny/simulate.hpp"

#endif  // KEMENY_KEMENY_HPP
