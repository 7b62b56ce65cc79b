#pragma once

#include "baxter/bench.hpp"
#include "baxter/closed_form.hpp"
#include "baxter/combination.hpp"
#include "baxter/lambda_poly.hpp"
#include "baxter/models/model_check.hpp"
#include "baxter/models/polynomial.hpp"
#include "baxter/models/sequence.hpp"
#include "baxter/numeric.hpp"
#include "baxter/render.hpp"
#include "baxter/rewrite.hpp"
#include "baxter/tree.hpp"
#include "baxter/validate.hpp"
