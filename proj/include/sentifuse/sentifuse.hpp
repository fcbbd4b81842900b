#pragma once

// Umbrella header for the whole engine.

#include "sentifuse/error.hpp"
#include "sentifuse/numeric_io.hpp"

#include "sentifuse/core/defaults.hpp"
#include "sentifuse/core/standardize.hpp"
#include "sentifuse/core/text_characteristics.hpp"
#include "sentifuse/core/tokenize.hpp"
#include "sentifuse/core/types.hpp"

#include "sentifuse/models/external.hpp"
#include "sentifuse/models/lexicon.hpp"
#include "sentifuse/models/linear_model.hpp"
#include "sentifuse/models/logistic_regression.hpp"
#include "sentifuse/models/patterns.hpp"
#include "sentifuse/models/registry.hpp"
#include "sentifuse/models/tfidf.hpp"

#include "sentifuse/fusion/fusion.hpp"

#include "sentifuse/training/training.hpp"

#include "sentifuse/eval/curves.hpp"
#include "sentifuse/eval/metrics.hpp"
#include "sentifuse/eval/pipeline.hpp"
#include "sentifuse/eval/split.hpp"

#include "sentifuse/data/dataset.hpp"
#include "sentifuse/data/normalize.hpp"

#include "sentifuse/cli/artifact.hpp"
#include "sentifuse/cli/commands.hpp"
#include "sentifuse/cli/config.hpp"
