#pragma once

#include "hiwsd/classifier.hpp"
#include "hiwsd/corpus.hpp"
#include "hiwsd/errors.hpp"
#include "hiwsd/eval.hpp"
#include "hiwsd/features.hpp"
#include "hiwsd/io.hpp"
#include "hiwsd/resources.hpp"
#include "hiwsd/text.hpp"
