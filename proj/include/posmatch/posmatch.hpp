#pragma once

#include "posmatch/baseline_lsb.hpp"
#include "posmatch/bitstream.hpp"
#include "posmatch/errors.hpp"
#include "posmatch/extractor.hpp"
#include "posmatch/image.hpp"
#include "posmatch/matcher.hpp"
#include "posmatch/metrics.hpp"
#include "posmatch/posfile.hpp"
