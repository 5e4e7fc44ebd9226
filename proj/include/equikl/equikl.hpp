#pragma once
/* Umbrella header: the whole library in one include. */

#include "cache.hpp"
#include "closed_forms.hpp"
#include "equivariant.hpp"
#include "errors.hpp"
#include "gamma.hpp"
#include "json_io.hpp"
#include "kl.hpp"
#include "lr.hpp"
#include "matroid.hpp"
#include "partition.hpp"
#include "rep.hpp"
#include "text.hpp"
#include "util.hpp"
#include "verify.hpp"
#include "young.hpp"
