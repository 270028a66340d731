#pragma once

#include "characters.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "factorize.hpp"
#include "integer.hpp"
#include "ktheory.hpp"
#include "lfun.hpp"
#include "numtheory.hpp"
#include "polynomial.hpp"
#include "powersum.hpp"
