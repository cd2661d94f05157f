#pragma once

#include "plcp/automata.hpp"
#include "plcp/bitsource.hpp"
#include "plcp/cfrac.hpp"
#include "plcp/field.hpp"
#include "plcp/hankel.hpp"
#include "plcp/lincomplex.hpp"
#include "plcp/poly.hpp"
#include "plcp/seqgen.hpp"
#include "plcp/seqio.hpp"
#include "plcp/sequence.hpp"
#include "plcp/series.hpp"
#include "plcp/verify.hpp"
