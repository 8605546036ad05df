#ifndef EBWT_EBWT_HPP
#define EBWT_EBWT_HPP

#include "ebwt/debruijn.hpp"
#include "ebwt/error.hpp"
#include "ebwt/factors.hpp"
#include "ebwt/io.hpp"
#include "ebwt/necklace_semigroups.hpp"
#include "ebwt/semigroup.hpp"
#include "ebwt/transform.hpp"
#include "ebwt/words.hpp"

#endif  // EBWT_EBWT_HPP
