#ifndef SUBGROWTH_SUBGROWTH_HPP
#define SUBGROWTH_SUBGROWTH_HPP

#include "abelian.hpp"
#include "census.hpp"
#include "characters.hpp"
#include "classes.hpp"
#include "numtheory.hpp"
#include "oracle.hpp"

#endif // SUBGROWTH_SUBGROWTH_HPP
