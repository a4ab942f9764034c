#include "slicegb/rational_function.hpp"

#include "detail/groebner_engine.ipp"

SLICEGB_INSTANTIATE_GROEBNER(slicegb::RationalFunction)
