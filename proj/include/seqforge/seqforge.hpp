#ifndef SEQFORGE_SEQFORGE_HPP
#define SEQFORGE_SEQFORGE_HPP

#include "seqforge/conformance.hpp"
#include "seqforge/constructions.hpp"
#include "seqforge/core.hpp"
#include "seqforge/correlation.hpp"
#include "seqforge/gbf.hpp"
#include "seqforge/gcp.hpp"
#include "seqforge/io.hpp"
#include "seqforge/matrix.hpp"
#include "seqforge/verify.hpp"

#endif
