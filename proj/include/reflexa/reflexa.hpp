#ifndef REFLEXA_REFLEXA_HPP
#define REFLEXA_REFLEXA_HPP

// Exact computation of duals, biduals, transposes, minimal free resolutions,
// Betti numbers and Ext lengths for finitely generated modules over artinian
// local quotient algebras, with tri-state certification of the reflexivity
// hierarchy and a reproducible verification corpus.

#include "reflexa/algebra.hpp"
#include "reflexa/classify.hpp"
#include "reflexa/corpus.hpp"
#include "reflexa/errors.hpp"
#include "reflexa/fp.hpp"
#include "reflexa/groebner.hpp"
#include "reflexa/hom.hpp"
#include "reflexa/linalg.hpp"
#include "reflexa/module.hpp"
#include "reflexa/monomial.hpp"
#include "reflexa/parse.hpp"
#include "reflexa/poly.hpp"
#include "reflexa/random_modules.hpp"
#include "reflexa/rational.hpp"
#include "reflexa/report.hpp"
#include "reflexa/resolution.hpp"
#include "reflexa/spec_io.hpp"
#include "reflexa/verdict.hpp"

#endif
