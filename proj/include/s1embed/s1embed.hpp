#pragma once

#include "exactnum.hpp"
#include "upoly.hpp"
#include "poly.hpp"
#include "poly_io.hpp"
#include "laurent.hpp"
#include "algebra/divide.hpp"
#include "algebra/gcd.hpp"
#include "algebra/resultant.hpp"
#include "algebra/rewrite.hpp"
#include "algebra/coordpair.hpp"
#include "algebra/zfactor.hpp"
#include "algebra/qfactor.hpp"
#include "algebra/irreducible.hpp"
#include "classification/check.hpp"
#include "classification/family.hpp"
#include "classification/identities.hpp"
#include "classification/sporadic.hpp"
#include "classification/probes.hpp"
#include "torus.hpp"
#include "suite.hpp"
#include "version.hpp"
