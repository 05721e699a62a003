#pragma once

#include "errors.hpp"
#include "integer.hpp"
#include "place.hpp"
#include "residue.hpp"
#include "int_poly.hpp"
#include "mod_poly.hpp"
#include "fp_linalg.hpp"
#include "factor_mod_p.hpp"
#include "int_matrix.hpp"
#include "poly_parse.hpp"
#include "sturm.hpp"
#include "irreducibility.hpp"
#include "order.hpp"
#include "number_field.hpp"
#include "splitting.hpp"
#include "invariants.hpp"
#include "padic_form.hpp"
#include "trace_form.hpp"
#include "equivalence.hpp"
#include "json.hpp"
