#ifndef SOSF_SOSF_HPP
#define SOSF_SOSF_HPP

#include "sosf/bounds.hpp"
#include "sosf/buchberger.hpp"
#include "sosf/division.hpp"
#include "sosf/field.hpp"
#include "sosf/io.hpp"
#include "sosf/monomial.hpp"
#include "sosf/polynomial.hpp"
#include "sosf/search.hpp"
#include "sosf/sos_ideal.hpp"
#include "sosf/zeta.hpp"

#endif
