#ifndef IWA_HPP
#define IWA_HPP

#include "iwa/errors.hpp"
#include "iwa/padic.hpp"
#include "iwa/action_spec.hpp"
#include "iwa/iw_elem.hpp"
#include "iwa/padic_matrix.hpp"
#include "iwa/layer.hpp"
#include "iwa/weierstrass.hpp"
#include "iwa/serialize.hpp"
#include "iwa/organizing.hpp"
#include "iwa/sign_cert.hpp"
#include "iwa/growth_cert.hpp"
#include "iwa/selfcheck.hpp"
#include "iwa/arith/tau.hpp"
#include "iwa/arith/hecke.hpp"
#include "iwa/arith/curve37a.hpp"
#include "iwa/arith/kronecker.hpp"
#include "iwa/arith/gl2.hpp"
#include "iwa/arith/weight4.hpp"

#endif
