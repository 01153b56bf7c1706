#ifndef MSSKIT_MSSKIT_HPP
#define MSSKIT_MSSKIT_HPP

#include "msskit/symbolic.hpp"
#include "msskit/structure.hpp"
#include "msskit/generators.hpp"
#include "msskit/composition.hpp"
#include "msskit/counting.hpp"
#include "msskit/locator.hpp"

#endif  // MSSKIT_MSSKIT_HPP
