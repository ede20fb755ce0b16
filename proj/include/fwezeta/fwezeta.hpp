/*
   Copyright 2026 The fwe-zeta Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FWEZETA_FWEZETA_HPP
#define FWEZETA_FWEZETA_HPP

#include "analysis.hpp"
#include "enumerator_io.hpp"
#include "fwe.hpp"
#include "homogeneous_poly.hpp"
#include "linear_solve.hpp"
#include "quad_rational.hpp"
#include "rational.hpp"
#include "regression.hpp"
#include "roots.hpp"
#include "uni_poly.hpp"
#include "zeta.hpp"

#endif  // FWEZETA_FWEZETA_HPP
