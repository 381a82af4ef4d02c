#pragma once

#include "spinlab/clifford.hpp"
#include "spinlab/curvature.hpp"
#include "spinlab/flag_geometry.hpp"
#include "spinlab/forms.hpp"
#include "spinlab/io.hpp"
#include "spinlab/partially_pure.hpp"
#include "spinlab/report.hpp"
#include "spinlab/rng.hpp"
#include "spinlab/spin_group.hpp"
#include "spinlab/spinor.hpp"
#include "spinlab/structured_op.hpp"
#include "spinlab/suites.hpp"
#include "spinlab/torus.hpp"
#include "spinlab/twisted_spinor.hpp"
