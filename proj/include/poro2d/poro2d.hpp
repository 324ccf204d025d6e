#pragma once

#include "poro2d/common.hpp"
#include "poro2d/material.hpp"
#include "poro2d/complex_kernel.hpp"
#include "poro2d/linear_solve.hpp"
#include "poro2d/interface_system.hpp"
#include "poro2d/cagniard.hpp"
#include "poro2d/greens.hpp"
#include "poro2d/source_conv.hpp"
#include "poro2d/config.hpp"
#include "poro2d/campaign.hpp"
#include "poro2d/validation.hpp"
