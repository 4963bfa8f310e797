#pragma once

#include "analysis.hpp"
#include "circuit.hpp"
#include "errors.hpp"
#include "gates.hpp"
#include "simulate.hpp"
#include "synth.hpp"
#include "textio.hpp"
