// Copyright 2026 The lpn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <lpn/dynamics.hpp>
#include <lpn/entanglement.hpp>
#include <lpn/fock.hpp>
#include <lpn/linalg.hpp>
#include <lpn/observables.hpp>
#include <lpn/scenarios.hpp>
#include <lpn/states.hpp>
