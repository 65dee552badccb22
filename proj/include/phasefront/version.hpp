#pragma once

#define PHASEFRONT_VERSION "0.1.0"
