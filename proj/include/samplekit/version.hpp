#pragma once

#define SAMPLEKIT_VERSION_MAJOR 0
#define SAMPLEKIT_VERSION_MINOR 1
#define SAMPLEKIT_VERSION_PATCH 0
#define SAMPLEKIT_VERSION "0.1.0"
