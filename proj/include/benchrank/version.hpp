#pragma once

#define BENCHRANK_VERSION "1.0.0"
