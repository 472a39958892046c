// Single implementation TU for the amalgamated Catch2 build.
#include <catch2/catch_amalgamated.cpp>
