#include <pybind11/pybind11.h>
PYBIND11_MODULE(_stralg, m) { m.doc() = "placeholder"; }
