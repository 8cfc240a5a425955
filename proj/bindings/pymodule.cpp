#include <pybind11/pybind11.h>
PYBIND11_MODULE(hubsolve_py, m) { m.doc() = "placeholder"; }
