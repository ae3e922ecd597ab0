#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_scalform, m)
{
  m.doc() = "scaling-function toolkit bindings";
  m.def("version", [] { return "0.1.0"; });
}
