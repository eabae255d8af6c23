#ifndef LIEPCD_ERRORS_HPP
#define LIEPCD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liepcd {

// Every failure carries a stable machine-readable code; the CLI maps these
// to JSON error objects and exit status 1/2.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what)
      : std::runtime_error(what), code(std::move(c)) {}
};

#define LIEPCD_DEFINE_ERROR(Name)                      \
  struct Name : Error {                                \
    explicit Name(const std::string& what = #Name)     \
        : Error(#Name, what) {}                        \
  }

LIEPCD_DEFINE_ERROR(CompositeP);
LIEPCD_DEFINE_ERROR(DegreeTooLarge);
LIEPCD_DEFINE_ERROR(ZeroPolynomial);
LIEPCD_DEFINE_ERROR(DuplicateAbscissa);
LIEPCD_DEFINE_ERROR(FieldMismatch);
LIEPCD_DEFINE_ERROR(NonSquare);
LIEPCD_DEFINE_ERROR(AxiomViolation);
LIEPCD_DEFINE_ERROR(ModuleAxiomViolation);
LIEPCD_DEFINE_ERROR(DimensionGuard);
LIEPCD_DEFINE_ERROR(NotRestricted);
LIEPCD_DEFINE_ERROR(NotCommutative);
LIEPCD_DEFINE_ERROR(ZeroElement);
LIEPCD_DEFINE_ERROR(DependentPair);
LIEPCD_DEFINE_ERROR(NotAdNilpotent);
LIEPCD_DEFINE_ERROR(WitnessNotFound);
LIEPCD_DEFINE_ERROR(UnknownEntry);
LIEPCD_DEFINE_ERROR(InvalidParams);
LIEPCD_DEFINE_ERROR(MalformedInput);

#undef LIEPCD_DEFINE_ERROR

}  // namespace liepcd

#endif
