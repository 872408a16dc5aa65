#include "lefcert/errors.hpp"

namespace lefcert {

const char* err_name(Err code) {
  switch (code) {
    case Err::EulerMismatch: return "EulerMismatch";
    case Err::BoundaryMismatch: return "BoundaryMismatch";
    case Err::Disconnected: return "Disconnected";
    case Err::EmptyCurveSet: return "EmptyCurveSet";
    case Err::HomologyInconsistent: return "HomologyInconsistent";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NonPrimitiveCurveClass: return "NonPrimitiveCurveClass";
    case Err::MissingHomologyData: return "MissingHomologyData";
    case Err::MatrixNotSymplectic: return "MatrixNotSymplectic";
    case Err::InvalidCounts: return "InvalidCounts";
    case Err::ParityMismatch: return "ParityMismatch";
    case Err::NegativeBetti: return "NegativeBetti";
    case Err::UnknownInequalityId: return "UnknownInequalityId";
    case Err::ParameterOutOfRange: return "ParameterOutOfRange";
    case Err::GenusTooSmall: return "GenusTooSmall";
    case Err::NotSemistable: return "NotSemistable";
    case Err::TrivialPencil: return "TrivialPencil";
    case Err::InvalidPartition: return "InvalidPartition";
    case Err::BaseSphereNoCover: return "BaseSphereNoCover";
    case Err::FlagConflict: return "FlagConflict";
    case Err::SchemaError: return "SchemaError";
    case Err::Overflow: return "Overflow";
  }
  return "UnknownError";
}

}  // namespace lefcert
