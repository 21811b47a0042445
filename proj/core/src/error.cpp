#include "mpanf/error.hpp"

namespace mpanf {

std::string_view to_string(ErrorCode code) noexcept {
	switch (code) {
	case ErrorCode::SeriesTooShort:
		return "SeriesTooShort";
	case ErrorCode::DegenerateSeries:
		return "DegenerateSeries";
	case ErrorCode::SplitTooSmall:
		return "SplitTooSmall";
	case ErrorCode::InvalidSeries:
		return "InvalidSeries";
	case ErrorCode::FileNotFound:
		return "FileNotFound";
	case ErrorCode::ParseError:
		return "ParseError";
	case ErrorCode::DuplicateDate:
		return "DuplicateDate";
	case ErrorCode::NoPriorExogenousValue:
		return "NoPriorExogenousValue";
	case ErrorCode::LengthMismatch:
		return "LengthMismatch";
	case ErrorCode::MissingPredictions:
		return "MissingPredictions";
	case ErrorCode::SingularDesign:
		return "SingularDesign";
	case ErrorCode::NonConvergent:
		return "NonConvergent";
	case ErrorCode::ZeroActual:
		return "ZeroActual";
	case ErrorCode::ZeroPair:
		return "ZeroPair";
	case ErrorCode::BadDistribution:
		return "BadDistribution";
	case ErrorCode::TooFewSteps:
		return "TooFewSteps";
	case ErrorCode::InvalidConfig:
		return "InvalidConfig";
	case ErrorCode::IoError:
		return "IoError";
	}
	return "Unknown";
}

} // namespace mpanf
