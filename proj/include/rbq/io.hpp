#ifndef RBQ_IO_HPP
#define RBQ_IO_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "rbq/inverse.hpp"

namespace rbq {

/// Raised for unreadable or malformed input files; the message carries the
/// file name and the offending key or parse position.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix document: {"m": .., "n": .., "re1": [[..]], "im1"?, "re2"?, "im2"?}
/// with row-major component arrays; omitted components are zero.
RBQMatrix load_matrix_file(const std::filesystem::path& path);
void save_matrix_file(const std::filesystem::path& path, const RBQMatrix& z);

enum class ProblemFamily { Multi, Transpose, Coupled, Pdiep, Gpdiep };

/// Problem document: {"family": "multi"|"transpose"|"coupled"|"pdiep"|"gpdiep", ...}
/// with matrix references resolved relative to the document's directory.
struct LoadedProblem {
    ProblemFamily family;
    std::optional<MultiTermProblem> multi;
    std::optional<TransposeProblem> transpose;
    std::optional<CoupledProblem> coupled;
    std::optional<EigenData> eigendata;   // pdiep / gpdiep
    std::optional<LStructure> structure;  // pdiep / gpdiep
};

LoadedProblem load_problem_file(const std::filesystem::path& path);

} // namespace rbq

#endif
