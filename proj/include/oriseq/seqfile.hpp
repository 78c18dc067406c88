#pragma once

#include "oriseq/core.hpp"

#include <string>

namespace oriseq::seqfile {

/// On-disk sequence format (ASCII, LF line endings, no trailing whitespace):
///
///   q=<int> n=<int> period=<int>
///   <comma-separated symbols>
///   compact=<digit string>            (written only when q <= 10)
///   canonical=<comma-separated least rotation>
///
/// The optional lines must agree with the symbol list when present.
struct SequenceFile {
    RingSequence sequence;
    int n;
};

/// Digit-string rendering; valid only for q <= 10.
std::string compact(const Symbols& symbols);

std::string comma_joined(const Symbols& symbols);

std::string write(const SequenceFile& f);
SequenceFile read(const std::string& text);

SequenceFile read_file(const std::string& path);
void write_file(const std::string& path, const SequenceFile& f);

}  // namespace oriseq::seqfile
