#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "polarimeter/alienation.hpp"
#include "polarimeter/antagonism.hpp"
#include "polarimeter/distribution.hpp"

namespace polarimeter {

struct ParseOptions {
  /// Combine rows with exactly equal y instead of rejecting them.
  bool merge_duplicates = false;
};

/// Parses CSV (header `pi,y`, one group per row) or JSON (`{"pi": [...],
/// "y": [...]}`, detected by a leading `{`). CSV errors carry the 1-based
/// line number, the header being line 1; validation errors on a CSV are
/// re-raised with the line of the offending row.
Distribution parse_distribution_text(std::string_view text, const ParseOptions& options = {});

/// Throws IoError if the file cannot be read.
Distribution parse_distribution_file(const std::filesystem::path& path,
                                     const ParseOptions& options = {});

/// Header `pi,y`, populations as integers, positions with 17 significant
/// digits so the output re-parses to an identical Distribution.
void write_distribution_csv(std::ostream& out, const Distribution& dist);

/// `linear | power:<r> | poly:<c1>,<c2>,... | exp:<k> | table:<path>`.
/// Table files are CSV with header `d,f`; relative paths resolve against
/// `base_dir`. Throws GrammarError for malformed text; range errors come
/// from the Alienation factories.
Alienation parse_alienation_descriptor(std::string_view text,
                                       const std::filesystem::path& base_dir = {});

/// `alpha=<a>,<descriptor>`, e.g. `alpha=0,linear` or `alpha=1,poly:1,2`.
AntagonismSpec parse_spec_descriptor(std::string_view text,
                                     const std::filesystem::path& base_dir = {});

/// Parses the whole string as a finite number or throws GrammarError
/// naming `what`.
double parse_number(std::string_view text, std::string_view what);

/// %.17g.
std::string format_double(double value);

/// RFC-4180: quoted when the field holds a comma, quote, CR or LF.
std::string csv_field(std::string_view field);

}  // namespace polarimeter
