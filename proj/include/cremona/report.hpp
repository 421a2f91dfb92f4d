#pragma once

#include "cremona/runner.hpp"

namespace cremona {

/* Human-readable rendering. */
std::string to_text(const VerificationReport& rep);
std::string to_text(const ErrataReport& rep);
std::string to_text(const SuiteReport& rep);

/* Machine-readable rendering with stable key order. */
std::string to_json_like(const VerificationReport& rep);
std::string to_json_like(const ErrataReport& rep);
std::string to_json_like(const SuiteReport& rep);

void zero_durations(VerificationReport& rep);
void zero_durations(ErrataReport& rep);
void zero_durations(SuiteReport& rep);

/* Write a report to `path` in "text" or "json-like" format.  Durations are
 * normalized to zero so identical inputs and seed give byte-identical
 * files. */
void save_report(const SuiteReport& rep, const std::string& path,
                 const std::string& format);

} // namespace cremona
