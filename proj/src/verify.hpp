#pragma once

#include <functional>
#include <string>

// Desk-scale self-checks of the library invariants, surfaced through the
// CLI `verify` subcommand. Returns the number of failed properties and
// reports one line per property through the sink.

namespace nabscat::verify {

using ReportSink = std::function<void(const std::string&)>;

int run_verification(const ReportSink& sink);

}  // namespace nabscat::verify
