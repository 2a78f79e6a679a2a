#pragma once

#include <functional>
#include <string>

namespace qfold {

/// Receives non-fatal findings (for example denominators that do not divide the
/// group order). The default handler writes "qfold: warning: ..." to stderr.
using WarningHandler = std::function<void(const std::string&)>;

/// Installs a handler and returns the previous one. An empty handler silences warnings.
WarningHandler set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace qfold
