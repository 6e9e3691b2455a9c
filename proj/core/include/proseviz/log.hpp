#pragma once

#include <functional>
#include <string_view>

namespace proseviz {

// Diagnostics sink for recoverable problems (provider fallbacks and the like).
// Defaults to stderr; pass an empty function to silence.
void set_log_sink(std::function<void(std::string_view)> sink);
void log_warning(std::string_view message);

}  // namespace proseviz
