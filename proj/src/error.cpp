#include "voxelseg/error.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace voxelseg {

namespace {

std::mutex g_handler_mutex;
WarningHandler g_handler; // empty -> stderr default

} // namespace

WarningHandler set_warning_handler(WarningHandler handler)
{
    std::lock_guard<std::mutex> lock(g_handler_mutex);
    WarningHandler previous = std::move(g_handler);
    g_handler = std::move(handler);
    return previous;
}

void warn(const std::string& message)
{
    WarningHandler handler;
    {
        std::lock_guard<std::mutex> lock(g_handler_mutex);
        handler = g_handler;
    }
    if (handler)
        handler(message);
    else
        std::cerr << "voxelseg: warning: " << message << "\n";
}

} // namespace voxelseg
