#pragma once

#include <stdexcept>
#include <string>

namespace novelty {

// Thrown by kl_numeric when the quadrature self-check cannot certify the
// requested tolerance (window too narrow or grid too coarse). Carries the
// estimated residual so callers can report how far off the run was.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Requested the gain-curve intersection of two uncertainties that never cross.
class no_crossover_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Wundt-curve parameters cannot produce the requested quantity (no
// positive-to-negative valence crossing, or the arousal floor exceeds it).
class wundt_shape_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// File output failure; message carries the destination path.
class io_error : public std::runtime_error {
public:
    io_error(const std::string& path, const std::string& detail)
        : std::runtime_error("I/O error for '" + path + "': " + detail), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace novelty
