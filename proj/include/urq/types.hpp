#pragma once

#include <Eigen/Core>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace urq {

/// Landmark sets and polygon walks are 2xN matrices; columns are points.
using PointMatrix = Eigen::Matrix2Xd;
using Point = Eigen::Vector2d;

/// Undirected edge between two vertex indices, endpoints normalized a < b.
/// The Euclidean length is cached at construction.
struct Edge {
    int a = -1;
    int b = -1;
    double length = 0.0;
};

/// Triangle with counter-clockwise vertex order. Edge slot k joins
/// v[k] and v[(k+1)%3]; e[k] indexes the owning Triangulation's edge table.
struct Triangle {
    std::array<int, 3> v{-1, -1, -1};
    std::array<int, 3> e{-1, -1, -1};
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input has too few points or is totally collinear.
struct DegenerateInput : Error {
    using Error::Error;
};

/// Two input points closer than the duplicate tolerance (1e-9 m).
struct DuplicatePoint : Error {
    using Error::Error;
};

/// Cycle merge requested on an edge absent from one of the cycles.
struct SharedEdgeMissing : Error {
    using Error::Error;
};

/// Boundary resampling step outside (0, 1).
struct InvalidStep : Error {
    using Error::Error;
};

/// Descriptor comparison with mismatched bin counts (configuration error).
struct LengthMismatch : Error {
    using Error::Error;
};

/// Two-point transform solve with coincident source points.
struct DegeneratePair : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace urq
