#ifndef GRAPHMARK_KERNELS_HPP
#define GRAPHMARK_KERNELS_HPP

#include <span>

#include <Eigen/Dense>

#include "graphmark/graph.hpp"

namespace graphmark {

// Weisfeiler-Lehman subtree kernel. Initial colors are node degrees;
// feature counts are accumulated over refinement iterations 0..h and the
// kernel is the dot product of the stacked count vectors.
Eigen::MatrixXd wl_kernel(std::span<const Graph> graphs, int iterations);

// Shortest-path kernel: dot product of shortest-path-length histograms over
// unordered node pairs; unreachable pairs are excluded.
Eigen::MatrixXd sp_kernel(std::span<const Graph> graphs);

} // namespace graphmark

#endif // GRAPHMARK_KERNELS_HPP
