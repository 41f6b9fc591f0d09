#pragma once

#include <cstddef>
#include <vector>

#include "somq/map_geometry.hpp"
#include "somq/som_model.hpp"

namespace somq {

/// Mean euclidean distance from each sample to its BMU prototype.
double quantization_error(const CodeBook& codebook, const Dataset& data);

/// Mean over samples of the kernel-weighted sum of squared distances to
/// every prototype, weights taken from the map distance to the sample's BMU.
/// No per-sample normalization by the kernel mass.
double distortion(const CodeBook& codebook, const Dataset& data, KernelKind kernel, double temperature);

/// Fraction of samples whose first and second BMUs are not map neighbors.
double topographic_error(const CodeBook& codebook, const Dataset& data);

/**
 * Cheapest path cost from `source` to every unit, moving only between map
 * neighbors; an edge (a, b) costs the squared distance between the two
 * prototypes. Dijkstra over the lattice graph.
 */
std::vector<double> map_path_costs(const CodeBook& codebook, std::size_t source);

/// Mean of ||x - m_b1||^2 + cheapest neighbor path cost from b1 to b2.
double combined_error(const CodeBook& codebook, const Dataset& data);

/**
 * Trustworthiness with tie-inclusive neighborhoods.
 *
 * Neighborhoods of order k contain every sample whose min-rank (number of
 * strictly closer samples plus one) is at most k, so ties at the cut are all
 * kept. In the projected space samples are compared by the map distance of
 * their BMUs, which produces many ties. Each sample's penalty is scaled by
 * |input neighborhood| / |projected neighborhood|. The normalization constant
 * is the tie-free one, so the result can leave [0, 1] slightly when ties
 * occur; it is not clamped.
 *
 * Requires N >= 3 and 1 <= k < N/2.
 */
double trustworthiness(const CodeBook& codebook, const Dataset& data, std::size_t k);

/// Mirror of trustworthiness: penalizes input neighbors missing from the
/// projected neighborhood by their projected min-rank, with the inverse
/// weight |projected neighborhood| / |input neighborhood|.
double neighborhood_preservation(const CodeBook& codebook, const Dataset& data, std::size_t k);

/**
 * Topographic product of the prototypes. Neighbor orderings on the map and
 * in input space break ties by lowest unit index. Negative values point to
 * a map dimension too low for the data, positive values to one too high.
 * Throws DegenerateCodebookError when two prototypes coincide.
 */
double topographic_product(const CodeBook& codebook);

struct TopographicFunction {
  /// Orders k = 1..max map distance.
  std::vector<std::size_t> order;
  /// Number of (unit, unit') pairs with adjacent receptive fields at map distance > k.
  std::vector<std::size_t> values;
  /// order / max map distance.
  std::vector<double> normalized_order;
  /// values / (K (K - 3^p)); left empty when K <= 3^p.
  std::vector<double> normalized_values;
};

/// TF(k) from a receptive-field connectivity matrix, for any k >= 0.
std::size_t topographic_function_value(const Connectivity& connectivity, const MapGrid& grid,
                                       std::size_t k);

TopographicFunction topographic_function(const CodeBook& codebook, const Dataset& data);

/// Squared Frobenius distance between the max-normalized matrix of squared
/// input distances and the max-normalized matrix of BMU map distances,
/// divided by N (N - 1).
double kruskal_shepard_error(const CodeBook& codebook, const Dataset& data);

/// Sum over sample pairs of input distance times BMU map distance. Larger is better.
double c_measure(const CodeBook& codebook, const Dataset& data);

}  // namespace somq
