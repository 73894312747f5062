#pragma once

#include <cstdint>
#include <vector>

#include "rbds/matrix.hpp"

namespace rbds {

/// Atom matrix D (d x m) with a 1-based class id per atom.
struct Dictionary {
    Mat atoms;
    std::vector<int> atom_labels;

    Index dim() const { return atoms.rows(); }
    Index atom_count() const { return atoms.cols(); }
};

/// Seeded dictionary initialization: for each class, samples atoms_per_class
/// training columns uniformly without replacement and normalizes each to unit
/// Euclidean length. Atoms come out class-sorted. Throws ConfigError naming
/// the class when one has fewer than atoms_per_class samples.
Dictionary init_dictionary(const LabeledDataset& train, int atoms_per_class, std::uint64_t seed);

/// The whole (column-normalized) training matrix as the dictionary, with
/// atom labels equal to the sample labels.
Dictionary training_data_dictionary(const LabeledDataset& train, bool normalize);

} // namespace rbds
