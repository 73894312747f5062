#include "rbds/dictionary.hpp"

#include <string>

#include "rbds/rng.hpp"

namespace rbds {

Dictionary init_dictionary(const LabeledDataset& train, int atoms_per_class, std::uint64_t seed) {
    if (atoms_per_class < 1) {
        throw ConfigError("init_dictionary: atoms_per_class must be >= 1");
    }
    const auto counts = train.class_counts();
    for (int c = 1; c <= train.class_count; ++c) {
        if (counts[static_cast<std::size_t>(c - 1)] < atoms_per_class) {
            throw ConfigError("init_dictionary: class " + std::to_string(c) + " has " +
                              std::to_string(counts[static_cast<std::size_t>(c - 1)]) +
                              " samples, needs at least " + std::to_string(atoms_per_class));
        }
    }

    SplitMix64 rng(seed);
    Dictionary dict;
    dict.atoms.resize(train.rows(), static_cast<Index>(atoms_per_class) * train.class_count);
    dict.atom_labels.reserve(static_cast<std::size_t>(dict.atoms.cols()));

    Index out = 0;
    for (int c = 1; c <= train.class_count; ++c) {
        auto cols = train.class_columns(c);
        // partial Fisher-Yates: the first atoms_per_class entries are a
        // uniform sample without replacement
        for (int k = 0; k < atoms_per_class; ++k) {
            const std::size_t pick =
                static_cast<std::size_t>(k) +
                static_cast<std::size_t>(rng.next_below(cols.size() - static_cast<std::size_t>(k)));
            std::swap(cols[static_cast<std::size_t>(k)], cols[pick]);
            Vec atom = train.data.col(cols[static_cast<std::size_t>(k)]);
            const double norm = atom.norm();
            if (norm > 0.0) atom /= norm;
            dict.atoms.col(out++) = atom;
            dict.atom_labels.push_back(c);
        }
    }
    return dict;
}

Dictionary training_data_dictionary(const LabeledDataset& train, bool normalize) {
    Dictionary dict;
    dict.atoms = normalize ? normalized_columns(train.data) : train.data;
    dict.atom_labels = train.labels;
    return dict;
}

} // namespace rbds
