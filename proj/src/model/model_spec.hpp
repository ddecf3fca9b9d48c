#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common/error.hpp"

namespace vitscope {

/// Internal readout sites of a transformer block. ffn_gelu (the activations
/// right after the feed-forward nonlinearity) is the default visualization
/// target; key/query/value exist to reproduce their failure mode.
enum class Site {
    ffn_gelu,
    ffn_pre_gelu,
    key,
    query,
    value,
    block_output,
};

std::string site_name(Site s);
Site site_from_name(const std::string& name);

/// Static shape description of an instrumented model.
struct ModelSpec {
    int patch_size = 0;
    int image_size = 0;
    int num_layers = 0;
    int hidden_dim = 0;
    int ffn_expansion = 0;
    bool has_cls_token = false;
    std::pair<int, int> grid_dims{0, 0};

    int grid_rows() const { return grid_dims.first; }
    int grid_cols() const { return grid_dims.second; }
    int num_patches() const { return grid_dims.first * grid_dims.second; }

    /// Channel count of a readout site.
    int site_width(Site s) const {
        switch (s) {
            case Site::ffn_gelu:
            case Site::ffn_pre_gelu:
                return hidden_dim * ffn_expansion;
            default:
                return hidden_dim;
        }
    }
};

/// Address of one internal feature: block index, channel within the site.
struct FeatureLocator {
    int layer = 0;
    int channel = 0;
    Site site = Site::ffn_gelu;

    bool operator==(const FeatureLocator&) const = default;

    std::string key() const {
        return std::to_string(layer) + ":" + std::to_string(channel) + ":" + site_name(site);
    }

    void validate(const ModelSpec& spec) const {
        if (layer < 0 || layer >= spec.num_layers)
            throw UsageError("locator layer " + std::to_string(layer) + " out of range (model has " +
                             std::to_string(spec.num_layers) + " layers)");
        const int width = spec.site_width(site);
        if (channel < 0 || channel >= width)
            throw UsageError("locator channel " + std::to_string(channel) + " out of range for site " +
                             site_name(site) + " (width " + std::to_string(width) + ")");
    }
};

FeatureLocator locator_from_key(const std::string& key);

/// Attention surgery: layers where the CLS token is removed from attention,
/// plus an optional layer at which a precomputed constant CLS value is
/// written into the sequence before the block runs.
struct AttentionSurgeryPlan {
    std::set<int> cls_isolated_layers;
    std::optional<int> cls_constant_injection_layer;

    bool empty() const {
        return cls_isolated_layers.empty() && !cls_constant_injection_layer.has_value();
    }

    void validate(const ModelSpec& spec) const {
        for (int l : cls_isolated_layers)
            if (l < 0 || l >= spec.num_layers)
                throw UsageError("surgery plan references layer " + std::to_string(l) +
                                 " out of range");
        if (cls_constant_injection_layer) {
            int l = *cls_constant_injection_layer;
            if (l < 0 || l >= spec.num_layers)
                throw UsageError("injection layer " + std::to_string(l) + " out of range");
            if (cls_isolated_layers.count(l))
                throw UsageError("injection layer " + std::to_string(l) +
                                 " must not be in the isolated set");
        }
        if (!spec.has_cls_token && !empty())
            throw ModelError("surgery plan requires a CLS token");
    }
};

/// Per-patch scalar activations of one feature on the patch lattice. The
/// CLS value, when the site carries one, is reported separately and never
/// inside the grid.
struct PatchActivationGrid {
    int rows = 0;
    int cols = 0;
    std::vector<double> values; // row-major
    std::optional<double> cls_value;

    double at(int r, int c) const { return values[static_cast<size_t>(r) * cols + c]; }
    double& at(int r, int c) { return values[static_cast<size_t>(r) * cols + c]; }
    double sum() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
};

} // namespace vitscope
