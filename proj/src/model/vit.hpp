#pragma once

#include <Eigen/Dense>

#include <mutex>
#include <optional>
#include <vector>

#include "common/image.hpp"
#include "model/model_spec.hpp"

namespace vitscope {

using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class GeluKind { exact, quick };

struct ViTConfig {
    int image_size = 0;
    int patch_size = 0;
    int hidden_dim = 0;
    int num_heads = 0;
    int ffn_expansion = 4;
    int num_layers = 0;
    int num_classes = 0; // 0 -> no classification head
    GeluKind gelu = GeluKind::exact;
    bool pre_ln = false; // CLIP towers normalize embedded tokens before block 0
    double ln_eps = 1e-6;
    Preprocess preprocess;

    int grid() const { return image_size / patch_size; }
    int num_patches() const { return grid() * grid(); }
    int num_tokens() const { return num_patches() + 1; }
    int ffn_dim() const { return hidden_dim * ffn_expansion; }

    ModelSpec spec() const;
    void validate() const;
};

struct BlockWeights {
    VectorXd ln1_g, ln1_b, ln2_g, ln2_b;
    MatrixXd qkv_w;  // (3d, d), packed q|k|v, each head-major
    VectorXd qkv_b;  // (3d)
    MatrixXd proj_w; // (d, d)
    VectorXd proj_b;
    MatrixXd fc1_w; // (dff, d)
    VectorXd fc1_b;
    MatrixXd fc2_w; // (d, dff)
    VectorXd fc2_b;
};

struct ViTWeights {
    MatrixXd patch_w; // (d, 3*P*P), inner layout (channel, py, px)
    VectorXd patch_b;
    VectorXd cls_token;
    MatrixXd pos_embed; // (tokens, d), row 0 = CLS
    VectorXd ln_pre_g, ln_pre_b; // only when pre_ln
    std::vector<BlockWeights> blocks;
    VectorXd norm_g, norm_b; // final layer norm
    MatrixXd head_w;         // (classes, d); 0x0 when no head
    VectorXd head_b;
};

struct LayerNormTape {
    MatrixXd normed;
    VectorXd rstd;
};

struct BlockTape {
    MatrixXd x_in;
    LayerNormTape ln1;
    MatrixXd qkv;
    std::vector<MatrixXd> attn_probs; // per head, rows = queries
    MatrixXd x_mid;
    LayerNormTape ln2;
    MatrixXd fc1_out;
    MatrixXd gelu_out;
};

struct ForwardTape {
    std::optional<LayerNormTape> ln_pre;
    std::vector<BlockTape> blocks;
    MatrixXd final_tokens; // after the last block, before the final norm
};

/// Plain pre-norm ViT with explicit forward tape and hand-written backward
/// from any readout site to the input pixels. All math is double precision
/// and single-threaded per call, so outputs are bit-stable.
class ViTModel {
  public:
    ViTModel(ViTConfig cfg, ViTWeights weights);

    const ViTConfig& config() const { return cfg_; }
    const ViTWeights& weights() const { return w_; }
    const ModelSpec& spec() const { return spec_; }

    /// Patch + CLS embedding with position embeddings (and pre-LN if configured).
    MatrixXd embed(const Image& normalized, ForwardTape* tape = nullptr) const;

    /// Runs blocks [from, to) in place. `plan` may isolate CLS in some layers
    /// and inject the constant CLS value at its injection layer.
    void run_blocks(MatrixXd& x, int from, int to, const AttentionSurgeryPlan* plan,
                    ForwardTape* tape) const;

    /// Full forward pass; returns final tokens (pre final-norm).
    MatrixXd forward_tokens(const Image& normalized, const AttentionSurgeryPlan* plan = nullptr,
                            ForwardTape* tape = nullptr) const;

    /// Final norm + classification head applied to one token row.
    VectorXd logits_from_final(const MatrixXd& final_tokens, int token_index) const;

    VectorXd classify(const Image& normalized, const AttentionSurgeryPlan* plan = nullptr) const;

    /// CLS token value after `depth` blocks applied to a CLS-only sequence;
    /// deterministic and input-independent. Cached per depth.
    VectorXd constant_cls(int depth) const;

    /// Activations of one site at one layer, rows = tokens (CLS first).
    const MatrixXd& qkv_at(const ForwardTape& tape, int layer) const;
    MatrixXd site_activations(const ForwardTape& tape, int layer, Site site) const;

    /// Gradient of sum(d_site .* site_activations) with respect to the input
    /// pixels (normalized space). d_site rows = tokens.
    Image backward_from_site(const ForwardTape& tape, int layer, Site site,
                             const MatrixXd& d_site) const;

    bool has_head() const { return w_.head_w.rows() > 0; }

  private:
    MatrixXd patch_vectors(const Image& img) const;
    void block_forward(MatrixXd& x, int layer, bool isolate_cls, BlockTape* tape) const;
    MatrixXd block_backward(int layer, const BlockTape& tape, const MatrixXd& d_out) const;
    MatrixXd attn_sublayer_backward(int layer, const BlockTape& tape, const MatrixXd& d_mid) const;
    Image embed_backward(const ForwardTape& tape, const MatrixXd& d_tokens) const;

    ViTConfig cfg_;
    ViTWeights w_;
    ModelSpec spec_;
    mutable std::mutex cls_cache_mu_;
    mutable std::vector<std::optional<VectorXd>> cls_cache_;
};

// Elementwise pieces shared with tests.
double gelu_value(double x, GeluKind kind);
double gelu_grad(double x, GeluKind kind);

MatrixXd layer_norm_forward(const MatrixXd& x, const VectorXd& gamma, const VectorXd& beta,
                            double eps, LayerNormTape* tape);
MatrixXd layer_norm_backward(const LayerNormTape& tape, const VectorXd& gamma,
                             const MatrixXd& d_out);

} // namespace vitscope
