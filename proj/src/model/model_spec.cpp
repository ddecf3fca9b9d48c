#include "model/model_spec.hpp"

namespace vitscope {

std::string site_name(Site s) {
    switch (s) {
        case Site::ffn_gelu: return "ffn_gelu";
        case Site::ffn_pre_gelu: return "ffn_pre_gelu";
        case Site::key: return "key";
        case Site::query: return "query";
        case Site::value: return "value";
        case Site::block_output: return "block_output";
    }
    throw InternalError("unreachable site");
}

Site site_from_name(const std::string& name) {
    if (name == "ffn_gelu") return Site::ffn_gelu;
    if (name == "ffn_pre_gelu") return Site::ffn_pre_gelu;
    if (name == "key") return Site::key;
    if (name == "query") return Site::query;
    if (name == "value") return Site::value;
    if (name == "block_output") return Site::block_output;
    throw UsageError("unknown readout site: " + name);
}

FeatureLocator locator_from_key(const std::string& key) {
    auto a = key.find(':');
    auto b = key.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos) throw UsageError("bad locator '" + key + "', want layer:channel[:site]");
    FeatureLocator loc;
    try {
        loc.layer = std::stoi(key.substr(0, a));
        loc.channel = std::stoi(key.substr(a + 1, b == std::string::npos ? std::string::npos : b - a - 1));
    } catch (const std::exception&) {
        throw UsageError("bad locator '" + key + "', want layer:channel[:site]");
    }
    loc.site = (b == std::string::npos) ? Site::ffn_gelu : site_from_name(key.substr(b + 1));
    return loc;
}

} // namespace vitscope
