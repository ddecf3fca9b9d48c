#include "common/digest.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <memory>
#include <vector>

#include "common/error.hpp"

namespace vitscope {

namespace {

std::string to_hex(const unsigned char* buf, unsigned len) {
    static const char* digits = "0123456789abcdef";
    std::string out(len * 2, '0');
    for (unsigned i = 0; i < len; ++i) {
        out[2 * i] = digits[buf[i] >> 4];
        out[2 * i + 1] = digits[buf[i] & 0xf];
    }
    return out;
}

} // namespace

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
        throw InternalError("sha256 digest failed");
    return to_hex(md, len);
}

std::string sha256_file(const std::string& path) {
    std::unique_ptr<FILE, decltype(&fclose)> f(fopen(path.c_str(), "rb"), fclose);
    if (!f) throw DataError("cannot open file for hashing: " + path);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw InternalError("sha256 init failed");
    std::vector<char> buf(1 << 16);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f.get())) > 0)
        if (EVP_DigestUpdate(ctx.get(), buf.data(), n) != 1)
            throw InternalError("sha256 update failed");
    if (ferror(f.get())) throw DataError("read error while hashing: " + path);
    if (EVP_DigestFinal_ex(ctx.get(), md, &len) != 1)
        throw InternalError("sha256 final failed");
    return to_hex(md, len);
}

} // namespace vitscope
