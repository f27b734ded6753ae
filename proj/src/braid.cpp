#include "traintrack/braid.hpp"

#include <cstdlib>

namespace traintrack::braids {

namespace {

void check_letter(const BraidLetter& letter, int strands) {
    if (letter.index < 1 || letter.index >= strands)
        fail(ErrorCode::WidthViolation,
             "braid letter index " + std::to_string(letter.index) + " out of range for " +
                 std::to_string(strands) + " strands");
    if (letter.sign != 1 && letter.sign != -1)
        fail(ErrorCode::WidthViolation, "braid letter sign must be +1 or -1");
}

} // namespace

ColouredBraid identity_braid(const ColourWord& source) { return ColouredBraid{source, {}}; }

std::vector<int> permutation_of(const ColouredBraid& b) {
    const int n = static_cast<int>(b.source.size());
    std::vector<int> at_position(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) at_position[static_cast<std::size_t>(p)] = p;
    for (const BraidLetter& letter : b.word) {
        check_letter(letter, n);
        std::swap(at_position[static_cast<std::size_t>(letter.index - 1)],
                  at_position[static_cast<std::size_t>(letter.index)]);
    }
    std::vector<int> result(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) result[static_cast<std::size_t>(at_position[static_cast<std::size_t>(p)])] = p;
    return result;
}

ColourWord target_of(const ColouredBraid& b) {
    std::vector<int> perm = permutation_of(b);
    ColourWord target(b.source.size());
    for (std::size_t i = 0; i < b.source.size(); ++i)
        target[static_cast<std::size_t>(perm[i])] = b.source[i];
    return target;
}

ColouredBraid compose_braids(const ColouredBraid& b1, const ColouredBraid& b2) {
    if (target_of(b1) != b2.source)
        fail(ErrorCode::BoundaryMismatch, "compose_braids: target word of the first braid "
                                          "differs from the source word of the second");
    ColouredBraid result{b1.source, b1.word};
    result.word.insert(result.word.end(), b2.word.begin(), b2.word.end());
    return result;
}

ColouredBraid tensor_braids(const ColouredBraid& b1, const ColouredBraid& b2) {
    ColouredBraid result{b1.source, b1.word};
    result.source.insert(result.source.end(), b2.source.begin(), b2.source.end());
    const int shift = static_cast<int>(b1.source.size());
    for (const BraidLetter& letter : b2.word)
        result.word.push_back(BraidLetter{letter.index + shift, letter.sign});
    return result;
}

ColouredBraid invert(const ColouredBraid& b) {
    ColouredBraid result{target_of(b), {}};
    for (auto it = b.word.rbegin(); it != b.word.rend(); ++it)
        result.word.push_back(BraidLetter{it->index, -it->sign});
    return result;
}

ColouredBraid block_braiding(const ColourWord& v, const ColourWord& w, int handedness) {
    if (handedness != 1 && handedness != -1)
        fail(ErrorCode::PreconditionViolation, "handedness must be +1 or -1");
    const int n = static_cast<int>(v.size());
    const int m = static_cast<int>(w.size());
    ColouredBraid result;
    result.source = v;
    result.source.insert(result.source.end(), w.begin(), w.end());
    // The j-th strand of the w-block descends past the whole v-block before
    // the (j+1)-st starts, so the block crosses as one rigid piece.
    for (int j = 1; j <= m; ++j)
        for (int i = n + j - 1; i >= j; --i)
            result.word.push_back(BraidLetter{i, handedness});
    return result;
}

void free_append(FreeGroupWord& w, int letter) {
    if (!w.empty() && w.back() == -letter)
        w.pop_back();
    else
        w.push_back(letter);
}

FreeGroupWord apply_letter(const BraidLetter& letter, const FreeGroupWord& w, int strands) {
    check_letter(letter, strands);
    const int i = letter.index;
    FreeGroupWord out;
    auto image_of_generator = [&](int g) -> std::vector<int> {
        if (letter.sign > 0) {
            if (g == i) return {i, i + 1, -i};
            if (g == i + 1) return {i};
        } else {
            if (g == i) return {i + 1};
            if (g == i + 1) return {-(i + 1), i, i + 1};
        }
        return {g};
    };
    for (int signed_gen : w) {
        const int g = std::abs(signed_gen);
        if (g < 1 || g > strands)
            fail(ErrorCode::WidthViolation, "free-group generator out of range");
        std::vector<int> image = image_of_generator(g);
        if (signed_gen > 0) {
            for (int x : image) free_append(out, x);
        } else {
            for (auto it = image.rbegin(); it != image.rend(); ++it) free_append(out, -*it);
        }
    }
    return out;
}

FreeGroupWord apply_braid(const ColouredBraid& b, const FreeGroupWord& w) {
    const int strands = static_cast<int>(b.source.size());
    FreeGroupWord cur = w;
    for (const BraidLetter& letter : b.word) cur = apply_letter(letter, cur, strands);
    return cur;
}

bool braids_equal(const ColouredBraid& b1, const ColouredBraid& b2) {
    if (b1.source != b2.source) return false;
    if (target_of(b1) != target_of(b2)) return false;
    ColouredBraid difference{b1.source, b1.word};
    for (auto it = b2.word.rbegin(); it != b2.word.rend(); ++it)
        difference.word.push_back(BraidLetter{it->index, -it->sign});
    const int strands = static_cast<int>(b1.source.size());
    for (int g = 1; g <= strands; ++g) {
        FreeGroupWord image = apply_braid(difference, FreeGroupWord{g});
        if (image != FreeGroupWord{g}) return false;
    }
    return true;
}

bool is_identity(const ColouredBraid& b) { return braids_equal(b, identity_braid(b.source)); }

} // namespace traintrack::braids
