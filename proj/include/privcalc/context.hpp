#pragma once

namespace privcalc {

class FactFamily;
class Arrangement;

/// How mergence combines the condition sets of two atoms.
enum class MergeMode : unsigned char {
    Intersection,  // R1 ∩ R2
    Union,         // R1 ∪ R2
};

/// What a condition may need besides the fact it is evaluated on. Guard
/// conditions built without an explicit arrangement take it from here.
struct EvalContext {
    const FactFamily* family = nullptr;
    const Arrangement* arrangement = nullptr;
    MergeMode merge_mode = MergeMode::Intersection;
};

}  // namespace privcalc
