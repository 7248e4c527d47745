#pragma once

namespace dhermite {

// Every disputed identity is carried in two forms: the form as printed in
// the source material ("paper") and the independently derived form the
// verification harness adjudicates against ("corrected").  For the
// negative-order functions "corrected" selects the L-consistent kernel.
enum class Variant { paper, corrected };

}  // namespace dhermite
